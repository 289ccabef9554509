#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "quadratic.hpp"

namespace latq {

/// Root lattice A_k (positive definite Cartan Gram).
inline QuadraticLattice lattice_A(std::size_t k) {
    if (k == 0) throw std::invalid_argument("lattice_A: k >= 1");
    QMat g(k, k, Rat(0));
    for (std::size_t i = 0; i < k; ++i) {
        g(i, i) = 2;
        if (i + 1 < k) {
            g(i, i + 1) = -1;
            g(i + 1, i) = -1;
        }
    }
    return QuadraticLattice(g);
}

/// Root lattice D_k, k >= 2 (D_2 = A_1^2, D_3 = A_3).
inline QuadraticLattice lattice_D(std::size_t k) {
    if (k < 2) throw std::invalid_argument("lattice_D: k >= 2");
    QMat g(k, k, Rat(0));
    for (std::size_t i = 0; i < k; ++i) g(i, i) = 2;
    // path 0 - 1 - ... - (k-2), with node k-1 forking off node k-3
    for (std::size_t i = 0; i + 2 < k; ++i) {
        g(i, i + 1) = -1;
        g(i + 1, i) = -1;
    }
    if (k >= 3) {
        g(k - 3, k - 1) = -1;
        g(k - 1, k - 3) = -1;
    }
    return QuadraticLattice(g);
}

/// Root lattice E_k for k = 6, 7, 8 (Bourbaki node numbering).
inline QuadraticLattice lattice_E(std::size_t k) {
    if (k < 6 || k > 8) throw std::invalid_argument("lattice_E: k in {6,7,8}");
    QMat g(k, k, Rat(0));
    for (std::size_t i = 0; i < k; ++i) g(i, i) = 2;
    auto edge = [&](std::size_t a, std::size_t b) {
        g(a - 1, b - 1) = -1;
        g(b - 1, a - 1) = -1;
    };
    edge(1, 3);
    edge(3, 4);
    edge(4, 5);
    edge(2, 4);
    edge(5, 6);
    if (k >= 7) edge(6, 7);
    if (k == 8) edge(7, 8);
    return QuadraticLattice(g);
}

/// Hyperbolic plane U.
inline QuadraticLattice lattice_U() {
    return QuadraticLattice(QMat{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}});
}

/// Rank-one lattice <n>.
inline QuadraticLattice lattice_scalar(long n) {
    return QuadraticLattice(QMat{{Rat(n)}});
}

/// The even unimodular lattice of signature (2,26): U + U + E8(-1)^3.
inline QuadraticLattice lattice_II_2_26() {
    QuadraticLattice e8m = rescale(lattice_E(8), -1);
    return direct_sum(direct_sum(lattice_U(), lattice_U()),
                      direct_sum(direct_sum(e8m, e8m), e8m));
}

/// Parse labels like "A2", "D4(-1)", "A1+A1+A3", "<16>", "E8(-1)".
inline QuadraticLattice lattice_from_label(const std::string& label) {
    QuadraticLattice out;
    bool first = true;
    std::size_t pos = 0;
    auto take_summand = [&](const std::string& tok) {
        long scale = 1;
        std::string base = tok;
        auto paren = tok.find('(');
        if (paren != std::string::npos) {
            base = tok.substr(0, paren);
            std::string s = tok.substr(paren + 1, tok.size() - paren - 2);
            scale = std::stol(s);
        }
        QuadraticLattice q;
        if (base == "U")
            q = lattice_U();
        else if (base.size() >= 3 && base.front() == '<' && base.back() == '>')
            q = lattice_scalar(std::stol(base.substr(1, base.size() - 2)));
        else if (base[0] == 'A')
            q = lattice_A(std::stoul(base.substr(1)));
        else if (base[0] == 'D')
            q = lattice_D(std::stoul(base.substr(1)));
        else if (base[0] == 'E')
            q = lattice_E(std::stoul(base.substr(1)));
        else
            throw std::invalid_argument("lattice_from_label: unknown summand " + tok);
        if (scale != 1) q = rescale(q, scale);
        if (first) {
            out = q;
            first = false;
        } else {
            out = direct_sum(out, q);
        }
    };
    while (pos < label.size()) {
        auto next = label.find('+', pos);
        if (next == std::string::npos) next = label.size();
        take_summand(label.substr(pos, next - pos));
        pos = next + 1;
    }
    if (first) throw std::invalid_argument("lattice_from_label: empty label");
    return out;
}

}  // namespace latq
