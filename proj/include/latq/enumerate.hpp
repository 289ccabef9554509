#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "quadratic.hpp"

namespace latq {

inline Int rat_round(const Rat& q) {
    return rat_floor(q + make_rat(1, 2));
}

/// Exact LLL reduction (delta = 3/4) operating on the Gram matrix alone.
/// Returns the unimodular transform U with U^T G U reduced; columns of U are
/// the reduced basis in original coordinates. Input must be definite.
inline IMat lll_transform(QMat g) {
    std::size_t n = g.rows();
    IMat u = IMat::identity(n, Int(1), Int(0));
    if (n <= 1) return u;
    bool neg = false;
    {
        Inertia in = inertia(g);
        if (in.zero != 0 || (in.positive != 0 && in.negative != 0))
            throw std::domain_error("lll_transform: indefinite Gram");
        neg = in.negative > 0;
    }
    if (neg) g = g.map([](const Rat& v) { return Rat(-v); });

    std::vector<std::vector<Rat>> mu(n, std::vector<Rat>(n, Rat(0)));
    std::vector<Rat> b(n, Rat(0));
    auto recompute = [&]() {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                Rat v = g(i, j);
                for (std::size_t k = 0; k < j; ++k) v -= mu[i][k] * mu[j][k] * b[k];
                mu[i][j] = v / b[j];
            }
            Rat v = g(i, i);
            for (std::size_t k = 0; k < i; ++k) v -= mu[i][k] * mu[i][k] * b[k];
            b[i] = v;
        }
    };
    auto basis_op = [&](std::size_t dst, std::size_t src, const Int& c) {
        // basis_dst -= c * basis_src
        for (std::size_t i = 0; i < n; ++i) u(i, dst) -= c * u(i, src);
        Rat rc(c);
        for (std::size_t i = 0; i < n; ++i) {
            g(dst, i) -= rc * g(src, i);
        }
        for (std::size_t i = 0; i < n; ++i) {
            g(i, dst) -= rc * g(i, src);
        }
    };
    recompute();
    std::size_t k = 1;
    const Rat delta = make_rat(3, 4);
    while (k < n) {
        for (std::size_t j = k; j-- > 0;) {
            Int c = rat_round(mu[k][j]);
            if (c != 0) {
                basis_op(k, j, c);
                recompute();
            }
        }
        if (b[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * b[k - 1]) {
            ++k;
        } else {
            u.swap_cols(k, k - 1);
            g.swap_rows(k, k - 1);
            g.swap_cols(k, k - 1);
            recompute();
            k = std::max<std::size_t>(k - 1, 1);
        }
    }
    return u;
}

struct ShortVectorReport {
    Int norm_target;
    std::vector<std::vector<Int>> vectors;  // one representative per +- pair
    std::size_t count_total = 0;            // 2 * vectors.size()
};

namespace detail {

/// Quadratic completion of a positive definite Gram: Q(x) = sum_i d_i (x_i +
/// sum_{j>i} c_{ij} x_j)^2 with all d_i > 0.
struct Completion {
    std::vector<Rat> d;
    std::vector<std::vector<Rat>> c;
};

inline Completion complete_squares(const QMat& g) {
    std::size_t n = g.rows();
    Completion out;
    out.d.assign(n, Rat(0));
    out.c.assign(n, std::vector<Rat>(n, Rat(0)));
    QMat a = g;
    for (std::size_t i = 0; i < n; ++i) {
        out.d[i] = a(i, i);
        if (out.d[i] <= 0) throw std::domain_error("complete_squares: not positive definite");
        for (std::size_t j = i + 1; j < n; ++j) out.c[i][j] = a(i, j) / out.d[i];
        for (std::size_t r = i + 1; r < n; ++r)
            for (std::size_t s = i + 1; s < n; ++s)
                a(r, s) -= out.d[i] * out.c[i][r] * out.c[i][s];
    }
    return out;
}

inline void enumerate_rec(const Completion& cp, std::size_t level, const Rat& budget,
                          std::vector<Int>& x, std::vector<std::vector<Int>>& out) {
    // offset U = sum_{j>level} c[level][j] x_j
    Rat off(0);
    for (std::size_t j = level + 1; j < x.size(); ++j) off += cp.c[level][j] * Rat(x[j]);
    Rat cap = budget / cp.d[level];
    if (cap < 0) return;
    Int lo = smallest_in_interval(off, cap);
    Int hi = largest_in_interval(off, cap);
    for (Int v = lo; v <= hi; ++v) {
        x[level] = v;
        Rat term = cp.d[level] * (Rat(v) + off) * (Rat(v) + off);
        Rat rem = budget - term;
        if (level == 0) {
            if (rem == 0) out.push_back(x);
        } else {
            enumerate_rec(cp, level - 1, rem, x, out);
        }
    }
    x[level] = 0;
}

}  // namespace detail

/**
 * Exhaustive enumeration of vectors of a given norm in a definite lattice,
 * one representative per +-pair. Exact Fincke-Pohst with rational arithmetic;
 * for rank > 8 the Gram is LLL-reduced first and solutions are mapped back.
 * Indefinite input is rejected.
 */
inline ShortVectorReport short_vectors(const QuadraticLattice& q, const Int& norm) {
    ShortVectorReport report;
    report.norm_target = norm;
    if (q.rank() == 0) return report;
    Inertia in = inertia(q.gram());
    if (in.zero != 0 || (in.positive != 0 && in.negative != 0))
        throw std::domain_error("short_vectors: lattice is not definite");
    bool negdef = in.negative > 0;
    Int target = negdef ? Int(-norm) : norm;
    if (target <= 0) return report;  // definite: only the zero vector has norm <= 0
    QMat g = negdef ? q.gram().map([](const Rat& v) { return Rat(-v); }) : q.gram();

    IMat u = IMat::identity(q.rank(), Int(1), Int(0));
    if (q.rank() > 8) {
        u = lll_transform(g);
        g = to_rational(u).transpose() * g * to_rational(u);
    }
    detail::Completion cp = detail::complete_squares(g);
    std::vector<Int> x(q.rank(), Int(0));
    std::vector<std::vector<Int>> raw;
    detail::enumerate_rec(cp, q.rank() - 1, Rat(target), x, raw);
    for (auto& v : raw) {
        std::vector<Int> w(q.rank(), Int(0));
        for (std::size_t i = 0; i < q.rank(); ++i)
            for (std::size_t j = 0; j < q.rank(); ++j) w[i] += u(i, j) * v[j];
        // canonical representative: first nonzero coordinate positive
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] == 0) continue;
            if (w[i] < 0)
                for (auto& c : w) c = -c;
            break;
        }
        report.vectors.push_back(std::move(w));
    }
    std::sort(report.vectors.begin(), report.vectors.end());
    report.vectors.erase(std::unique(report.vectors.begin(), report.vectors.end()),
                         report.vectors.end());
    report.count_total = 2 * report.vectors.size();
    return report;
}

/// Number of (-2)-vectors of a definite lattice (norm +2 if positive definite).
inline std::size_t root_count(const QuadraticLattice& q) {
    if (q.rank() == 0) return 0;
    Inertia in = inertia(q.gram());
    Int target = in.negative > 0 ? Int(-2) : Int(2);
    return short_vectors(q, target).count_total;
}

struct RootSystemReport {
    std::vector<std::string> components;  // sorted labels, e.g. {"A2","A2"}
    std::size_t root_rank = 0;            // rank of the span of all roots
    bool spans_lattice = false;
    std::string label() const {
        std::string s;
        for (std::size_t i = 0; i < components.size(); ++i)
            s += (i ? "+" : "") + components[i];
        return s.empty() ? "0" : s;
    }
};

/// Decompose the root system of a definite lattice into irreducible ADE
/// components, classified by rank and root count.
inline RootSystemReport root_system_identify(const QuadraticLattice& q) {
    RootSystemReport report;
    if (q.rank() == 0) {
        report.spans_lattice = true;
        return report;
    }
    Inertia in = inertia(q.gram());
    if (in.zero != 0 || (in.positive != 0 && in.negative != 0))
        throw std::domain_error("root_system_identify: lattice is not definite");
    Int target = in.negative > 0 ? Int(-2) : Int(2);
    auto roots = short_vectors(q, target).vectors;
    std::size_t m = roots.size();
    std::vector<std::size_t> parent(m);
    for (std::size_t i = 0; i < m; ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    std::vector<std::vector<Rat>> rq(m);
    for (std::size_t i = 0; i < m; ++i) rq[i].assign(roots[i].begin(), roots[i].end());
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (pairing(q, rq[i], rq[j]) != 0) parent[find(i)] = find(j);
    std::map<std::size_t, std::vector<std::size_t>> comps;
    for (std::size_t i = 0; i < m; ++i) comps[find(i)].push_back(i);

    QMat span(q.rank(), m);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < q.rank(); ++i) span(i, j) = Rat(roots[j][i]);
    report.root_rank = m == 0 ? 0 : rank(span);
    report.spans_lattice = report.root_rank == q.rank();

    for (const auto& [key, members] : comps) {
        QMat cm(q.rank(), members.size());
        for (std::size_t j = 0; j < members.size(); ++j)
            for (std::size_t i = 0; i < q.rank(); ++i) cm(i, j) = Rat(roots[members[j]][i]);
        std::size_t k = rank(cm);
        std::size_t count = 2 * members.size();
        std::string label;
        if (count == k * (k + 1))
            label = "A" + std::to_string(k);
        else if (k >= 4 && count == 2 * k * (k - 1))
            label = "D" + std::to_string(k);
        else if (k == 6 && count == 72)
            label = "E6";
        else if (k == 7 && count == 126)
            label = "E7";
        else if (k == 8 && count == 240)
            label = "E8";
        else
            label = "R(rank " + std::to_string(k) + ", " + std::to_string(count) + " roots)";
        report.components.push_back(label);
    }
    std::sort(report.components.begin(), report.components.end());
    return report;
}

/**
 * Exact isometry test for definite lattices by backtracking: images for the
 * basis of q1 are searched among vectors of q2 of matching norm, subject to
 * all pairings fixed so far. Candidates are scanned in (norm, lex) order, so
 * the search is deterministic.
 */
inline bool is_isometric(const QuadraticLattice& q1, const QuadraticLattice& q2) {
    if (q1.rank() != q2.rank()) return false;
    if (q1.rank() == 0) return true;
    Inertia i1 = inertia(q1.gram());
    Inertia i2 = inertia(q2.gram());
    if (i1.zero != 0 || (i1.positive != 0 && i1.negative != 0) || i2.zero != 0 ||
        (i2.positive != 0 && i2.negative != 0))
        throw std::domain_error("is_isometric: both lattices must be definite");
    if ((i1.negative > 0) != (i2.negative > 0)) return false;
    if (determinant(q1) != determinant(q2)) return false;

    bool neg = i1.negative > 0;
    QMat g1 = neg ? q1.gram().map([](const Rat& v) { return Rat(-v); }) : q1.gram();
    QMat g2 = neg ? q2.gram().map([](const Rat& v) { return Rat(-v); }) : q2.gram();
    QuadraticLattice p2(g2);
    std::size_t n = q1.rank();

    std::map<Int, std::vector<std::vector<Int>>> by_norm;
    for (std::size_t i = 0; i < n; ++i) {
        Rat nr = g1(i, i);
        if (!is_integer(nr)) return false;  // q2 integral candidates cannot match
        Int key = nr.get_num();
        if (by_norm.count(key)) continue;
        auto rep = short_vectors(p2, key);
        std::vector<std::vector<Int>> both;
        for (const auto& v : rep.vectors) {
            both.push_back(v);
            std::vector<Int> w(v.size());
            for (std::size_t t = 0; t < v.size(); ++t) w[t] = -v[t];
            both.push_back(std::move(w));
        }
        std::sort(both.begin(), both.end());
        by_norm[key] = std::move(both);
    }

    std::vector<std::vector<Int>> chosen;
    std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
        if (i == n) return true;
        const auto& cands = by_norm[g1(i, i).get_num()];
        for (const auto& c : cands) {
            bool ok = true;
            std::vector<Rat> cq(c.begin(), c.end());
            for (std::size_t j = 0; j < i && ok; ++j) {
                std::vector<Rat> pj(chosen[j].begin(), chosen[j].end());
                if (pairing(p2, cq, pj) != g1(i, j)) ok = false;
            }
            if (!ok) continue;
            chosen.push_back(c);
            if (place(i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return place(0);
}

}  // namespace latq
