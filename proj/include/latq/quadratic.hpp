#pragma once

#include <stdexcept>
#include <vector>

#include "matrix.hpp"

namespace latq {

struct Signature {
    std::size_t positive = 0, negative = 0;
    friend bool operator==(const Signature& x, const Signature& y) {
        return x.positive == y.positive && x.negative == y.negative;
    }
};

/**
 * QuadraticLattice: a free Z-module with a symmetric rational Gram matrix.
 * Rank 0 is allowed (it arises as a full complement); most predicates on it
 * are the empty-product conventions (det 1, signature (0,0)).
 */
class QuadraticLattice {
public:
    QuadraticLattice() = default;
    explicit QuadraticLattice(QMat gram) : gram_(std::move(gram)) {
        if (gram_.rows() != gram_.cols())
            throw std::invalid_argument("QuadraticLattice: non-square Gram");
        for (std::size_t i = 0; i < gram_.rows(); ++i)
            for (std::size_t j = i + 1; j < gram_.cols(); ++j)
                if (gram_(i, j) != gram_(j, i))
                    throw std::invalid_argument("QuadraticLattice: Gram not symmetric");
    }
    explicit QuadraticLattice(const IMat& gram) : QuadraticLattice(to_rational(gram)) {}

    std::size_t rank() const { return gram_.rows(); }
    const QMat& gram() const { return gram_; }

    bool is_integral() const { return latq::is_integral(gram_); }

    friend bool operator==(const QuadraticLattice& x, const QuadraticLattice& y) {
        return x.gram_ == y.gram_;
    }

private:
    QMat gram_;
};

inline Rat determinant(const QuadraticLattice& q) {
    if (q.rank() == 0) return Rat(1);
    return det(q.gram());
}

inline Signature signature(const QuadraticLattice& q) {
    Inertia in = inertia(q.gram());
    if (in.zero != 0) throw std::domain_error("signature: degenerate lattice");
    return {in.positive, in.negative};
}

inline bool is_definite(const QuadraticLattice& q) {
    if (q.rank() == 0) return true;
    Inertia in = inertia(q.gram());
    return in.zero == 0 && (in.positive == 0 || in.negative == 0);
}

inline bool is_even(const QuadraticLattice& q) {
    if (!q.is_integral()) return false;
    for (std::size_t i = 0; i < q.rank(); ++i)
        if (!is_even_integer(q.gram()(i, i))) return false;
    return true;
}

inline bool is_unimodular(const QuadraticLattice& q) {
    return q.is_integral() && abs(determinant(q)) == 1;
}

inline std::vector<Int> discriminant_group(const QuadraticLattice& q) {
    if (!q.is_integral()) throw std::domain_error("discriminant_group: non-integral Gram");
    return invariant_factors(to_integral(q.gram()));
}

/// Minimal number of generators of the discriminant group.
inline std::size_t ell_invariant(const QuadraticLattice& q) {
    return discriminant_group(q).size();
}

inline QuadraticLattice rescale(const QuadraticLattice& q, const Int& a) {
    if (a == 0) throw std::domain_error("rescale: zero scale");
    return QuadraticLattice(q.gram().map([&](const Rat& v) { return Rat(Rat(a) * v); }));
}

inline QuadraticLattice direct_sum(const QuadraticLattice& x, const QuadraticLattice& y) {
    return QuadraticLattice(block_diag(x.gram(), y.gram()));
}

inline Rat norm_of(const QuadraticLattice& q, const std::vector<Rat>& v) {
    Rat n(0);
    for (std::size_t i = 0; i < q.rank(); ++i)
        for (std::size_t j = 0; j < q.rank(); ++j) n += v[i] * q.gram()(i, j) * v[j];
    return n;
}

inline Rat pairing(const QuadraticLattice& q, const std::vector<Rat>& v,
                   const std::vector<Rat>& w) {
    Rat n(0);
    for (std::size_t i = 0; i < q.rank(); ++i)
        for (std::size_t j = 0; j < q.rank(); ++j) n += v[i] * q.gram()(i, j) * w[j];
    return n;
}

/// Matrix of the reflection sigma_r(x) = x - 2 (x,r)/(r,r) r on the fixed basis.
inline QMat sigma_reflection(const QuadraticLattice& q, const std::vector<Int>& r) {
    std::vector<Rat> rr(r.begin(), r.end());
    Rat nrm = norm_of(q, rr);
    if (nrm == 0) throw std::domain_error("sigma_reflection: isotropic vector");
    std::size_t n = q.rank();
    QMat m = QMat::identity(n, Rat(1), Rat(0));
    // (e_j, r) is the j-th entry of G r
    std::vector<Rat> gr(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gr[i] += q.gram()(i, j) * rr[j];
    for (std::size_t j = 0; j < n; ++j) {
        Rat coef = Rat(2) * gr[j] / nrm;
        for (std::size_t i = 0; i < n; ++i) m(i, j) -= coef * rr[i];
    }
    return m;
}

inline bool is_isometry(const QuadraticLattice& q, const QMat& g) {
    if (g.rows() != q.rank() || g.cols() != q.rank()) return false;
    return g.transpose() * q.gram() * g == q.gram();
}

/// Congruence diagonalization: returns basis columns B with B^T G B diagonal.
/// Deterministic, so the positive-definite reference subspace it induces is
/// reproducible across runs.
inline std::pair<QMat, std::vector<Rat>> diagonalizing_basis(const QuadraticLattice& q) {
    std::size_t n = q.rank();
    QMat g = q.gram();
    QMat b = QMat::identity(n, Rat(1), Rat(0));
    std::vector<Rat> diag(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (g(i, i) == 0) {
            std::size_t j = i + 1;
            while (j < n && g(i, j) == 0) ++j;
            if (j == n) {
                diag[i] = 0;
                continue;
            }
            Rat s = (g(j, j) + Rat(2) * g(i, j) != 0) ? Rat(1) : Rat(-1);
            for (std::size_t c = 0; c < n; ++c) g(i, c) += s * g(j, c);
            for (std::size_t r = 0; r < n; ++r) g(r, i) += s * g(r, j);
            for (std::size_t r = 0; r < n; ++r) b(r, i) += s * b(r, j);
        }
        Rat piv = g(i, i);
        diag[i] = piv;
        for (std::size_t r = i + 1; r < n; ++r) {
            if (g(r, i) == 0) continue;
            Rat f = g(r, i) / piv;
            for (std::size_t c = 0; c < n; ++c) g(r, c) -= f * g(i, c);
            for (std::size_t c = 0; c < n; ++c) g(c, r) -= f * g(c, i);
            for (std::size_t c = 0; c < n; ++c) b(c, r) -= f * b(c, i);
        }
    }
    return {b, diag};
}

/// Membership in O^+: the isometry preserves the orientation of a fixed maximal
/// positive-definite subspace P, tested as det > 0 of the projection of g(P)
/// onto P along P^perp.
inline bool in_O_plus(const QuadraticLattice& q, const QMat& g) {
    if (!is_isometry(q, g)) throw std::domain_error("in_O_plus: not an isometry");
    auto [basis, diag] = diagonalizing_basis(q);
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < diag.size(); ++i)
        if (diag[i] > 0) pos.push_back(i);
    std::size_t k = pos.size();
    if (k == 0) return true;
    QMat p(q.rank(), k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < q.rank(); ++i) p(i, j) = basis(i, pos[j]);
    QMat gp = p.transpose() * q.gram() * p;           // Gram of P (diagonal, positive)
    QMat proj = inverse(gp) * (p.transpose() * q.gram() * (g * p));
    return det(proj) > 0;
}

/// Membership in the discriminant kernel ~O(M): g integral, and g - id maps the
/// dual lattice into M, i.e. (g - id) G^{-1} is integral.
inline bool in_discriminant_kernel(const QuadraticLattice& q, const QMat& g) {
    if (!is_isometry(q, g)) throw std::domain_error("in_discriminant_kernel: not an isometry");
    if (!latq::is_integral(g)) throw std::domain_error("in_discriminant_kernel: non-integral map");
    QMat delta = g - QMat::identity(q.rank(), Rat(1), Rat(0));
    return latq::is_integral(delta * inverse(q.gram()));
}

inline bool in_tilde_O_plus(const QuadraticLattice& q, const QMat& g) {
    return in_discriminant_kernel(q, g) && in_O_plus(q, g);
}

/// Overlattice Q + Z*glue of index `index`. The glue vector is given in lattice
/// coordinates; it must have order exactly `index` modulo Q, integral pairings
/// with Q and (for even Q) even integral self-pairing.
inline QuadraticLattice overlattice(const QuadraticLattice& q, const std::vector<Rat>& glue,
                                    const Int& index) {
    std::size_t n = q.rank();
    if (glue.size() != n) throw std::invalid_argument("overlattice: glue size mismatch");
    if (index < 1) throw std::domain_error("overlattice: index must be positive");
    Int order = 1;
    for (const Rat& c : glue) order = order / gcd(order, c.get_den()) * c.get_den();  // lcm
    if (order != index) throw std::domain_error("overlattice: glue order differs from index");
    for (std::size_t i = 0; i < n; ++i) {
        Rat pr(0);
        for (std::size_t j = 0; j < n; ++j) pr += q.gram()(i, j) * glue[j];
        if (!is_integer(pr)) throw std::domain_error("overlattice: glue pairing not integral");
    }
    Rat self = norm_of(q, glue);
    if (!is_integer(self)) throw std::domain_error("overlattice: glue norm not integral");
    if (is_even(q) && !is_even_integer(self))
        throw std::domain_error("overlattice: glue norm odd on an even lattice");
    if (index == 1) return q;
    // Hermite-reduce the row span of index*I stacked on index*glue, then rescale.
    IMat rows(n + 1, n);
    for (std::size_t i = 0; i < n; ++i) rows(i, i) = index;
    for (std::size_t j = 0; j < n; ++j) rows(n, j) = Rat(Rat(index) * glue[j]).get_num();
    auto [h, u] = column_echelon(rows.transpose());  // columns of h span the same module
    QMat basis(n, n);                                // columns = new basis in old coordinates
    std::size_t c = 0;
    for (std::size_t j = 0; j < h.cols() && c < n; ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < n; ++i)
            if (h(i, j) != 0) zero = false;
        if (zero) continue;
        for (std::size_t i = 0; i < n; ++i) basis(i, c) = make_rat(h(i, j), index);
        ++c;
    }
    if (c != n) throw std::domain_error("overlattice: degenerate glue span");
    QuadraticLattice out(basis.transpose() * q.gram() * basis);
    if (determinant(out) * Rat(index * index) != determinant(q))
        throw std::logic_error("overlattice: determinant law violated");
    return out;
}

}  // namespace latq
