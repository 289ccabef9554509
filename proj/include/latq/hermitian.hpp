#pragma once

#include <stdexcept>
#include <vector>

#include "field.hpp"
#include "matrix.hpp"
#include "quadratic.hpp"

namespace latq {

using FMat = Mat<FieldElem>;
using FVec = std::vector<FieldElem>;

/**
 * HermitianLattice: a free O_F-module with a Hermitian Gram matrix over
 * F = Q(sqrt(d)). The form is linear in the FIRST argument and conjugate-linear
 * in the second: <a v, b w> = a conj(b) <v, w>.
 */
class HermitianLattice {
public:
    HermitianLattice(long d, FMat gram) : d_(d), gram_(std::move(gram)) {
        if (gram_.rows() != gram_.cols())
            throw std::invalid_argument("HermitianLattice: non-square Gram");
        RingBasis check(d);  // validates d
        for (std::size_t i = 0; i < gram_.rows(); ++i)
            for (std::size_t j = 0; j < gram_.cols(); ++j) {
                if (gram_(i, j).b != 0 && gram_(i, j).d != d)
                    throw std::invalid_argument("HermitianLattice: entry from wrong field");
                if (gram_(j, i) != conjugate(gram_(i, j)))
                    throw std::invalid_argument("HermitianLattice: Gram not Hermitian");
            }
    }

    long d() const { return d_; }
    std::size_t rank() const { return gram_.rows(); }
    const FMat& gram() const { return gram_; }

private:
    long d_;
    FMat gram_;
};

inline FieldElem hermitian_pairing(const HermitianLattice& h, const FVec& v, const FVec& w) {
    FieldElem s = FieldElem::zero(h.d());
    for (std::size_t i = 0; i < h.rank(); ++i)
        for (std::size_t j = 0; j < h.rank(); ++j) s = s + v[i] * conjugate(w[j]) * h.gram()(i, j);
    return s;
}

inline HermitianLattice direct_sum(const HermitianLattice& x, const HermitianLattice& y) {
    if (x.d() != y.d()) throw std::invalid_argument("direct_sum: mixed fields");
    std::size_t n = x.rank(), m = y.rank();
    FMat g(n + m, n + m, FieldElem::zero(x.d()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = x.gram()(i, j);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) g(n + i, n + j) = y.gram()(i, j);
    return HermitianLattice(x.d(), std::move(g));
}

inline HermitianLattice rescale(const HermitianLattice& h, long a) {
    if (a == 0) throw std::domain_error("rescale: zero scale");
    return HermitianLattice(h.d(), h.gram().map([&](const FieldElem& v) {
        return Rat(a) * v;
    }));
}

/**
 * Trace form of a Hermitian lattice: the underlying Z-module with bilinear form
 * Tr_{F/Q}<.,.>. Rank doubles; the Z-basis is interleaved as
 * (e_1, theta e_1, e_2, theta e_2, ...) with theta the integral generator of O_F.
 */
inline QuadraticLattice trace_form(const HermitianLattice& h) {
    RingBasis basis(h.d());
    FieldElem pw[2] = {FieldElem::one(h.d()), basis.theta};
    std::size_t n = h.rank();
    QMat g(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (int s = 0; s < 2; ++s)
                for (int t = 0; t < 2; ++t)
                    g(2 * i + s, 2 * j + t) = trace_q(pw[s] * conjugate(pw[t]) * h.gram()(i, j));
    return QuadraticLattice(std::move(g));
}

inline bool is_integral(const HermitianLattice& h) {
    return trace_form(h).is_integral();
}

/// Even means <v,v> is a (rational) integer for every v; given integrality this
/// reduces to the Gram diagonal.
inline bool is_even(const HermitianLattice& h) {
    if (!is_integral(h)) throw std::domain_error("is_even: lattice is not integral");
    for (std::size_t i = 0; i < h.rank(); ++i) {
        const FieldElem& v = h.gram()(i, i);
        if (v.b != 0 || !is_integer(v.a)) return false;
    }
    return true;
}

/// Hermitian signature over C, computed as half the inertia of the trace form.
inline Signature signature(const HermitianLattice& h) {
    Signature s = signature(trace_form(h));
    if (s.positive % 2 != 0 || s.negative % 2 != 0)
        throw std::logic_error("signature: trace-form inertia is not even");
    return {s.positive / 2, s.negative / 2};
}

/// Matrix of the reflection tau_{r,xi}(x) = x - (1 - xi) <x,r>/<r,r> r.
/// xi must be a unit of O_F different from 1, and r anisotropic.
inline FMat tau_reflection(const HermitianLattice& h, const FVec& r, const FieldElem& xi) {
    if (xi == FieldElem::one(h.d())) throw std::domain_error("tau_reflection: xi = 1");
    if (!is_unit(xi)) throw std::domain_error("tau_reflection: xi is not a unit");
    FieldElem rr = hermitian_pairing(h, r, r);
    if (rr.is_zero()) throw std::domain_error("tau_reflection: isotropic vector");
    std::size_t n = h.rank();
    FMat m = FMat::identity(n, FieldElem::one(h.d()), FieldElem::zero(h.d()));
    FieldElem one_minus_xi = FieldElem::one(h.d()) - xi;
    for (std::size_t j = 0; j < n; ++j) {
        // <e_j, r> = sum_k conj(r_k) H(j,k)
        FieldElem pr = FieldElem::zero(h.d());
        for (std::size_t k = 0; k < n; ++k) pr = pr + conjugate(r[k]) * h.gram()(j, k);
        FieldElem coef = one_minus_xi * pr / rr;
        for (std::size_t i = 0; i < n; ++i) m(i, j) = m(i, j) - coef * r[i];
    }
    return m;
}

/// Unitary over O_F: g^T H conj(g) = H (form preserved, in the linear-in-first
/// convention) and all entries ring integers.
inline bool is_unitary(const HermitianLattice& h, const FMat& g) {
    if (g.rows() != h.rank() || g.cols() != h.rank()) return false;
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
            if (!is_ring_integer(g(i, j))) return false;
    FMat gbar = g.map([](const FieldElem& v) { return conjugate(v); });
    return g.transpose() * h.gram() * gbar == h.gram();
}

/// Z-matrix of an O_F-linear map on the interleaved trace basis. Each ring
/// entry u + v theta becomes the 2x2 regular-representation block using
/// theta^2 = c + t theta.
inline IMat realify(const HermitianLattice& h, const FMat& g) {
    RingBasis basis(h.d());
    std::size_t n = h.rank();
    IMat out(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto [u, v] = theta_coords(g(i, j));
            if (!is_integer(u) || !is_integer(v))
                throw std::domain_error("realify: entry is not a ring integer");
            Int ui = u.get_num(), vi = v.get_num();
            out(2 * i, 2 * j) = ui;
            out(2 * i, 2 * j + 1) = vi * basis.theta_sq_const;
            out(2 * i + 1, 2 * j) = vi;
            out(2 * i + 1, 2 * j + 1) = ui + vi * basis.theta_sq_lin;
        }
    return out;
}

/// Discriminant-kernel membership: g unitary and g - id maps the trace dual
/// lattice into L, checked on the trace realification.
inline bool in_discriminant_kernel(const HermitianLattice& h, const FMat& g) {
    if (!is_unitary(h, g)) throw std::domain_error("in_discriminant_kernel: map is not unitary");
    return in_discriminant_kernel(trace_form(h), to_rational(realify(h, g)));
}

namespace detail {

inline bool euclidean_field(long d) {
    return d == -1 || d == -2 || d == -3 || d == -7 || d == -11;
}

/// Nearest-ring-integer division: q with N(x - q*y) < N(y). The minimum over
/// the four corners of the theta-coordinate cell containing x/y lies within
/// the covering radius, which is < 1 for all five Euclidean imaginary
/// quadratic fields.
inline FieldElem euclid_div(const FieldElem& x, const FieldElem& y) {
    FieldElem q = x / y;
    auto [u, v] = theta_coords(q);
    Int u0 = rat_floor(u), v0 = rat_floor(v);
    FieldElem best = FieldElem::zero(y.d);
    Rat best_norm(-1);
    for (int du = 0; du <= 1; ++du)
        for (int dv = 0; dv <= 1; ++dv) {
            FieldElem cand = from_theta_coords(Rat(u0 + du), Rat(v0 + dv), y.d);
            Rat n = (q - cand).norm();
            if (best_norm < 0 || n < best_norm) {
                best = cand;
                best_norm = n;
            }
        }
    return best;
}

}  // namespace detail

struct HermitianComplement {
    FMat basis;               // columns: complement basis in ambient coordinates
    HermitianLattice lattice; // restricted Gram on that basis
};

/**
 * Orthogonal complement {x in L | <x, s> = 0 for all s in sub} inside the
 * ambient Hermitian lattice, computed by Hermite elimination over the
 * Euclidean ring O_F. The kernel of an O_F-linear map is saturated, so the
 * returned basis spans a primitive submodule. Throws for non-Euclidean d and
 * for dependent generators.
 */
inline HermitianComplement hermitian_complement(const HermitianLattice& ambient,
                                                const std::vector<FVec>& sub) {
    if (!detail::euclidean_field(ambient.d()))
        throw std::domain_error("hermitian_complement: O_F is not Euclidean for this d");
    std::size_t m = ambient.rank(), k = sub.size();
    for (const FVec& s : sub)
        for (const FieldElem& c : s)
            if (!is_ring_integer(c))
                throw std::domain_error("hermitian_complement: sub vector not ring-integral");
    // constraint matrix: row j encodes <x, s_j> = 0, coefficient of x_i being
    // sum_l H(i,l) conj(s_{j,l}); scale rows to clear denominators
    FMat c(k, m, FieldElem::zero(ambient.d()));
    for (std::size_t j = 0; j < k; ++j) {
        Int scale = 1;
        for (std::size_t i = 0; i < m; ++i) {
            FieldElem e = FieldElem::zero(ambient.d());
            for (std::size_t l = 0; l < m; ++l)
                e = e + ambient.gram()(i, l) * conjugate(sub[j][l]);
            c(j, i) = e;
            scale = scale / gcd(scale, e.a.get_den()) * e.a.get_den();
            scale = scale / gcd(scale, e.b.get_den()) * e.b.get_den();
        }
        for (std::size_t i = 0; i < m; ++i) c(j, i) = Rat(scale) * c(j, i);
    }
    // column echelon over O_F with transform
    FMat u = FMat::identity(m, FieldElem::one(ambient.d()), FieldElem::zero(ambient.d()));
    std::size_t lead = 0;
    for (std::size_t r = 0; r < k && lead < m; ++r) {
        bool any = false;
        for (std::size_t j = lead; j < m; ++j)
            if (!c(r, j).is_zero()) any = true;
        if (!any) continue;
        for (;;) {
            std::size_t best = m;
            for (std::size_t j = lead; j < m; ++j)
                if (!c(r, j).is_zero() && (best == m || c(r, j).norm() < c(r, best).norm()))
                    best = j;
            if (best != lead) {
                c.swap_cols(lead, best);
                u.swap_cols(lead, best);
            }
            bool reduced = true;
            for (std::size_t j = lead + 1; j < m; ++j) {
                if (c(r, j).is_zero()) continue;
                FieldElem q = detail::euclid_div(c(r, j), c(r, lead));
                if (!q.is_zero())
                    for (std::size_t i = 0; i < k; ++i) c(i, j) = c(i, j) - q * c(i, lead);
                if (!q.is_zero())
                    for (std::size_t i = 0; i < m; ++i) u(i, j) = u(i, j) - q * u(i, lead);
                if (!c(r, j).is_zero()) reduced = false;
            }
            if (reduced) break;
        }
        ++lead;
    }
    if (lead != k) throw std::domain_error("hermitian_complement: dependent generators");
    std::size_t t = m - lead;
    FMat basis(m, t, FieldElem::zero(ambient.d()));
    for (std::size_t j = 0; j < t; ++j)
        for (std::size_t i = 0; i < m; ++i) basis(i, j) = u(i, lead + j);
    FMat g(t, t, FieldElem::zero(ambient.d()));
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j)
            g(i, j) = hermitian_pairing(ambient, basis.col(i), basis.col(j));
    return {std::move(basis), HermitianLattice(ambient.d(), std::move(g))};
}

}  // namespace latq
