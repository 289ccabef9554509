#pragma once

#include <stdexcept>
#include <vector>

#include "matrix.hpp"
#include "quadratic.hpp"

namespace latq {

/// Canonical column-style Hermite normal form of the column span (zero columns
/// dropped). Two matrices have the same form iff they span the same Z-module.
inline IMat hnf_canonical(const IMat& a) {
    auto [h, u] = column_echelon(a);
    // in the echelon form, the first nonzero entry of each nonzero column is
    // its pivot, and pivot rows strictly increase with the column index
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
    for (std::size_t j = 0; j < h.cols(); ++j)
        for (std::size_t i = 0; i < h.rows(); ++i)
            if (h(i, j) != 0) {
                pivots.emplace_back(i, j);
                break;
            }
    // reduce entries left of each pivot into [0, pivot)
    for (auto [pr, pc] : pivots)
        for (std::size_t j = 0; j < pc; ++j) {
            Int q = floor_div(h(pr, j), h(pr, pc));
            if (q != 0)
                for (std::size_t i = 0; i < h.rows(); ++i) h(i, j) -= q * h(i, pc);
        }
    IMat out(h.rows(), pivots.size());
    for (std::size_t t = 0; t < pivots.size(); ++t)
        for (std::size_t i = 0; i < h.rows(); ++i) out(i, t) = h(i, pivots[t].second);
    return out;
}

inline bool same_column_span(const IMat& a, const IMat& b) {
    return hnf_canonical(a) == hnf_canonical(b);
}

/// A sublattice given by basis columns in ambient coordinates.
struct Sublattice {
    QuadraticLattice ambient;
    IMat basis;  // ambient.rank() x k, independent columns

    std::size_t rank() const { return basis.cols(); }
    QuadraticLattice restricted() const {
        QMat b = to_rational(basis);
        return QuadraticLattice(b.transpose() * ambient.gram() * b);
    }
};

/// Saturated Z-kernel of an integer matrix (basis as columns).
inline IMat integer_kernel(const IMat& m) { return kernel_basis(m); }

/// Saturation of the column span: span_Q(basis) intersected with Z^n, computed
/// by a double dot-product kernel.
inline IMat saturation(const IMat& basis) {
    IMat k = kernel_basis(basis.transpose());
    return kernel_basis(k.transpose());
}

inline bool is_primitive(const Sublattice& sub) {
    return invariant_factors(sub.basis).empty();
}

/// Orthogonal complement {x in ambient | (x, s) = 0 for all s in sub},
/// saturated by construction.
inline Sublattice orthogonal_complement(const Sublattice& sub) {
    std::size_t n = sub.ambient.rank();
    QMat constraints = to_rational(sub.basis).transpose() * sub.ambient.gram();  // k x n
    // clear denominators row by row
    IMat m(constraints.rows(), n);
    for (std::size_t i = 0; i < constraints.rows(); ++i) {
        Int scale = 1;
        for (std::size_t j = 0; j < n; ++j) {
            const Int& den = constraints(i, j).get_den();
            scale = scale / gcd(scale, den) * den;
        }
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = Rat(Rat(scale) * constraints(i, j)).get_num();
    }
    return Sublattice{sub.ambient, kernel_basis(m)};
}

/**
 * Existence criterion for a primitive embedding of an even lattice of
 * signature (m+, m-) into an even unimodular lattice of signature (n+, n-):
 * strict signature dominance and l(Lambda_1) + 2 <= rank difference.
 */
inline bool nikulin_check(const Signature& sub_sig, std::size_t sub_ell,
                          const Signature& ambient_sig) {
    if (sub_sig.positive >= ambient_sig.positive) return false;
    if (sub_sig.negative >= ambient_sig.negative) return false;
    std::size_t ambient_rank = ambient_sig.positive + ambient_sig.negative;
    std::size_t sub_rank = sub_sig.positive + sub_sig.negative;
    return sub_ell + 2 <= ambient_rank - sub_rank;
}

}  // namespace latq
