#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace latq {

/// Dense matrix with value semantics. Small sizes only (rank <= 28 throughout).
template <typename T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols, const T& fill = T())
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    Mat(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("Mat: ragged initializer");
            for (const auto& v : row) data_.push_back(v);
        }
    }

    static Mat identity(std::size_t n, const T& one, const T& zero) {
        Mat m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
    }
    friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
    }

    std::vector<T> col(std::size_t j) const {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    template <typename F>
    auto map(F f) const {
        Mat<decltype(f(std::declval<T>()))> out(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
        return out;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

template <typename T>
Mat<T> operator*(const Mat<T>& x, const Mat<T>& y) {
    if (x.cols() != y.rows()) throw std::invalid_argument("Mat: dimension mismatch in product");
    Mat<T> out(x.rows(), y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t k = 0; k < x.cols(); ++k) {
            const T& v = x(i, k);
            for (std::size_t j = 0; j < y.cols(); ++j) out(i, j) = out(i, j) + v * y(k, j);
        }
    return out;
}

template <typename T>
Mat<T> operator+(const Mat<T>& x, const Mat<T>& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw std::invalid_argument("Mat: dimension mismatch in sum");
    Mat<T> out(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) out(i, j) = x(i, j) + y(i, j);
    return out;
}

template <typename T>
Mat<T> operator-(const Mat<T>& x, const Mat<T>& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw std::invalid_argument("Mat: dimension mismatch in difference");
    Mat<T> out(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) out(i, j) = x(i, j) - y(i, j);
    return out;
}

template <typename T>
std::vector<T> operator*(const Mat<T>& m, const std::vector<T>& v) {
    if (m.cols() != v.size()) throw std::invalid_argument("Mat: dimension mismatch in Mat*vec");
    std::vector<T> out(m.rows(), T());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] = out[i] + m(i, j) * v[j];
    return out;
}

using IMat = Mat<Int>;
using QMat = Mat<Rat>;

inline QMat to_rational(const IMat& m) {
    return m.map([](const Int& v) { return Rat(v); });
}

inline bool is_integral(const QMat& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!is_integer(m(i, j))) return false;
    return true;
}

inline IMat to_integral(const QMat& m) {
    if (!is_integral(m)) throw std::domain_error("to_integral: non-integer entry");
    return m.map([](const Rat& v) { return v.get_num(); });
}

inline QMat block_diag(const QMat& x, const QMat& y) {
    QMat out(x.rows() + y.rows(), x.cols() + y.cols(), Rat(0));
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) out(i, j) = x(i, j);
    for (std::size_t i = 0; i < y.rows(); ++i)
        for (std::size_t j = 0; j < y.cols(); ++j) out(x.rows() + i, x.cols() + j) = y(i, j);
    return out;
}

/// Exact determinant by Gaussian elimination with nonzero pivoting.
inline Rat det(QMat m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: non-square matrix");
    std::size_t n = m.rows();
    Rat d(1);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t p = i;
        while (p < n && m(p, i) == 0) ++p;
        if (p == n) return Rat(0);
        if (p != i) {
            m.swap_rows(p, i);
            d = -d;
        }
        d *= m(i, i);
        for (std::size_t r = i + 1; r < n; ++r) {
            if (m(r, i) == 0) continue;
            Rat f = m(r, i) / m(i, i);
            for (std::size_t c = i; c < n; ++c) m(r, c) -= f * m(i, c);
        }
    }
    return d;
}

/// Exact inverse by Gauss-Jordan; throws on singular input.
inline QMat inverse(QMat m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: non-square matrix");
    std::size_t n = m.rows();
    QMat inv = QMat::identity(n, Rat(1), Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t p = i;
        while (p < n && m(p, i) == 0) ++p;
        if (p == n) throw std::domain_error("inverse: singular matrix");
        if (p != i) {
            m.swap_rows(p, i);
            inv.swap_rows(p, i);
        }
        Rat piv = m(i, i);
        for (std::size_t c = 0; c < n; ++c) {
            m(i, c) /= piv;
            inv(i, c) /= piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == i || m(r, i) == 0) continue;
            Rat f = m(r, i);
            for (std::size_t c = 0; c < n; ++c) {
                m(r, c) -= f * m(i, c);
                inv(r, c) -= f * inv(i, c);
            }
        }
    }
    return inv;
}

inline std::size_t rank(QMat m) {
    std::size_t r = 0;
    for (std::size_t j = 0; j < m.cols() && r < m.rows(); ++j) {
        std::size_t p = r;
        while (p < m.rows() && m(p, j) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r) m.swap_rows(p, r);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, j) == 0) continue;
            Rat f = m(i, j) / m(r, j);
            for (std::size_t c = j; c < m.cols(); ++c) m(i, c) -= f * m(r, c);
        }
        ++r;
    }
    return r;
}

struct Inertia {
    std::size_t positive = 0, negative = 0, zero = 0;
};

/// Exact inertia of a symmetric rational matrix by congruence diagonalization.
/// A zero diagonal pivot with a nonzero off-diagonal partner is repaired by a
/// row+column addition, which keeps the matrix symmetric and congruent.
inline Inertia inertia(QMat g) {
    if (g.rows() != g.cols()) throw std::invalid_argument("inertia: non-square matrix");
    std::size_t n = g.rows();
    Inertia result;
    for (std::size_t i = 0; i < n; ++i) {
        if (g(i, i) == 0) {
            std::size_t j = i + 1;
            while (j < n && g(i, j) == 0) ++j;
            if (j == n) {
                result.zero += 1;
                continue;
            }
            // add or subtract row/col j into i; the new diagonal is
            // g(j,j) +- 2 g(i,j), and both signs cannot vanish since g(i,j) != 0
            Rat s = (g(j, j) + Rat(2) * g(i, j) != 0) ? Rat(1) : Rat(-1);
            for (std::size_t c = 0; c < n; ++c) g(i, c) += s * g(j, c);
            for (std::size_t r = 0; r < n; ++r) g(r, i) += s * g(r, j);
        }
        Rat piv = g(i, i);
        if (piv > 0)
            result.positive += 1;
        else
            result.negative += 1;
        for (std::size_t r = i + 1; r < n; ++r) {
            if (g(r, i) == 0) continue;
            Rat f = g(r, i) / piv;
            for (std::size_t c = 0; c < n; ++c) g(r, c) -= f * g(i, c);
            for (std::size_t c = 0; c < n; ++c) g(c, r) -= f * g(c, i);
        }
    }
    return result;
}

/// Column Hermite reduction: returns (H, U) with A*U = H, U unimodular and H in
/// column echelon form (pivots positive, entries right of a pivot zero).
inline std::pair<IMat, IMat> column_echelon(const IMat& a) {
    IMat h = a;
    IMat u = IMat::identity(a.cols(), Int(1), Int(0));
    std::size_t rows = h.rows(), cols = h.cols();
    std::size_t lead = 0;
    for (std::size_t r = 0; r < rows && lead < cols; ++r) {
        // gcd out row r across columns lead..cols-1
        bool any = false;
        for (std::size_t j = lead; j < cols; ++j)
            if (h(r, j) != 0) any = true;
        if (!any) continue;
        for (;;) {
            std::size_t best = cols;
            for (std::size_t j = lead; j < cols; ++j)
                if (h(r, j) != 0 && (best == cols || abs(h(r, j)) < abs(h(r, best)))) best = j;
            if (best != lead) {
                h.swap_cols(lead, best);
                u.swap_cols(lead, best);
            }
            bool reduced = true;
            for (std::size_t j = lead + 1; j < cols; ++j) {
                if (h(r, j) == 0) continue;
                Int q = floor_div(h(r, j), h(r, lead));
                if (q != 0) {
                    for (std::size_t i = 0; i < rows; ++i) h(i, j) -= q * h(i, lead);
                    for (std::size_t i = 0; i < u.rows(); ++i) u(i, j) -= q * u(i, lead);
                }
                if (h(r, j) != 0) reduced = false;
            }
            if (reduced) break;
        }
        if (h(r, lead) < 0) {
            for (std::size_t i = 0; i < rows; ++i) h(i, lead) = -h(i, lead);
            for (std::size_t i = 0; i < u.rows(); ++i) u(i, lead) = -u(i, lead);
        }
        ++lead;
    }
    return {h, u};
}

/// Z-basis of the kernel {x | A x = 0}, returned as matrix columns. The kernel
/// of a homomorphism is saturated, so the quotient by it is torsion-free.
inline IMat kernel_basis(const IMat& a) {
    auto [h, u] = column_echelon(a);
    std::vector<std::size_t> zero_cols;
    for (std::size_t j = 0; j < h.cols(); ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < h.rows(); ++i)
            if (h(i, j) != 0) zero = false;
        if (zero) zero_cols.push_back(j);
    }
    IMat k(a.cols(), zero_cols.size());
    for (std::size_t t = 0; t < zero_cols.size(); ++t)
        for (std::size_t i = 0; i < a.cols(); ++i) k(i, t) = u(i, zero_cols[t]);
    return k;
}

/// Smith normal form diagonal d_1 | d_2 | ... (non-negative; zeros trail).
inline std::vector<Int> snf_diagonal(IMat m) {
    std::size_t rows = m.rows(), cols = m.cols();
    std::size_t n = std::min(rows, cols);
    std::vector<Int> diag;
    std::size_t t = 0;
    while (t < n) {
        // locate a minimal nonzero entry in the trailing block
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (m(i, j) != 0 && (pi == rows || abs(m(i, j)) < abs(m(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi == rows) break;  // trailing block is zero
        m.swap_rows(t, pi);
        m.swap_cols(t, pj);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m(i, t) == 0) continue;
                Int q = floor_div(m(i, t), m(t, t));
                for (std::size_t j = t; j < cols; ++j) m(i, j) -= q * m(t, j);
                if (m(i, t) != 0) {
                    m.swap_rows(t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m(t, j) == 0) continue;
                Int q = floor_div(m(t, j), m(t, t));
                for (std::size_t i = t; i < rows; ++i) m(i, j) -= q * m(i, t);
                if (m(t, j) != 0) {
                    m.swap_cols(t, j);
                    clean = false;
                }
            }
        }
        // enforce divisibility of the trailing block by the pivot
        bool divides_all = true;
        for (std::size_t i = t + 1; i < rows && divides_all; ++i)
            for (std::size_t j = t + 1; j < cols && divides_all; ++j)
                if (m(i, j) % m(t, t) != 0) {
                    for (std::size_t c = t; c < cols; ++c) m(t, c) += m(i, c);
                    divides_all = false;
                }
        if (!divides_all) continue;  // redo this pivot
        diag.push_back(abs(m(t, t)));
        ++t;
    }
    while (diag.size() < n) diag.push_back(Int(0));
    return diag;
}

/// Elementary divisors different from 1 (and 0), in divisibility order.
inline std::vector<Int> invariant_factors(const IMat& m) {
    std::vector<Int> out;
    for (const Int& d : snf_diagonal(m))
        if (d > 1) out.push_back(d);
    return out;
}

}  // namespace latq
