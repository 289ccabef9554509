#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace latq {

/**
 * FieldElem: an element a + b*sqrt(d) of the imaginary quadratic field Q(sqrt(d)),
 * d < 0 squarefree. Elements are always stored in the {1, sqrt(d)} coordinate
 * frame; integrality questions against the maximal order are answered by
 * is_ring_integer below.
 */
class FieldElem {
public:
    Rat a, b;
    long d;

    FieldElem() : a(0), b(0), d(-1) {}
    FieldElem(Rat a_, Rat b_, long d_) : a(std::move(a_)), b(std::move(b_)), d(d_) {
        if (d >= 0) throw std::domain_error("FieldElem: d must be negative");
    }
    static FieldElem from_rat(const Rat& x, long d) { return FieldElem(x, Rat(0), d); }
    static FieldElem zero(long d) { return FieldElem(Rat(0), Rat(0), d); }
    static FieldElem one(long d) { return FieldElem(Rat(1), Rat(0), d); }
    static FieldElem sqrt_d(long d) { return FieldElem(Rat(0), Rat(1), d); }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    friend bool operator==(const FieldElem& x, const FieldElem& y) {
        return x.d == y.d && x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const FieldElem& x, const FieldElem& y) { return !(x == y); }

    FieldElem operator-() const { return FieldElem(-a, -b, d); }

    friend FieldElem operator+(const FieldElem& x, const FieldElem& y) {
        long d = merged_field(x, y);
        return FieldElem(x.a + y.a, x.b + y.b, d);
    }
    friend FieldElem operator-(const FieldElem& x, const FieldElem& y) {
        long d = merged_field(x, y);
        return FieldElem(x.a - y.a, x.b - y.b, d);
    }
    friend FieldElem operator*(const FieldElem& x, const FieldElem& y) {
        long d = merged_field(x, y);
        // (a1 + b1 s)(a2 + b2 s) = a1 a2 + d b1 b2 + (a1 b2 + b1 a2) s
        return FieldElem(x.a * y.a + Rat(d) * x.b * y.b, x.a * y.b + x.b * y.a, d);
    }
    friend FieldElem operator*(const Rat& c, const FieldElem& x) {
        return FieldElem(c * x.a, c * x.b, x.d);
    }

    FieldElem inverse() const {
        Rat n = norm();
        if (n == 0) throw std::domain_error("FieldElem::inverse: zero element");
        return FieldElem(a / n, -b / n, d);
    }
    friend FieldElem operator/(const FieldElem& x, const FieldElem& y) {
        return x * y.inverse();
    }

    // Field norm x * conj(x) = a^2 - d b^2; non-negative since d < 0.
    Rat norm() const { return a * a - Rat(d) * b * b; }

    std::string str() const {
        if (b == 0) return to_string(a);
        std::string s;
        if (a != 0) s += to_string(a) + (b > 0 ? "+" : "");
        if (b == 1)
            s += "";
        else if (b == -1)
            s += "-";
        else
            s += to_string(b) + "*";
        s += "sqrt(" + std::to_string(d) + ")";
        return s;
    }

private:
    // Rational elements (b = 0) are field-agnostic, which lets default-constructed
    // zeros combine with elements of any field.
    static long merged_field(const FieldElem& x, const FieldElem& y) {
        if (x.d == y.d) return x.d;
        if (x.b == 0) return y.d;
        if (y.b == 0) return x.d;
        throw std::domain_error("FieldElem: mixed fields");
    }
};

inline FieldElem conjugate(const FieldElem& x) { return FieldElem(x.a, -x.b, x.d); }

// Tr_{F/Q}(x) = x + conj(x) = 2a.
inline Rat trace_q(const FieldElem& x) { return Rat(2) * x.a; }

/**
 * RingBasis: the Z-basis {1, theta} of the maximal order O_F, with
 * theta = sqrt(d) for d = 2,3 (mod 4) and theta = (1+sqrt(d))/2 for d = 1 (mod 4).
 * theta satisfies theta^2 = theta_sq_const + theta_sq_lin * theta.
 */
struct RingBasis {
    long d;
    FieldElem theta;
    Int theta_sq_const;  // d = 2,3 (mod 4): d   ; d = 1 (mod 4): (d-1)/4
    Int theta_sq_lin;    // d = 2,3 (mod 4): 0   ; d = 1 (mod 4): 1

    explicit RingBasis(long d_) : d(d_), theta(FieldElem::zero(d_)) {
        if (d >= 0 || !is_squarefree(Int(d)))
            throw std::domain_error("RingBasis: d must be negative and squarefree");
        long m = ((d % 4) + 4) % 4;
        if (m == 1) {
            theta = FieldElem(make_rat(1, 2), make_rat(1, 2), d);
            theta_sq_const = Int(d - 1) / 4;
            theta_sq_lin = 1;
        } else {
            theta = FieldElem::sqrt_d(d);
            theta_sq_const = d;
            theta_sq_lin = 0;
        }
    }
};

// Coordinates (u, v) of x = u + v*theta in the {1, theta} frame (rational in general).
inline std::pair<Rat, Rat> theta_coords(const FieldElem& x) {
    RingBasis basis(x.d);
    Rat v = x.b / basis.theta.b;
    Rat u = x.a - v * basis.theta.a;
    return {u, v};
}

inline FieldElem from_theta_coords(const Rat& u, const Rat& v, long d) {
    RingBasis basis(d);
    return FieldElem::from_rat(u, d) + v * basis.theta;
}

inline bool is_ring_integer(const FieldElem& x) {
    auto [u, v] = theta_coords(x);
    return is_integer(u) && is_integer(v);
}

// The full unit group of O_F: order 4 for d = -1, 6 for d = -3, 2 otherwise.
inline std::vector<FieldElem> units(long d) {
    if (d >= 0 || !is_squarefree(Int(d)))
        throw std::domain_error("units: d must be negative and squarefree");
    std::vector<FieldElem> us = {FieldElem::one(d), -FieldElem::one(d)};
    if (d == -1) {
        us.push_back(FieldElem::sqrt_d(d));
        us.push_back(-FieldElem::sqrt_d(d));
    } else if (d == -3) {
        FieldElem omega(make_rat(-1, 2), make_rat(1, 2), d);  // primitive cube root of unity
        us.push_back(omega);
        us.push_back(-omega);
        us.push_back(omega * omega);
        us.push_back(-(omega * omega));
    }
    return us;
}

inline bool is_unit(const FieldElem& x) { return is_ring_integer(x) && x.norm() == 1; }

}  // namespace latq
