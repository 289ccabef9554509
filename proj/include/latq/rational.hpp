#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace latq {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline bool is_even_integer(const Rat& q) {
    return is_integer(q) && mpz_even_p(q.get_num().get_mpz_t());
}

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int mod_floor(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int rat_floor(const Rat& q) { return floor_div(q.get_num(), q.get_den()); }

inline Int rat_ceil(const Rat& q) {
    Int c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return c;
}

// Fractional part {q} = q - floor(q), always in [0, 1).
inline Rat frac_part(const Rat& q) { return q - Rat(rat_floor(q)); }

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// floor(sqrt(n)) for n >= 0.
inline Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// floor(sqrt(q)) for a non-negative rational. Uses floor(sqrt(p/q)) = isqrt(floor(p/q)).
inline Int floor_sqrt(const Rat& q) {
    if (q < 0) throw std::domain_error("floor_sqrt: negative argument");
    return isqrt(floor_div(q.get_num(), q.get_den()));
}

// Largest integer x with (x + c)^2 <= bound, assuming bound >= 0.
// Used for exact enumeration intervals [-c - sqrt(B), -c + sqrt(B)].
inline Int largest_in_interval(const Rat& c, const Rat& bound) {
    if (bound < 0) throw std::domain_error("largest_in_interval: negative bound");
    Int x = floor_sqrt(bound) - rat_floor(c);
    // the estimate is off by at most one in either direction
    while ((Rat(x + 1) + c) * (Rat(x + 1) + c) <= bound) x += 1;
    while ((Rat(x) + c) * (Rat(x) + c) > bound) x -= 1;
    return x;
}

// Smallest integer x with (x + c)^2 <= bound.
inline Int smallest_in_interval(const Rat& c, const Rat& bound) {
    return -largest_in_interval(-c, bound);
}

inline bool is_squarefree(const Int& n_in) {
    Int n = abs(n_in);
    if (n == 0) return false;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) return false;
        while (n % p == 0) n /= p;
    }
    return true;
}

inline std::string to_string(const Int& n) { return n.get_str(); }

inline std::string to_string(const Rat& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace latq
