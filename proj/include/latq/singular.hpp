#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace latq {

/**
 * EigenvalueProfile: eigenvalues xi^{a_1}, ..., xi^{a_n} of a finite-order
 * linear map, with xi a primitive root of unity of order `order` and
 * 0 <= a_i < order.
 */
struct EigenvalueProfile {
    unsigned long order;
    std::vector<unsigned long> exponents;

    void validate() const {
        if (order == 0) throw std::domain_error("EigenvalueProfile: order must be positive");
        for (unsigned long a : exponents)
            if (a >= order) throw std::domain_error("EigenvalueProfile: exponent out of range");
    }
};

/// Age A(g) = sum a_i / order.
inline Rat age(const EigenvalueProfile& p) {
    p.validate();
    unsigned long s = 0;
    for (unsigned long a : p.exponents) s += a;
    return make_rat(Int(s), Int(p.order));
}

/// All but one eigenvalue equal to 1 (and the map is not the identity).
inline bool is_quasi_reflection(const EigenvalueProfile& p) {
    p.validate();
    std::size_t nontrivial = 0;
    for (unsigned long a : p.exponents)
        if (a != 0) ++nontrivial;
    return nontrivial == 1;
}

/// Quasi-reflection whose nontrivial eigenvalue is -1.
inline bool is_reflection(const EigenvalueProfile& p) {
    if (!is_quasi_reflection(p)) return false;
    if (p.order % 2 != 0) return false;
    for (unsigned long a : p.exponents)
        if (a != 0) return a == p.order / 2;
    return false;
}

inline std::vector<unsigned long> totatives(unsigned long r) {
    std::vector<unsigned long> t;
    for (unsigned long k = 1; k < r; ++k)
        if (std::gcd(k, r) == 1) t.push_back(k);
    if (r == 1) t.push_back(1);  // by convention phi(1) = 1 with totative 1
    return t;
}

inline unsigned long euler_phi(unsigned long r) { return totatives(r).size(); }

/// c^w = sum over totatives k of r, excluding k_1 = r - k_2, of {(k_2 + k)/r}.
inline Rat c_w(unsigned long r, unsigned long k2) {
    if (r < 2 || k2 == 0 || k2 >= r || std::gcd(k2, r) != 1)
        throw std::domain_error("c_w: k2 must be a totative of r >= 2");
    unsigned long k1 = r - k2;
    unsigned long numerator = 0;
    for (unsigned long k : totatives(r)) {
        if (k == k1) continue;
        numerator += (k2 + k) % r;
    }
    return make_rat(Int(numerator), Int(r));
}

/// t_d = sum over 1 <= a <= d with gcd(a,d)=1 of {a/d + k2/r}, for d in {1,2,3,4,6}.
inline Rat t_d(unsigned long d, unsigned long r, unsigned long k2) {
    if (d != 1 && d != 2 && d != 3 && d != 4 && d != 6)
        throw std::domain_error("t_d: d must be in {1,2,3,4,6}");
    if (k2 == 0 || k2 >= r || std::gcd(k2, r) != 1)
        throw std::domain_error("t_d: k2 must be a totative of r");
    Rat sum(0);
    for (unsigned long a = 1; a <= d; ++a) {
        if (std::gcd(a, d) != 1) continue;
        sum += frac_part(make_rat(Int(a), Int(d)) + make_rat(Int(k2), Int(r)));
    }
    return sum;
}

/**
 * AgeDecomposition: the (r, k2, v_d) data of an isometry with phi(r) = 2,
 * where v_d is the multiplicity of the d-th cyclotomic block and the
 * dimension constraint v_1 + v_2 + 2 v_3 + 2 v_4 + 2 v_6 = n holds.
 */
struct AgeDecomposition {
    unsigned long r = 3;
    unsigned long k2 = 1;
    std::map<unsigned long, unsigned long> v;  // d -> multiplicity, d in {1,2,3,4,6}

    unsigned long dimension() const {
        unsigned long n = 0;
        for (const auto& [d, mult] : v) n += (d >= 3 ? 2 : 1) * mult;
        return n;
    }
};

inline Rat decomposition_age(const AgeDecomposition& dec, unsigned long n) {
    if (dec.dimension() != n)
        throw std::domain_error("decomposition_age: dimension constraint violated");
    Rat total = c_w(dec.r, dec.k2);
    for (const auto& [d, mult] : dec.v) {
        if (mult == 0) continue;
        total += Rat(Int(mult)) * t_d(d, dec.r, dec.k2);
    }
    return total;
}

struct RstScanResult {
    Rat min_age;
    AgeDecomposition witness;
};

/**
 * Exact minimum of decomposition_age over r in {3,4,6}, both totatives k2,
 * and all multiplicity vectors satisfying the dimension constraint. The cases
 * r in {1,2} are covered by the eigenvalue-pairing bound and phi(r) > 2 by
 * the totative certification, so this scan decides the threshold.
 */
inline RstScanResult rst_min_age(unsigned long n) {
    if (n == 0) throw std::domain_error("rst_min_age: n must be positive");
    RstScanResult best;
    bool have = false;
    const std::pair<unsigned long, unsigned long> rk[] = {{3, 1}, {3, 2}, {4, 1},
                                                          {4, 3}, {6, 1}, {6, 5}};
    for (auto [r, k2] : rk) {
        Rat cw = c_w(r, k2);
        Rat td[7];
        for (unsigned long d : {1ul, 2ul, 3ul, 4ul, 6ul}) td[d] = t_d(d, r, k2);
        for (unsigned long v1 = 0; v1 <= n; ++v1)
            for (unsigned long v2 = 0; v1 + v2 <= n; ++v2)
                for (unsigned long v3 = 0; v1 + v2 + 2 * v3 <= n; ++v3)
                    for (unsigned long v4 = 0; v1 + v2 + 2 * v3 + 2 * v4 <= n; ++v4) {
                        unsigned long rest = n - v1 - v2 - 2 * v3 - 2 * v4;
                        if (rest % 2 != 0) continue;
                        unsigned long v6 = rest / 2;
                        Rat value = cw + Rat(Int(v1)) * td[1] + Rat(Int(v2)) * td[2] +
                                    Rat(Int(v3)) * td[3] + Rat(Int(v4)) * td[4] +
                                    Rat(Int(v6)) * td[6];
                        if (!have || value < best.min_age) {
                            have = true;
                            best.min_age = value;
                            best.witness = AgeDecomposition{
                                r, k2, {{1, v1}, {2, v2}, {3, v3}, {4, v4}, {6, v6}}};
                        }
                    }
    }
    return best;
}

struct SeisuViolation {
    unsigned long r, k2;
    Rat value;
};

struct SeisuReport {
    unsigned long r_max = 0;
    unsigned long pairs_checked = 0;
    std::vector<SeisuViolation> violations;
    // integers a in (r/4, 3r/4) coprime to r, for the small leftover cases
    std::map<unsigned long, std::vector<unsigned long>> witnesses;
};

/**
 * Certifies sum_{i>=2} {k2/r + k_i/r} > 1 for every r <= r_max with
 * phi(r) > 2 and every totative k2. The sum ranges over all totatives except
 * k_1 = r - k2, so it is independent of the pairing order; checking every k2
 * therefore covers every admissible ordering at once.
 */
inline SeisuReport seisu_verify(unsigned long r_max) {
    if (r_max < 5) throw std::domain_error("seisu_verify: r_max >= 5");
    SeisuReport report;
    report.r_max = r_max;
    for (unsigned long r = 5; r <= r_max; ++r) {
        if (r == 6) continue;  // phi(6) = 2
        std::vector<unsigned long> t = totatives(r);
        if (t.size() <= 2) continue;
        unsigned long phi = t.size();
        unsigned long sum_t = 0;
        for (unsigned long k : t) sum_t += k;
        for (unsigned long k2 : t) {
            // sum over all totatives of (k2 + k) mod r, in closed form:
            // (k2 + k) mod r = k2 + k - r exactly when k >= r - k2
            auto it = std::lower_bound(t.begin(), t.end(), r - k2);
            unsigned long wraps = t.end() - it;
            unsigned long total = phi * k2 + sum_t - wraps * r;
            // the k1 term contributes (k2 + r - k2) mod r = 0, so no correction
            report.pairs_checked += 1;
            if (total <= r)
                report.violations.push_back({r, k2, make_rat(Int(total), Int(r))});
        }
    }
    for (unsigned long r : {5ul, 7ul, 8ul, 9ul}) {
        std::vector<unsigned long> ws;
        for (unsigned long a = 1; a < r; ++a)
            if (4 * a > r && 4 * a < 3 * r && std::gcd(a, r) == 1) ws.push_back(a);
        report.witnesses[r] = ws;
    }
    return report;
}

/**
 * A'(g^f) for g of order k*l whose k-th power is a quasi-reflection of order l
 * along the LAST eigendirection: the age of the induced action on the quotient
 * by that quasi-reflection,
 *   A'(g^f) = {a_n f / k} + sum_{i<n} {a_i f / (k l)}.
 */
inline Rat age_prime(const EigenvalueProfile& p, unsigned long k, unsigned long ell,
                     unsigned long f) {
    p.validate();
    if (k < 2 || ell < 1) throw std::domain_error("age_prime: need k >= 2 and l >= 1");
    if (p.order != k * ell) throw std::domain_error("age_prime: order must equal k*l");
    if (f == 0 || f >= k) throw std::domain_error("age_prime: need 1 <= f < k");
    if (p.exponents.empty()) throw std::domain_error("age_prime: empty profile");
    std::size_t n = p.exponents.size();
    Rat sum = frac_part(make_rat(Int(p.exponents[n - 1]) * Int(f), Int(k)));
    for (std::size_t i = 0; i + 1 < n; ++i)
        sum += frac_part(make_rat(Int(p.exponents[i]) * Int(f), Int(k) * Int(ell)));
    return sum;
}

}  // namespace latq
