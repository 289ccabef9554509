#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "latq/field.hpp"

using namespace latq;

namespace {

FieldElem omega() { return FieldElem(make_rat(-1, 2), make_rat(1, 2), -3); }

FieldElem random_ring_integer(long d, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dist(-20, 20);
    return from_theta_coords(Rat(dist(rng)), Rat(dist(rng)), d);
}

}  // namespace

TEST_CASE("conjugation") {
    CHECK(conjugate(FieldElem::one(-5)) == FieldElem::one(-5));
    FieldElem x(Rat(2), Rat(3), -1);
    CHECK(conjugate(x) == FieldElem(Rat(2), Rat(-3), -1));
    // omega is a cube root of unity and conjugation sends it to omega^2
    CHECK(conjugate(omega()) == omega() * omega());
    CHECK(omega() * conjugate(omega()) == FieldElem::one(-3));
}

TEST_CASE("trace") {
    CHECK(trace_q(FieldElem::sqrt_d(-1)) == 0);
    CHECK(trace_q(omega()) == -1);
    CHECK(trace_q(FieldElem::from_rat(Rat(5), -7)) == 10);
}

TEST_CASE("ring membership") {
    CHECK(is_ring_integer(FieldElem(Rat(1), Rat(1), -1)));
    CHECK(is_ring_integer(omega()));
    CHECK_FALSE(is_ring_integer(FieldElem(make_rat(1, 2), make_rat(1, 2), -1)));
    // the theta generator itself is integral in both congruence classes
    CHECK(is_ring_integer(RingBasis(-3).theta));
    CHECK(is_ring_integer(RingBasis(-2).theta));
}

TEST_CASE("unit groups") {
    auto u1 = units(-1);
    REQUIRE(u1.size() == 4);
    auto u3 = units(-3);
    REQUIRE(u3.size() == 6);
    auto u5 = units(-5);
    REQUIRE(u5.size() == 2);
    CHECK_THROWS_AS(units(5), std::domain_error);
    CHECK_THROWS_AS(units(-4), std::domain_error);

    for (long d : {-1L, -3L, -5L, -7L}) {
        auto us = units(d);
        for (const auto& x : us) {
            CHECK(x * conjugate(x) == FieldElem::one(d));
            CHECK(is_ring_integer(x));
            // closure under multiplication and conjugation
            bool conj_in = false;
            for (const auto& y : us)
                if (conjugate(x) == y) conj_in = true;
            CHECK(conj_in);
            for (const auto& y : us) {
                bool prod_in = false;
                for (const auto& z : us)
                    if (x * y == z) prod_in = true;
                CHECK(prod_in);
            }
        }
    }
}

TEST_CASE("field arithmetic properties") {
    std::mt19937_64 rng(11);
    for (long d : {-1L, -2L, -3L, -7L, -11L, -5L}) {
        for (int trial = 0; trial < 200; ++trial) {
            FieldElem x = random_ring_integer(d, rng);
            FieldElem y = random_ring_integer(d, rng);
            CHECK(conjugate(conjugate(x)) == x);
            CHECK((x * conjugate(x)).b == 0);
            CHECK(is_integer(trace_q(x)));
            CHECK(is_ring_integer(x + y));
            CHECK(is_ring_integer(x * y));
            CHECK(is_ring_integer(conjugate(x)));
            if (!y.is_zero()) CHECK(x / y * y == x);
        }
    }
}
