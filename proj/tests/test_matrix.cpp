#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "latq/matrix.hpp"

using namespace latq;

namespace {

IMat random_int_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, int span = 6) {
    std::uniform_int_distribution<int> dist(-span, span);
    IMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
    return m;
}

}  // namespace

TEST_CASE("det and inverse") {
    QMat m{{Rat(2), Rat(1)}, {Rat(1), Rat(2)}};
    CHECK(det(m) == 3);
    QMat inv = inverse(m);
    CHECK(inv * m == QMat::identity(2, Rat(1), Rat(0)));
    QMat sing{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
    CHECK(det(sing) == 0);
    CHECK_THROWS_AS(inverse(sing), std::domain_error);
}

TEST_CASE("inertia on known forms") {
    QMat hyper{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
    Inertia in = inertia(hyper);
    CHECK(in.positive == 1);
    CHECK(in.negative == 1);
    CHECK(in.zero == 0);

    QMat neg{{Rat(-2), Rat(0)}, {Rat(0), Rat(-2)}};
    in = inertia(neg);
    CHECK(in.positive == 0);
    CHECK(in.negative == 2);

    QMat degenerate{{Rat(1), Rat(1)}, {Rat(1), Rat(1)}};
    in = inertia(degenerate);
    CHECK(in.zero == 1);
    CHECK(in.positive == 1);
}

TEST_CASE("kernel basis") {
    IMat m{{Int(1), Int(1)}};
    IMat k = kernel_basis(m);
    REQUIRE(k.cols() == 1);
    CHECK(abs(k(0, 0)) == 1);
    CHECK(k(0, 0) + k(1, 0) == 0);

    // saturation: the kernel of [2 2] is generated by (1,-1), not (2,-2)
    IMat m2{{Int(2), Int(2)}};
    IMat k2 = kernel_basis(m2);
    REQUIRE(k2.cols() == 1);
    CHECK(abs(k2(0, 0)) == 1);
}

TEST_CASE("kernel properties on random matrices") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        IMat m = random_int_matrix(3, 5, rng);
        IMat k = kernel_basis(m);
        // members really lie in the kernel
        for (std::size_t j = 0; j < k.cols(); ++j)
            for (std::size_t i = 0; i < 3; ++i) {
                Int s = 0;
                for (std::size_t l = 0; l < 5; ++l) s += m(i, l) * k(l, j);
                CHECK(s == 0);
            }
        // rank-nullity over Q
        CHECK(k.cols() == 5 - rank(to_rational(m)));
        // saturation: all elementary divisors of the kernel basis are 1
        if (k.cols() > 0) {
            auto divs = invariant_factors(k);
            CHECK(divs.empty());
        }
    }
}

TEST_CASE("smith normal form") {
    IMat m{{Int(2), Int(0)}, {Int(0), Int(6)}};
    auto d = snf_diagonal(m);
    REQUIRE(d.size() == 2);
    CHECK(d[0] == 2);
    CHECK(d[1] == 6);

    IMat a2{{Int(2), Int(-1)}, {Int(-1), Int(2)}};
    auto f = invariant_factors(a2);
    REQUIRE(f.size() == 1);
    CHECK(f[0] == 3);
}

TEST_CASE("snf divisibility and determinant on random matrices") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        IMat m = random_int_matrix(4, 4, rng);
        auto d = snf_diagonal(m);
        for (std::size_t i = 0; i + 1 < d.size(); ++i)
            if (d[i + 1] != 0) CHECK(d[i + 1] % d[i] == 0);
        Int prod = 1;
        for (const auto& v : d) prod *= v;
        CHECK(prod == abs(det(to_rational(m)).get_num()));
    }
}

TEST_CASE("inertia matches diagonal signs on random congruences") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> sign(-1, 1);
    for (int trial = 0; trial < 100; ++trial) {
        // build D with known signs, conjugate by a random unimodular-ish matrix
        std::size_t n = 4;
        QMat d(n, n, Rat(0));
        Inertia expect;
        for (std::size_t i = 0; i < n; ++i) {
            int s = sign(rng);
            d(i, i) = Rat(s);
            if (s > 0) expect.positive++;
            else if (s < 0) expect.negative++;
            else expect.zero++;
        }
        IMat t = random_int_matrix(n, n, rng, 3);
        for (std::size_t i = 0; i < n; ++i) t(i, i) += 7;  // make it very likely invertible
        QMat tq = to_rational(t);
        if (det(tq) == 0) continue;
        Inertia got = inertia(tq.transpose() * d * tq);
        CHECK(got.positive == expect.positive);
        CHECK(got.negative == expect.negative);
        CHECK(got.zero == expect.zero);
    }
}
