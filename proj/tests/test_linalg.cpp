#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mvlab/linalg.hpp"

using namespace mvlab;

TEST_CASE("rational rank") {
    CHECK(rank(Matrix<Rational>(0, 3)) == 0);
    CHECK(rank(Matrix<Rational>(3, 3)) == 0);
    CHECK(rank(Matrix<Rational>::identity(4)) == 4);
    Matrix<Rational> m(3, 3);
    int v = 1;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m(r, c) = v++;
    CHECK(rank(m) == 2);
    Matrix<Rational> h(3, 3);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) h(r, c) = Rational(1, r + c + 1);
    CHECK(rank(h) == 3);
}

TEST_CASE("rational product") {
    Matrix<Rational> a(2, 3), b(3, 1);
    a(0, 0) = 1;
    a(0, 2) = 2;
    a(1, 1) = Rational(1, 2);
    b(0, 0) = 3;
    b(1, 0) = 4;
    b(2, 0) = 5;
    const auto c = multiply(a, b);
    CHECK(c.rows() == 2);
    CHECK(c.cols() == 1);
    CHECK(c(0, 0) == 13);
    CHECK(c(1, 0) == 2);
    CHECK_THROWS_AS(multiply(b, b), Error);
}

TEST_CASE("prime field") {
    CHECK(is_prime(65521));
    CHECK(is_prime(2147483647));
    CHECK_FALSE(is_prime(65535));
    CHECK_FALSE(is_prime(1));
    CHECK_THROWS_AS(PrimeField(2), Error);
    CHECK_THROWS_AS(PrimeField(65535), Error);
    CHECK_THROWS_AS(PrimeField(4294967311ULL), Error);
    const PrimeField F(65521);
    CHECK(F.from_int(-1) == 65520);
    CHECK(F.from_int(65521 * 3 + 2) == 2);
    for (std::uint64_t a : {1ULL, 2ULL, 12345ULL, 65520ULL}) CHECK(F.mul(a, F.inv(a)) == 1);
    CHECK_THROWS_AS(F.inv(0), Error);
    CHECK(F.add(F.neg(7), 7) == 0);
    CHECK(F.sub(3, 5) == 65519);
}

TEST_CASE("modular rank and nullspace") {
    const PrimeField F(65521);
    ModMatrix m(2, 3);
    m(0, 0) = 1;
    m(0, 1) = 2;
    m(1, 0) = 2;
    m(1, 1) = 4;
    CHECK(rank(F, m) == 1);
    const auto basis = nullspace(F, m);
    CHECK(basis.size() == 2);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const int rows = static_cast<int>(rng() % 5), cols = static_cast<int>(rng() % 6) + 1;
        ModMatrix a(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) a(r, c) = rng() % 3;  // small entries force dependencies
        const auto ns = nullspace(F, a);
        CHECK(static_cast<int>(ns.size()) == cols - rank(F, a));
        for (const auto& x : ns) {
            ModMatrix col(cols, 1);
            for (int c = 0; c < cols; ++c) col(c, 0) = x[static_cast<std::size_t>(c)];
            const ModMatrix y = multiply(F, a, col);
            for (int r = 0; r < rows; ++r) CHECK(y(r, 0) == 0);
        }
    }
    CHECK(nullspace(F, ModMatrix(0, 3)).size() == 3);
}
