#include "chambered/arith.hpp"
#include "chambered/error.hpp"
#include "chambered/linalg.hpp"

#include <doctest.h>

#include <random>

using namespace chambered;

namespace {

RatMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int range) {
    std::uniform_int_distribution<int> d(-range, range);
    RatMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = d(rng);
    return m;
}

// Cofactor expansion, exponential but independent of the elimination code.
Int cofactor_det(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 1)
        return m(0, 0);
    Int acc = 0;
    for (std::size_t c = 0; c < n; ++c) {
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t k = 0, kk = 0; k < n; ++k)
                if (k != c)
                    minor(r - 1, kk++) = m(r, k);
        const Int term = m(0, c) * cofactor_det(minor);
        acc += (c % 2 == 0) ? term : Int(-term);
    }
    return acc;
}

} // namespace

TEST_CASE("parse_rational accepts integers and fractions only") {
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("-7/21") == Rational(-1, 3));
    CHECK(parse_rational("4/2") == Rational(2));
    CHECK_THROWS_AS(parse_rational(""), InputError);
    CHECK_THROWS_AS(parse_rational("1.5"), InputError);
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("x"), InputError);
    CHECK_THROWS_AS(parse_rational("1/-2"), InputError);
}

TEST_CASE("primitive_integer_vector clears denominators and common factors") {
    const RatVector v{Rational(1, 2), Rational(-3, 4), Rational(0)};
    CHECK(primitive_integer_vector(v) == IntVector{2, -3, 0});
    const RatVector w{Rational(6), Rational(9)};
    CHECK(primitive_integer_vector(w) == IntVector{2, 3});
}

TEST_CASE("Bareiss determinant matches cofactor expansion") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> d(-6, 6);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 5;
        IntMatrix m(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                m(r, c) = d(rng);
        CHECK(determinant(m) == cofactor_det(m));
    }
}

TEST_CASE("nullspace vectors are killed and count matches rank-nullity") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t rows = 1 + trial % 4, cols = 2 + trial % 5;
        RatMatrix m = random_matrix(rng, rows, cols, 2);
        if (trial % 3 == 0 && rows > 1)  // force a dependent row
            for (std::size_t c = 0; c < cols; ++c)
                m(rows - 1, c) = m(0, c) * 2;
        const auto ns = nullspace(m);
        CHECK(ns.size() + rank(m) == cols);
        for (const auto& v : ns)
            CHECK(is_zero(m.apply(v)));
    }
}

TEST_CASE("inverse and solve agree with multiplication") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 50; ++trial) {
        const RatMatrix a = random_matrix(rng, 4, 4, 3);
        const auto inv = inverse(a);
        if (!inv) {
            CHECK(rank(a) < 4);
            continue;
        }
        CHECK(a * *inv == RatMatrix::identity(4));
        const RatVector b{1, -2, 3, 0};
        const auto x = solve(a, b);
        REQUIRE(x);
        CHECK(a.apply(*x) == b);
    }
}

TEST_CASE("symmetric inertia of small forms") {
    RatMatrix affine(2, 2);
    affine(0, 0) = 1;
    affine(0, 1) = -1;
    affine(1, 0) = -1;
    affine(1, 1) = 1;
    const Inertia a = symmetric_inertia(affine);
    CHECK(a.positive_semidefinite);
    CHECK(a.zero_pivots == 1);

    RatMatrix indefinite(2, 2);
    indefinite(0, 1) = 1;
    indefinite(1, 0) = 1;
    CHECK_FALSE(symmetric_inertia(indefinite).positive_semidefinite);
}

TEST_CASE("Subspace membership is independent of insertion order") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const RatMatrix m = random_matrix(rng, 4, 6, 2);
        Subspace forward(6), backward(6);
        for (std::size_t r = 0; r < 4; ++r) {
            forward.add(std::vector<Rational>(m.row(r).begin(), m.row(r).end()));
            backward.add(std::vector<Rational>(m.row(3 - r).begin(), m.row(3 - r).end()));
        }
        CHECK(forward == backward);
        CHECK(forward.dim() == rank(m));
        RatVector combo(6);
        for (std::size_t c = 0; c < 6; ++c)
            combo[c] = m(0, c) * 3 - m(2, c);
        CHECK(forward.contains(combo));
        CHECK_FALSE(forward.add(combo));
    }
}
