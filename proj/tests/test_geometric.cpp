#include "brute.hpp"

#include "chambered/catalog.hpp"
#include "chambered/error.hpp"
#include "chambered/geometric.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace chambered;

TEST_CASE("generator matrices match the reflection formula") {
    for (const InputGraph& g : {catalog::affine_A(1), catalog::affine_A(2), catalog::affine_D(4),
                                catalog::affine_E(6)}) {
        const CoxeterSystem sys(g);
        for (int i = 0; i < sys.rank(); ++i) {
            const IntMatrix s = sigma_generator_matrix(sys, i);
            const auto ref = brute::reflection(g, i);
            for (int r = 0; r < sys.rank(); ++r)
                for (int c = 0; c < sys.rank(); ++c)
                    CHECK(s(r, c) == ref[r][c]);
            CHECK(sigma_star_generator_matrix(sys, i) == s.transpose());
        }
    }
}

TEST_CASE("A~1 roots up to length one") {
    const CoxeterSystem sys(catalog::affine_A(1));
    std::set<IntVector> got;
    for (const auto& r : real_roots_up_to(sys, 1))
        got.insert(r.coords);
    const std::set<IntVector> expected{{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {2, 1}, {1, 2}};
    CHECK(got == expected);
}

TEST_CASE("real roots are sign-coherent unit vectors for the form") {
    for (const InputGraph& g : {catalog::affine_A(2), catalog::affine_D(4)}) {
        const CoxeterSystem sys(g);
        const auto roots = real_roots_up_to(sys, 4);
        for (const auto& r : roots) {
            int pos = 0, neg = 0;
            for (const auto& x : r.coords) {
                pos += sgn(x) > 0;
                neg += sgn(x) < 0;
            }
            CHECK((pos == 0) != (neg == 0));
            CHECK(r.positive == (pos > 0));
            // (beta, beta) = 1 for the normalised Gram matrix.
            const RatVector q = sys.gram().apply(to_rational(r.coords));
            CHECK(dot(q, to_rational(r.coords)) == Rational(1));
        }
        // One positive representative per +-pair.
        std::set<IntVector> classes;
        for (const auto& r : roots) {
            IntVector rep = r.coords;
            if (!r.positive)
                for (auto& x : rep)
                    x = -x;
            classes.insert(rep);
        }
        const auto hyperplanes = reflection_hyperplanes(roots);
        CHECK(std::set<IntVector>(hyperplanes.begin(), hyperplanes.end()) == classes);
        CHECK(hyperplanes.size() == classes.size());
    }
}

TEST_CASE("inversion count equals length") {
    const CoxeterSystem sys(catalog::affine_A(2));
    const auto positive = reflection_hyperplanes(real_roots_up_to(sys, 6));
    for (const auto& w : sys.enumerate_up_to_length(3).elements) {
        const IntMatrix inv = sys.inverse(w).sigma();
        int inversions = 0;
        for (const auto& beta : positive) {
            const IntVector image = inv.apply(beta);
            inversions += sgn(image[0]) < 0 || sgn(image[1]) < 0 || sgn(image[2]) < 0;
        }
        CHECK(inversions == w.length());
    }
}

TEST_CASE("pairing and level are invariant under the contragredient action") {
    const CoxeterSystem sys(catalog::affine_E(6));
    const auto elems = sys.enumerate_up_to_length(4).elements;
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> d(-20, 20);
    for (int trial = 0; trial < 30; ++trial) {
        Covector f(sys.rank());
        RootVector v(sys.rank());
        for (int k = 0; k < sys.rank(); ++k) {
            f[k] = Rational(d(rng), 1 + trial % 3);
            f[k].canonicalize();
            v[k] = d(rng);
        }
        const Rational base = pairing(f, v);
        const Rational lv = level(sys, f);
        for (const auto& w : elems) {
            const Covector wf = to_rational(w.sigma_star()).apply(f);
            CHECK(pairing(wf, w.sigma().apply(v)) == base);
            CHECK(level(sys, wf) == lv);
        }
    }
}

TEST_CASE("null root is fixed by every element") {
    const CoxeterSystem sys(catalog::affine_D(4));
    for (const auto& w : sys.enumerate_up_to_length(4).elements)
        CHECK(w.sigma().apply(sys.null_root()) == sys.null_root());
}

TEST_CASE("errors") {
    const CoxeterSystem sys(catalog::affine_A(2));
    CHECK_THROWS_AS(pairing(Covector{1, 2}, RootVector{1, 2, 3}), InputError);
    const CoxeterSystem hyperbolic(InputGraph{2, {{0, 1}, {0, 1}, {0, 1}}});
    CHECK_THROWS_AS(level(hyperbolic, Covector{1, 1}), NotAffineError);
}
