#include "brute.hpp"

#include "chambered/catalog.hpp"
#include "chambered/coxeter.hpp"
#include "chambered/error.hpp"
#include "chambered/linalg.hpp"

#include <doctest.h>

#include <set>

using namespace chambered;

namespace {

brute::Mat to_brute(const IntMatrix& m) {
    brute::Mat out(m.rows(), std::vector<std::int64_t>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out[r][c] = m(r, c).get_si();
    return out;
}

std::vector<std::size_t> level_sizes(const Ball& ball) {
    std::vector<std::size_t> sizes(ball.max_length + 1, 0);
    for (const auto& w : ball.elements)
        ++sizes[w.length()];
    return sizes;
}

} // namespace

TEST_CASE("ball sizes of small affine groups") {
    const CoxeterSystem a1(catalog::affine_A(1));
    CHECK(a1.enumerate_up_to_length(3).elements.size() == 7);
    const CoxeterSystem a2(catalog::affine_A(2));
    CHECK(a2.enumerate_up_to_length(2).elements.size() == 10);
    CHECK(level_sizes(a2.enumerate_up_to_length(5)) ==
          std::vector<std::size_t>{1, 3, 6, 9, 12, 15});
}

TEST_CASE("enumeration agrees with exhaustive word search") {
    const std::vector<std::pair<InputGraph, int>> cases{
        {catalog::affine_A(1), 7}, {catalog::affine_A(2), 5}, {catalog::affine_A(3), 4},
        {catalog::affine_D(4), 4}, {catalog::affine_E(6), 3}};
    for (const auto& [graph, L] : cases) {
        const CoxeterSystem sys(graph);
        const Ball ball = sys.enumerate_up_to_length(L);
        const auto reference = brute::all_words(graph, L);
        REQUIRE(ball.elements.size() == reference.size());
        std::set<brute::Mat> seen;
        for (const auto& w : ball.elements) {
            const auto it = reference.find(to_brute(w.sigma()));
            REQUIRE(it != reference.end());
            CHECK(w.length() == it->second.length);
            CHECK(w.word() == it->second.least_word);
            seen.insert(it->first);
        }
        CHECK(seen.size() == reference.size());

        // Covering pairs: w -> w s_i with length going up by one.
        std::set<std::tuple<std::size_t, std::size_t, int>> expected, got;
        std::map<brute::Mat, std::size_t> index;
        for (std::size_t k = 0; k < ball.elements.size(); ++k)
            index[to_brute(ball.elements[k].sigma())] = k;
        for (std::size_t k = 0; k < ball.elements.size(); ++k)
            for (int i = 0; i < sys.rank(); ++i) {
                const auto m = brute::mul(to_brute(ball.elements[k].sigma()),
                                          brute::reflection(graph, i));
                const auto it = index.find(m);
                if (it != index.end() &&
                    ball.elements[it->second].length() == ball.elements[k].length() + 1)
                    expected.emplace(k, it->second, i);
            }
        for (const auto& e : ball.edges)
            got.emplace(e.from, e.to, e.generator);
        CHECK(got == expected);
    }
}

TEST_CASE("descents, inverses and determinants on the A~2 ball") {
    const CoxeterSystem sys(catalog::affine_A(2));
    const Ball ball = sys.enumerate_up_to_length(5);
    for (const auto& w : ball.elements) {
        const Int det = determinant(w.sigma());
        CHECK(det == (w.length() % 2 == 0 ? 1 : -1));
        CHECK(sys.multiply(w, sys.inverse(w)) == sys.identity());
        CHECK(sys.inverse(w).length() == w.length());
        for (int i = 0; i < sys.rank(); ++i) {
            CHECK(sys.is_right_descent(w, i) == (sys.right_multiply(w, i).length() < w.length()));
            CHECK(sys.is_left_descent(w, i) == (sys.left_multiply(i, w).length() < w.length()));
            CHECK(sys.right_multiply(sys.right_multiply(w, i), i) == w);
        }
        // sigma* is the inverse transpose of sigma.
        CHECK(w.sigma_star().transpose() * w.sigma() == IntMatrix::identity(sys.rank()));
    }
}

TEST_CASE("reduced words are exactly the minimal words for the element") {
    const InputGraph graph = catalog::affine_A(2);
    const CoxeterSystem sys(graph);
    for (const auto& w : sys.enumerate_up_to_length(4).elements) {
        const auto words = sys.reduced_words(w);
        // Independent count: all words of length l(w) with product w.
        std::size_t expected = 0;
        std::vector<int> word(w.length(), 0);
        const auto target = to_brute(w.sigma());
        while (true) {
            brute::Mat m = brute::identity(3);
            for (int g : word)
                m = brute::mul(m, brute::reflection(graph, g));
            if (m == target)
                ++expected;
            int pos = w.length() - 1;
            while (pos >= 0 && word[pos] == 2)
                word[pos--] = 0;
            if (pos < 0)
                break;
            ++word[pos];
        }
        CHECK(words.size() == expected);
        for (const auto& rw : words) {
            CHECK(sys.is_reduced(rw));
            CHECK(sys.element(rw) == w);
        }
        CHECK(words.front() == w.word());
    }
}

TEST_CASE("weak order is a partial order matching reduced-word prefixes") {
    const CoxeterSystem sys(catalog::affine_A(2));
    const auto elems = sys.enumerate_up_to_length(4).elements;
    for (const auto& v : elems) {
        CHECK(sys.weak_order_leq(v, v));
        CHECK(sys.weak_order_leq(sys.identity(), v));
        for (const auto& w : elems) {
            bool prefix = false;
            for (const auto& rw : sys.reduced_words(w))
                if (v.length() <= w.length() &&
                    sys.element(Word(rw.begin(), rw.begin() + v.length())) == v)
                    prefix = true;
            CHECK(sys.weak_order_leq(v, w) == prefix);
            if (!(v == w) && sys.weak_order_leq(v, w))
                CHECK_FALSE(sys.weak_order_leq(w, v));
        }
    }
    for (const auto& u : elems)
        for (const auto& v : elems)
            if (sys.weak_order_leq(u, v))
                for (const auto& w : elems)
                    if (sys.weak_order_leq(v, w))
                        CHECK(sys.weak_order_leq(u, w));
}

TEST_CASE("null roots are the known marks") {
    CHECK(CoxeterSystem(catalog::affine_A(1)).null_root() == IntVector{1, 1});
    CHECK(CoxeterSystem(catalog::affine_A(2)).null_root() == IntVector{1, 1, 1});
    CHECK(CoxeterSystem(catalog::affine_D(4)).null_root() == IntVector{1, 1, 2, 1, 1});
    CHECK(CoxeterSystem(catalog::affine_D(5)).null_root() == IntVector{1, 1, 2, 2, 1, 1});
    CHECK(CoxeterSystem(catalog::affine_E(6)).null_root() == IntVector{1, 2, 1, 2, 3, 2, 1});
    CHECK(CoxeterSystem(catalog::affine_E(7)).null_root() == IntVector{2, 1, 2, 3, 4, 3, 2, 1});
    CHECK(CoxeterSystem(catalog::affine_E(8)).null_root() ==
          IntVector{3, 2, 4, 6, 5, 4, 3, 2, 1});
}

TEST_CASE("graph classification and validation") {
    CHECK_THROWS_AS(CoxeterSystem(catalog::dynkin_A(3)), NotAffineError);
    CHECK(CoxeterSystem(catalog::affine_A(3)).kind() == GraphKind::affine);
    // Triple edge: hyperbolic, accepted but without a null root.
    const CoxeterSystem triple(InputGraph{2, {{0, 1}, {0, 1}, {0, 1}}});
    CHECK(triple.kind() == GraphKind::other);
    CHECK(triple.label(0, 1) == kInfiniteOrder);
    CHECK_THROWS_AS(triple.null_root(), NotAffineError);
    // Star with five leaves is not affine either.
    InputGraph star{6, {}};
    for (int v = 1; v < 6; ++v)
        star.edges.emplace_back(0, v);
    CHECK(CoxeterSystem(star).kind() == GraphKind::other);

    CHECK_THROWS_AS(CoxeterSystem(InputGraph{1, {}}), InputError);
    CHECK_THROWS_AS(CoxeterSystem(InputGraph{3, {{0, 1}}}), InputError);
    CHECK_THROWS_AS(CoxeterSystem(InputGraph{2, {{0, 0}, {0, 1}}}), InputError);
    CHECK_THROWS_AS(CoxeterSystem(InputGraph{2, {{0, 2}}}), InputError);
}

TEST_CASE("labels follow edge multiplicity") {
    const CoxeterSystem a2(catalog::affine_A(2));
    CHECK(a2.label(0, 0) == 1);
    CHECK(a2.label(0, 1) == 3);
    const CoxeterSystem d4(catalog::affine_D(4));
    CHECK(d4.label(0, 1) == 2);
    const CoxeterSystem a1(catalog::affine_A(1));
    CHECK(a1.label(0, 1) == kInfiniteOrder);
}

TEST_CASE("serial and parallel enumeration are identical; cap is enforced") {
    const CoxeterSystem sys(catalog::affine_D(4));
    EnumerateOptions serial, parallel;
    serial.exec = Exec::serial;
    parallel.exec = Exec::parallel;
    const Ball a = sys.enumerate_up_to_length(5, serial);
    const Ball b = sys.enumerate_up_to_length(5, parallel);
    REQUIRE(a.elements.size() == b.elements.size());
    for (std::size_t k = 0; k < a.elements.size(); ++k)
        CHECK(a.elements[k].word() == b.elements[k].word());
    CHECK(a.edges.size() == b.edges.size());

    EnumerateOptions tight;
    tight.max_elements = 10;
    CHECK_THROWS_AS(sys.enumerate_up_to_length(5, tight), CapExceeded);
}

TEST_CASE("non-reduced words collapse to their canonical element") {
    const CoxeterSystem sys(catalog::affine_A(2));
    CHECK(sys.element({0, 0}) == sys.identity());
    CHECK(sys.element({0, 1, 0}).word() == Word{0, 1, 0});
    CHECK(sys.element({1, 0, 1}).word() == Word{0, 1, 0});
    CHECK_FALSE(sys.is_reduced({0, 1, 1}));
    CHECK_THROWS_AS(sys.element({3}), InputError);
}
