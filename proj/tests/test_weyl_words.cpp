#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "mvlab/lusztig.hpp"
#include "mvlab/weyl_words.hpp"

using namespace mvlab;

namespace {

// beta_k computed in the simple-root basis with the Cartan matrix, without
// permutations: s_i(x) = x - <h_i, x> alpha_i.
std::vector<std::vector<int>> roots_by_reflection(const ReducedWord& w) {
    const int n = w.rank().n;
    std::vector<std::vector<int>> out;
    for (int k = 0; k < w.size(); ++k) {
        std::vector<int> x(static_cast<std::size_t>(n), 0);
        x[static_cast<std::size_t>(w.letters()[static_cast<std::size_t>(k)] - 1)] = 1;
        for (int m = k - 1; m >= 0; --m) {
            const int i = w.letters()[static_cast<std::size_t>(m)];
            int pair = 2 * x[static_cast<std::size_t>(i - 1)];
            if (i > 1) pair -= x[static_cast<std::size_t>(i - 2)];
            if (i < n) pair -= x[static_cast<std::size_t>(i)];
            x[static_cast<std::size_t>(i - 1)] -= pair;
        }
        out.push_back(x);
    }
    return out;
}

std::vector<int> as_coeffs(Root r, int n) {
    std::vector<int> x(static_cast<std::size_t>(n), 0);
    for (int s = r.i; s < r.j; ++s) x[static_cast<std::size_t>(s - 1)] = 1;
    return x;
}

// All reduced words of w0 by brute force over letter sequences.
std::vector<ReducedWord> all_reduced_words(Rank r) {
    std::vector<ReducedWord> out;
    std::vector<int> letters;
    std::function<void(const Permutation&)> rec = [&](const Permutation& w) {
        if (static_cast<int>(letters.size()) == r.roots()) {
            out.emplace_back(r, letters);
            return;
        }
        for (int i = 1; i <= r.n; ++i)
            if (w.ascends_at(i)) {
                letters.push_back(i);
                rec(w.times_simple(i));
                letters.pop_back();
            }
    };
    rec(Permutation::identity(r));
    return out;
}

}  // namespace

TEST_CASE("rank validation") {
    CHECK_THROWS_AS(Rank(0), Error);
    CHECK(Rank(3).roots() == 6);
    CHECK(Rank(3).letters() == 4);
}

TEST_CASE("lexicographic root index round trips") {
    for (int k = 0; k < 45; ++k) CHECK(lex_root_index(lex_root_at(k)) == k);
    const auto roots = lex_roots(Rank(3));
    CHECK(roots.front() == Root{1, 2});
    CHECK(roots[1] == Root{1, 3});
    CHECK(roots[2] == Root{2, 3});
    CHECK(roots.back() == Root{3, 4});
}

TEST_CASE("permutations") {
    const Rank r(3);
    CHECK(Permutation::longest(r).images() == std::vector<int>{4, 3, 2, 1});
    CHECK(Permutation::longest(r).length() == 6);
    CHECK(Permutation::identity(r).length() == 0);
    CHECK_THROWS_AS(Permutation({1, 1, 2}), Error);
    const int w[] = {1, 2, 1};
    CHECK(Permutation::from_word(Rank(2), w) == Permutation::longest(Rank(2)));
}

TEST_CASE("is_reduced_word_of_w0") {
    const int a[] = {1, 2, 1}, b[] = {1, 2, 2}, c[] = {1, 2, 1, 3, 2, 1}, d[] = {1, 2};
    CHECK(is_reduced_word_of_w0(a, Rank(2)));
    CHECK_FALSE(is_reduced_word_of_w0(b, Rank(2)));
    CHECK(is_reduced_word_of_w0(c, Rank(3)));
    CHECK_FALSE(is_reduced_word_of_w0(d, Rank(2)));
    const int e[] = {1, 3, 1};
    CHECK_FALSE(is_reduced_word_of_w0(e, Rank(2)));
    CHECK_THROWS_AS(ReducedWord(Rank(2), {1, 2, 2}), Error);
    CHECK(ReducedWord::lex_minimal(Rank(3)).letters() == std::vector<int>{1, 2, 1, 3, 2, 1});
}

TEST_CASE("roots_in_order small cases") {
    CHECK(roots_in_order(ReducedWord(Rank(2), {1, 2, 1})) == std::vector<Root>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(roots_in_order(ReducedWord(Rank(2), {2, 1, 2})) == std::vector<Root>{{2, 3}, {1, 3}, {1, 2}});
}

TEST_CASE("roots_in_order agrees with reflections in the root basis") {
    for (int n = 1; n <= 4; ++n)
        for (const ReducedWord& w : all_reduced_words(Rank(n))) {
            const auto got = roots_in_order(w);
            const auto want = roots_by_reflection(w);
            std::set<std::pair<int, int>> seen;
            for (std::size_t k = 0; k < got.size(); ++k) {
                CHECK(as_coeffs(got[k], n) == want[k]);
                seen.insert({got[k].i, got[k].j});
            }
            CHECK(static_cast<int>(seen.size()) == Rank(n).roots());
        }
}

TEST_CASE("lexicographic word orders roots by j then i") {
    for (int n = 1; n <= 6; ++n) CHECK(roots_in_order(ReducedWord::lex_minimal(Rank(n))) == lex_roots(Rank(n)));
}

TEST_CASE("braid moves") {
    std::vector<int> w{1, 2, 1, 3, 2, 1};
    CHECK(move_applies(w, {BraidMove::Kind::Braid, 1}));
    CHECK_FALSE(move_applies(w, {BraidMove::Kind::Commute, 1}));
    CHECK(move_applies(w, {BraidMove::Kind::Commute, 3}));
    CHECK_FALSE(move_applies(w, {BraidMove::Kind::Braid, 5}));
    CHECK_FALSE(move_applies(w, {BraidMove::Kind::Commute, 0}));
    apply_move(w, {BraidMove::Kind::Braid, 1});
    CHECK(w == std::vector<int>{2, 1, 2, 3, 2, 1});
    CHECK_THROWS_AS(apply_move(w, {BraidMove::Kind::Commute, 1}), Error);
    CHECK(to_string(BraidMove{BraidMove::Kind::Commute, 4}) == "2move@4");
}

TEST_CASE("braid_path") {
    const ReducedWord a(Rank(2), {1, 2, 1}), b(Rank(2), {2, 1, 2});
    CHECK(braid_path(a, a).empty());
    const auto p = braid_path(a, b);
    REQUIRE(p.size() == 1);
    CHECK(p[0] == BraidMove{BraidMove::Kind::Braid, 1});

    const auto i0 = ReducedWord::lex_minimal(Rank(3));
    for (const ReducedWord& w : all_reduced_words(Rank(3))) CHECK(apply_moves(i0, braid_path(i0, w)) == w);

    CHECK_THROWS_AS(braid_path(a, i0), Error);
    CHECK_THROWS_AS(braid_path(ReducedWord::lex_minimal(Rank(7)), ReducedWord::lex_minimal(Rank(7))), ResourceLimit);
}

TEST_CASE("transition examples") {
    const ReducedWord a(Rank(2), {1, 2, 1}), b(Rank(2), {2, 1, 2});
    const std::vector<int> x{1, 0, 0};
    CHECK(transition(x, a, b) == std::vector<int>{0, 0, 1});
    CHECK(transition(x, a, a) == x);
    const std::vector<int> y{2, 1, 3};
    CHECK(transition(transition(y, a, b), b, a) == y);
    CHECK_THROWS_AS(transition(std::vector<int>{1, 2}, a, b), Error);
    CHECK_THROWS_AS(transition(x, a, ReducedWord::lex_minimal(Rank(3))), Error);
}

TEST_CASE("transition preserves weight and round trips for all words, n <= 3") {
    for (int n = 1; n <= 3; ++n) {
        const Rank r(n);
        const auto i0 = ReducedWord::lex_minimal(r);
        const auto words = all_reduced_words(r);
        for_each_by_height(r, 4, [&](const LusztigDatum& a) {
            for (const ReducedWord& w : words) {
                const auto x = transition(a.entries(), i0, w);
                CHECK(std::all_of(x.begin(), x.end(), [](int v) { return v >= 0; }));
                std::vector<int> wa(static_cast<std::size_t>(n), 0), wx(static_cast<std::size_t>(n), 0);
                const auto ra = roots_in_order(i0), rx = roots_in_order(w);
                for (std::size_t k = 0; k < x.size(); ++k)
                    for (int s = 1; s <= n; ++s) {
                        if (ra[k].contains_simple(s)) wa[static_cast<std::size_t>(s - 1)] += a.entries()[k];
                        if (rx[k].contains_simple(s)) wx[static_cast<std::size_t>(s - 1)] += x[k];
                    }
                CHECK(wa == wx);
                CHECK(transition(x, w, i0) == a.entries());
            }
        });
    }
}
