#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <climits>
#include <set>

#include "mvlab/maya_bz.hpp"

using namespace mvlab;

namespace {

MayaDiagram maya(int n, std::vector<int> members) { return MayaDiagram(Rank(n), members); }

// Every upper-triangular filling with entries in [1, n+1], filtered by
// is_k_tableau. No pruning.
std::vector<KTableau> brute_force_tableaux(const MayaDiagram& K) {
    const int s = K.size(), top = K.rank().letters();
    std::vector<std::pair<int, int>> cells;
    for (int q = 1; q <= s; ++q)
        for (int p = 1; p <= q; ++p) cells.emplace_back(p, q);
    std::vector<KTableau> out;
    KTableau c(s);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == cells.size()) {
            if (is_k_tableau(c, K)) out.push_back(c);
            return;
        }
        for (int v = 1; v <= top; ++v) {
            c(cells[k].first, cells[k].second) = v;
            rec(k + 1);
        }
    };
    rec(0);
    return out;
}

int brute_force_psi(const LusztigDatum& a, const MayaDiagram& K) {
    const std::vector<int> k = K.members();
    int base = 0;
    for (int kj : k)
        for (int i = 1; i < kj; ++i) base -= a.at(i, kj);
    int best = INT_MAX;
    for (const KTableau& c : brute_force_tableaux(K)) {
        int v = 0;
        for (int q = 2; q <= c.size(); ++q)
            for (int p = 1; p < q; ++p) v += a.at(c(p, q), c(p, q) + (q - p));
        best = std::min(best, v);
    }
    return base + best;
}

}  // namespace

TEST_CASE("Maya diagram construction") {
    const MayaDiagram K = maya(3, {3, 1});
    CHECK(K.members() == std::vector<int>{1, 3});
    CHECK(K.mask() == 0b0101u);
    CHECK(K.size() == 2);
    CHECK(K.contains(1));
    CHECK_FALSE(K.contains(2));
    CHECK_FALSE(K.contains(0));
    CHECK(K.complement().members() == std::vector<int>{2, 4});
    CHECK(to_string(K) == "{1,3}");
    CHECK_THROWS_AS(maya(2, {}), Error);
    CHECK_THROWS_AS(maya(2, {1, 2, 3}), Error);
    CHECK_THROWS_AS(maya(2, {4}), Error);
    CHECK_THROWS_AS(maya(2, {0}), Error);
    CHECK_THROWS_AS(maya(2, {1, 1}), Error);
    CHECK_THROWS_AS(MayaDiagram::from_mask(Rank(2), 0), Error);
    CHECK_THROWS_AS(MayaDiagram::from_mask(Rank(2), 0b111), Error);
    CHECK(MayaDiagram::interval(Rank(4), 2, 4).members() == std::vector<int>{2, 3, 4});
    CHECK(all_maya_diagrams(Rank(3)).size() == 14);
}

TEST_CASE("components of the n = 17 diagram") {
    const MayaDiagram K = maya(17, {3, 4, 7, 8, 10, 11, 12, 14, 15});
    const MayaComponents c = components(K);
    CHECK(c.out_set == std::vector<int>{4, 8, 12, 15});
    CHECK(c.in_set == std::vector<int>{2, 6, 9, 13});
    CHECK(c.s_K == 1);
    CHECK(c.t_K == 15);
    CHECK(c.intervals.size() == 4);
}

TEST_CASE("components of leading intervals") {
    for (int n = 2; n <= 6; ++n)
        for (int i = 1; i < n; ++i) {
            const MayaComponents c = components(MayaDiagram::interval(Rank(n), 1, i));
            CHECK(c.out_set == std::vector<int>{i});
            CHECK(c.in_set.empty());
            CHECK(c.s_K == i + 1);
            CHECK(c.t_K == i);
        }
    const MayaComponents c = components(maya(3, {4}));
    CHECK(c.out_set.empty());
    CHECK(c.in_set == std::vector<int>{3});
}

TEST_CASE("reflect") {
    for (int n = 1; n <= 5; ++n)
        for (int i = 1; i <= n; ++i) {
            const Rank r(n);
            std::vector<int> want;
            for (int k = 1; k <= i + 1; ++k)
                if (k != i) want.push_back(k);
            CHECK(reflect(MayaDiagram::interval(r, 1, i), i).members() == want);
            for (const MayaDiagram& K : all_maya_diagrams(r)) {
                CHECK(reflect(reflect(K, i), i) == K);
                if (K.contains(i) && K.contains(i + 1)) CHECK(reflect(K, i) == K);
            }
        }
    CHECK_THROWS_AS(reflect(maya(2, {1}), 3), Error);
}

TEST_CASE("K-tableau counts") {
    for (int n = 1; n <= 6; ++n) {
        const Rank r(n);
        for (int i = 1; i <= n; ++i) {
            const auto one = enumerate_k_tableaux(MayaDiagram::interval(r, i + 1, n + 1));
            REQUIRE(one.size() == 1);
            for (int q = 1; q <= one[0].size(); ++q)
                for (int p = 1; p <= q; ++p) CHECK(one[0](p, q) == i + p);
            std::vector<int> members{i};
            for (int k = i + 2; k <= n + 1; ++k) members.push_back(k);
            CHECK(static_cast<int>(enumerate_k_tableaux(MayaDiagram(r, members)).size()) == n + 1 - i);
        }
        for (int k = 1; k <= n + 1; ++k) {
            const auto t = enumerate_k_tableaux(MayaDiagram(r, {k}));
            REQUIRE(t.size() == 1);
            CHECK(t[0](1, 1) == k);
        }
    }
}

TEST_CASE("K-tableau enumeration matches brute force") {
    for (int n = 1; n <= 3; ++n)
        for (const MayaDiagram& K : all_maya_diagrams(Rank(n))) {
            const auto fast = enumerate_k_tableaux(K);
            const auto slow = brute_force_tableaux(K);
            CHECK(fast.size() == slow.size());
            for (const KTableau& c : fast) CHECK(is_k_tableau(c, K));
        }
}

TEST_CASE("is_k_tableau rejects bad fillings") {
    const MayaDiagram K = maya(2, {1, 3});
    KTableau c(2);
    c(1, 1) = 1;
    c(2, 2) = 3;
    c(1, 2) = 2;
    CHECK(is_k_tableau(c, K));
    c(1, 2) = 3;  // column no longer strict
    CHECK_FALSE(is_k_tableau(c, K));
    c(1, 2) = 2;
    c(1, 1) = 2;  // diagonal must be K
    CHECK_FALSE(is_k_tableau(c, K));
    CHECK_FALSE(is_k_tableau(KTableau(3), K));
}

TEST_CASE("psi examples") {
    const BZDatum zero = psi(LusztigDatum(Rank(3)));
    for (const MayaDiagram& K : all_maya_diagrams(Rank(3))) CHECK(zero.at(K) == 0);
    CHECK(zero.flavor() == Flavor::E);

    const BZDatum M = psi(LusztigDatum(Rank(2), {1, 0, 0}));
    const std::vector<std::vector<int>> order{{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}};
    const std::vector<int> want{0, -1, 0, 0, 0, -1};
    for (std::size_t k = 0; k < order.size(); ++k) CHECK(M.at(maya(2, order[k])) == want[k]);
}

TEST_CASE("psi on trailing intervals is minus m_i") {
    for (int n = 1; n <= 3; ++n)
        for_each_by_height(Rank(n), 4, [n](const LusztigDatum& a) {
            const Weight w = weight(a);
            for (int i = 1; i <= n; ++i) CHECK(psi_component(a, MayaDiagram::interval(Rank(n), i + 1, n + 1)) == w[i]);
        });
}

TEST_CASE("psi agrees with an unpruned minimum") {
    for (int n = 1; n <= 3; ++n)
        for_each_by_height(Rank(n), 3, [n](const LusztigDatum& a) {
            const BZDatum M = psi(a);
            for (const MayaDiagram& K : all_maya_diagrams(Rank(n))) CHECK(M.at(K) == brute_force_psi(a, K));
        });
}

TEST_CASE("axioms") {
    CHECK(check_axioms(BZDatum(Rank(3), Flavor::E)).ok());
    CHECK(check_axioms(BZDatum(Rank(3), Flavor::W0)).ok());
    for (int n = 1; n <= 3; ++n)
        for_each_by_height(Rank(n), 4, [](const LusztigDatum& a) {
            const BZDatum M = psi(a);
            CHECK(check_axioms(M).ok());
            CHECK(check_axioms(star(M)).ok());
        });

    BZDatum bad = psi(LusztigDatum(Rank(2), {1, 1, 0}));
    bad.set(maya(2, {2}), bad.at(maya(2, {2})) + 1);
    const AxiomReport report = check_axioms(bad);
    CHECK_FALSE(report.ok());
    CHECK(check_axioms(bad, 1).violations.size() == 1);
    CHECK_FALSE(to_string(report.violations.front(), Rank(2)).empty());

    // w0 flavor pins the trailing intervals to 0.
    BZDatum w0(Rank(2), Flavor::W0);
    w0.set(maya(2, {3}), -1);
    CHECK_FALSE(check_axioms(w0).ok());
}

TEST_CASE("star") {
    const BZDatum M = psi(LusztigDatum(Rank(3), {1, 0, 2, 0, 1, 0}));
    const BZDatum S = star(M);
    CHECK(S.flavor() == Flavor::W0);
    for (const MayaDiagram& K : all_maya_diagrams(Rank(3))) CHECK(S.at(K) == M.at(K.complement()));
    CHECK(star(S) == M);
    CHECK(star(BZDatum(Rank(2), Flavor::E)) == BZDatum(Rank(2), Flavor::W0));
}

TEST_CASE("weight and epsilon on BZ data") {
    const BZDatum zero(Rank(3), Flavor::W0);
    CHECK(bz_weight(zero) == Weight(Rank(3)));
    for (int i = 1; i <= 3; ++i) CHECK(bz_epsilon(zero, i) == 0);
    CHECK_THROWS_AS(bz_weight(BZDatum(Rank(3), Flavor::E)), Error);
    CHECK_THROWS_AS(bz_epsilon_star(zero, 1), Error);
    CHECK_THROWS_AS(bz_epsilon(zero, 4), Error);

    for (int n = 1; n <= 3; ++n)
        for_each_by_height(Rank(n), 4, [n](const LusztigDatum& a) {
            const BZDatum M = psi(a);
            CHECK(bz_weight(star(M)) == weight(a));
            CHECK(bz_weight_e(M) == weight(a));
            for (int i = 1; i <= n; ++i) {
                CHECK(bz_epsilon_star(M, i) == epsilon_star(a, i));
                CHECK(bz_epsilon(star(M), i) >= 0);
            }
        });
}

TEST_CASE("lowering operators") {
    const BZDatum one = am_f(BZDatum(Rank(1), Flavor::W0), 1);
    CHECK(one.at(maya(1, {1})) == -1);
    CHECK(one.at(maya(1, {2})) == 0);
    CHECK_THROWS_AS(am_f(BZDatum(Rank(1), Flavor::E), 1), Error);
    CHECK_THROWS_AS(am_f_star(BZDatum(Rank(1), Flavor::W0), 1), Error);

    for (int n = 1; n <= 3; ++n)
        for_each_by_height(Rank(n), 3, [n](const LusztigDatum& a) {
            const BZDatum M = psi(a);
            for (int i = 1; i <= n; ++i) {
                const BZDatum fs = am_f_star(M, i);
                CHECK(fs == star(am_f(star(M), i)));
                CHECK(fs == psi(*apply(a, {CrystalOp::Kind::FStar, i})));
                const MayaDiagram head = MayaDiagram::interval(Rank(n), 1, i);
                CHECK(fs.at(head.complement()) == M.at(head.complement()) - 1);
                const BZDatum f = am_f(star(M), i);
                CHECK(f.at(head) == star(M).at(head) - 1);
                CHECK(check_axioms(f).ok());
            }
        });
}

TEST_CASE("supports") {
    CHECK(in_support(maya(3, {1, 3}), 1));
    CHECK_FALSE(in_support(maya(3, {1, 2}), 1));
    CHECK(in_star_support(maya(3, {2}), 1));
    CHECK_FALSE(in_star_support(maya(3, {1, 2}), 1));
}

TEST_CASE("raising operator") {
    CHECK_FALSE(bz_e(BZDatum(Rank(2), Flavor::W0), 1).has_value());
    CHECK_THROWS_AS(bz_e(BZDatum(Rank(2), Flavor::E), 1), Error);
    const PsiInverse inverse(Rank(3));
    for_each_by_height(Rank(3), 3, [&](const LusztigDatum& a) {
        const BZDatum M = star(psi(a));
        for (int i = 1; i <= 3; ++i) {
            const auto back = bz_e(am_f(M, i), i, inverse);
            REQUIRE(back);
            CHECK(*back == M);
            const auto up = bz_e(M, i, inverse);
            CHECK(up.has_value() == (bz_epsilon(M, i) > 0));
        }
    });
    CHECK(inverse.find(psi(LusztigDatum(Rank(3), {0, 1, 0, 0, 0, 2}))) == LusztigDatum(Rank(3), {0, 1, 0, 0, 0, 2}));
    BZDatum junk(Rank(3), Flavor::E);
    junk.set(maya(3, {2}), -7);
    CHECK_FALSE(inverse.find(junk).has_value());
}

TEST_CASE("MV polytope vertices") {
    const MVPolytope zero = mv_vertices(BZDatum(Rank(2), Flavor::W0));
    CHECK(zero.vertices.size() == 6);
    for (const MVVertex& v : zero.vertices) CHECK(v.mu == std::vector<int>{0, 0, 0});
    CHECK(zero.halfspaces.size() == 6);

    for (int n = 1; n <= 3; ++n)
        for_each_by_height(Rank(n), 3, [n](const LusztigDatum& a) {
            const BZDatum M = star(psi(a));
            const MVPolytope P = mv_vertices(M);
            for (const MVVertex& v : P.vertices) {
                int total = 0;
                for (int x : v.mu) total += x;
                CHECK(total == 0);
                if (v.w == Permutation::longest(Rank(n))) CHECK(v.mu == std::vector<int>(static_cast<std::size_t>(n + 1), 0));
                for (int i = 1; i <= n; ++i) {
                    std::vector<int> members;
                    for (int k = 1; k <= i; ++k) members.push_back(v.w(k));
                    const MayaDiagram K(Rank(n), members);
                    CHECK(pair_with(v.mu, K) == M.at(K));
                }
                for (const auto& [K, m] : P.halfspaces) CHECK(pair_with(v.mu, K) >= m);
            }
        });

    CHECK_THROWS_AS(mv_vertices(BZDatum(Rank(6), Flavor::W0)), ResourceLimit);
    CHECK_THROWS_AS(mv_vertices(BZDatum(Rank(2), Flavor::E)), Error);
}
