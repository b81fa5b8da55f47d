#include <doctest.h>

#include <cstdlib>
#include <set>

#include "lagtp/digraphs.hpp"
#include "lagtp/laguerre.hpp"

using namespace lagtp;

namespace {

// Every map {0..n-1} -> {-1..n-1}, kept when injective on its image.
std::vector<std::vector<int>> naive_digraphs(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> s(n, -1);
    while (true) {
        LaguerreDigraph g{n, s};
        if (g.valid()) out.push_back(s);
        int i = 0;
        while (i < n && s[i] == n - 1) s[i++] = -1;
        if (i == n) break;
        ++s[i];
    }
    return out;
}

LaguerreDigraph make(std::vector<int> succ) { return {static_cast<int>(succ.size()), std::move(succ)}; }

}  // namespace

TEST_CASE("digraph counts") {
    std::vector<std::uint64_t> want = {1, 2, 7, 34, 209, 1546, 13327};
    for (int n = 0; n < 7; ++n) {
        CHECK(count_digraphs(n) == want[n]);
        std::uint64_t seen = 0;
        enumerate_digraphs(n, [&](const LaguerreDigraph&) { ++seen; });
        CHECK(seen == want[n]);
    }
}

TEST_CASE("enumeration is valid, distinct and complete") {
    for (int n = 0; n <= 5; ++n) {
        std::set<std::vector<int>> got;
        enumerate_digraphs(n, [&](const LaguerreDigraph& g) {
            CHECK(g.valid());
            got.insert(g.succ);
        });
        auto naive = naive_digraphs(n);
        CHECK(got.size() == naive.size());
        CHECK(got == std::set<std::vector<int>>(naive.begin(), naive.end()));
    }
}

TEST_CASE("classification examples") {
    SUBCASE("3-cycle 1 -> 2 -> 3 -> 1") {
        DigraphStats s = classify(make({1, 2, 0}));
        CHECK(s.cyc == 1);
        CHECK(s.pa == 0);
        CHECK(s.e_plus == 2);
        CHECK(s.e_minus == 1);
        CHECK(s.vcyc == 1);
        CHECK(s.dacyc == 1);
        CHECK(s.pcyc == 1);
    }
    SUBCASE("path 2 -> 1 and isolated 3") {
        DigraphStats s = classify(make({-1, 0, -1}));
        CHECK(s.pa == 2);
        CHECK(s.cyc == 0);
        CHECK(s.ppa == 2);
        CHECK(s.ddpa == 1);
        CHECK(s.e_minus == 1);
    }
    SUBCASE("loop") {
        DigraphStats s = classify(make({0}));
        CHECK(s.fp == 1);
        CHECK(s.cyc == 1);
        CHECK(s.e_zero == 1);
    }
    CHECK_FALSE(make({1, 1}).valid());
    CHECK_FALSE(make({3, -1, -1}).valid());
    CHECK(make({1, 0}).pred() == std::vector<int>{1, 0});
}

TEST_CASE("statistic invariants on every digraph") {
    for (int n = 0; n <= 6; ++n)
        enumerate_digraphs(n, [&](const LaguerreDigraph& g) {
            DigraphStats s = classify(g);
            CHECK(s.e == n - s.pa);
            CHECK(s.e == s.e_minus + s.e_zero + s.e_plus);
            CHECK(s.p + s.v + s.da + s.dd + s.fp == n);
            CHECK(s.pcyc == s.vcyc);
            CHECK(s.ppa == s.vpa + s.pa);
            CHECK(s.p == s.pcyc + s.ppa);
        });
}

TEST_CASE("oracle with unit weights gives the univariate matrix") {
    OracleWeights w = OracleWeights::symbolic();
    w.edges = EdgeWeights::uniform(Poly(1L));
    CHECK(oracle_matrix(7, OracleMode::first_mv, w) == coeff_matrix_uni(LaguerreParams::symbolic(), 7));
    OracleWeights sym = OracleWeights::symbolic();
    Mat m = oracle_matrix(5, OracleMode::second_mv, sym);
    for (int n = 0; n < 5; ++n)
        for (int k = 0; k <= n; ++k) CHECK(oracle_entry(n, k, sym, OracleMode::second_mv) == m(n, k));
    CHECK(oracle_entry(2, 3, sym, OracleMode::first_mv).is_zero());
    CHECK_THROWS_AS(oracle_entry(-1, 0, sym, OracleMode::first_mv), std::invalid_argument);
}

TEST_CASE("permutation oracles") {
    Poly lam = pv("lambda");
    VertexWeights w = VertexWeights::symbolic_split();
    CHECK(permutation_oracle(1, PermKind::cyclic, lam, w) == px("lambda*y_fp"));
    CHECK(permutation_oracle(2, PermKind::cyclic, lam, w) == px("lambda^2*y_fp^2+lambda*y_p*y_v"));
    CHECK(permutation_oracle(2, PermKind::linear00, lam, w) == px("z_p*z_da+z_p*z_dd"));
    // unit weights count permutations
    VertexWeights one = VertexWeights::of(Poly(1L), Poly(1L), Poly(1L), Poly(1L), Poly(1L));
    CHECK(permutation_oracle(5, PermKind::linear00, Poly(1L), one) == Poly(120L));
    CHECK(permutation_oracle(5, PermKind::cyclic, Poly(2L), one) == Poly(720L));  // rising(2, 5)
}

TEST_CASE("enumeration limit") {
    setenv("LAGTP_LIMIT", "3", 1);
    CHECK(oracle_limit() == 3);
    CHECK_THROWS_AS(count_digraphs(4), std::length_error);
    CHECK_THROWS_AS(oracle_matrix(5, OracleMode::first_mv, OracleWeights::symbolic()), std::length_error);
    setenv("LAGTP_LIMIT", "junk", 1);
    CHECK(oracle_limit() == 9);
    unsetenv("LAGTP_LIMIT");
    CHECK(oracle_limit() == 9);
    CHECK_THROWS_AS(count_digraphs(10), std::length_error);
}
