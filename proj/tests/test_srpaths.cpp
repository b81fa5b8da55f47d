#include <doctest.h>

#include "lagtp/srpaths.hpp"

using namespace lagtp;

namespace {

// Depth-first walk over up steps (+1) and falls (-m); a fall leaving height h weighs alpha_h.
Poly dfs_paths(const SRCoeffs& c, int len, int h, int target) {
    if (h < 0 || h > target + len * c.m) return Poly();
    if (len == 0) return h == target ? Poly(1L) : Poly();
    Poly up = dfs_paths(c, len - 1, h + 1, target);
    Poly fall = h >= c.m ? c.at(h) * dfs_paths(c, len - 1, h - c.m, target) : Poly();
    return up + fall;
}

Poly paths_oracle(const SRCoeffs& c, int j, int n, int k) {
    return dfs_paths(c, (c.m + 1) * n + j, 0, (c.m + 1) * k + j);
}

SRCoeffs ones(int m) { return SRCoeffs::from_list(m, std::vector<Poly>(60, Poly(1L))); }

}  // namespace

TEST_CASE("small path polynomials") {
    SRCoeffs c = SRCoeffs::symbolic(1);
    CHECK(sr_var_name(1) == "al01");
    CHECK(sr_var_name(12) == "al12");
    CHECK(sr_poly(c, 0, 1, 0) == px("al01"));
    CHECK(sr_poly(c, 0, 2, 0) == px("al01*(al01+al02)"));
    CHECK(sr_poly(c, 0, 3, 3) == Poly(1L));
    CHECK(sr_poly(c, 0, 2, 3).is_zero());
    SRCoeffs c2 = SRCoeffs::symbolic(2);
    CHECK(sr_poly(c2, 0, 1, 0) == px("al02"));
    CHECK(c2.at(1).is_zero());
}

TEST_CASE("recurrence and enumerators agree with an independent walk") {
    for (int m = 1; m <= 3; ++m) {
        SRCoeffs c = SRCoeffs::symbolic(m);
        for (int j = 0; j <= m + 1; ++j)
            for (int n = 0; (m + 1) * n + j <= 14; ++n)
                for (int k = 0; k <= n; ++k) {
                    Poly want = paths_oracle(c, j, n, k);
                    CHECK(sr_poly(c, j, n, k) == want);
                    CHECK(sr_path_oracle(c, j, n, k) == want);
                }
    }
}

TEST_CASE("Fuss-Catalan numbers at unit weights") {
    // (m+1)-ary tree counts binom((m+1)n, n) / (m n + 1)
    for (int m = 1; m <= 3; ++m)
        for (int n = 0; n <= 6; ++n) {
            mpz_class want = binomial((m + 1) * n, n) / (m * n + 1);
            CHECK(sr_poly(ones(m), 0, n, 0) == Poly(want));
        }
}

TEST_CASE("production matrices") {
    for (int m = 1; m <= 3; ++m) {
        SRCoeffs c = SRCoeffs::symbolic(m);
        for (int j = 0; j <= m; ++j) {
            Mat s = sr_matrix(c, j, 6);
            CHECK(output_matrix(prodmat_smj(c, j), 6) == s);
            CHECK(production_of(s) == prodmat_smj(c, j).truncate(5));
        }
    }
    SRCoeffs c2 = SRCoeffs::symbolic(2);
    for (int j = 0; j <= 2; ++j) CHECK(prodmat_m2_explicit(c2, j).truncate(7) == prodmat_smj(c2, j).truncate(7));
    // m = 1, j = 0 is the tridiagonal Stieltjes-Jacobi matrix
    Mat p = prodmat_smj(SRCoeffs::symbolic(1), 0).truncate(3);
    CHECK(p(0, 0) == px("al01"));
    CHECK(p(1, 1) == px("al02+al03"));
    CHECK(p(1, 0) == px("al02*al01"));
    CHECK(p(2, 0).is_zero());
}

TEST_CASE("coefficient lists and shifts") {
    SRCoeffs c = SRCoeffs::from_list(1, {Poly(9L), pv("a"), pv("b")});
    CHECK(c.at(0).is_zero());
    CHECK(c.at(1) == pv("a"));
    CHECK(c.at(3).is_zero());
    SRCoeffs s = c.shifted(1);
    CHECK(s.at(1).is_zero());
    CHECK(s.at(2) == pv("a"));
    CHECK(s.at(3) == pv("b"));
    // shifting the alphas turns type j into type j+1
    SRCoeffs g = SRCoeffs::symbolic(2);
    CHECK(prodmat_smj(g, 0).truncate(5) == prodmat_smj(g.shifted(1), 1).truncate(5));
}

TEST_CASE("fractions") {
    Frac f(px("x^2-1"), px("x-1"));
    CHECK(f.equals(px("x+1")));
    CHECK(f.to_poly() == px("x+1"));
    Frac g(Poly(1L), pv("x"));
    CHECK_THROWS_AS(g.to_poly(), std::domain_error);
    CHECK_FALSE((g + g).equals(Poly()));
    CHECK((g * Frac(pv("x"))).to_poly() == Poly(1L));
    CHECK(((g + Frac(Poly(1L), pv("y"))) * Frac(px("x*y"))).to_poly() == px("x+y"));
    CHECK(Frac().is_zero());
    SRCoeffs r;
    r.m = 1;
    r.num = [](int) { return Poly(1L); };
    r.den = [](int) { return Poly(2L); };
    CHECK_FALSE(r.polynomial());
    CHECK_THROWS(r.at(1));
}

TEST_CASE("continued-fraction series") {
    for (int m = 1; m <= 2; ++m) {
        SRCoeffs c = SRCoeffs::symbolic(m);
        for (int j = 0; j <= m; ++j) {
            Series t = sfrac_tail_series(c, j, 5), a = sfrac_alternate_series(c, j, 5);
            for (int n = 0; n <= 5; ++n) {
                CHECK(to_z(t[n]) == paths_oracle(c, j, n, 0));
                CHECK(to_z(a[n]) == paths_oracle(c, j, n, 0));
            }
        }
    }
}

TEST_CASE("kappa families") {
    for (const char* id : {"j0am1", "j1am1", "j1a0", "j2am1", "j2a0", "j2a1"}) {
        KappaFamily f = KappaFamily::parse(id);
        CHECK(f.id() == id);
        CHECK(verify_kappa_cell(f, 5));
    }
    CHECK_THROWS_AS(KappaFamily::parse("j0a0"), std::invalid_argument);
    CHECK_THROWS_AS(KappaFamily::parse("j3am1"), std::invalid_argument);
    CHECK_THROWS_AS(KappaFamily::parse("nonsense"), std::invalid_argument);
    SUBCASE("published alpha sequences at the kappa endpoints") {
        KappaFamily f = KappaFamily::parse("j0am1");
        const std::vector<std::vector<const char*>> want = {{"x", "1", "1", "x", "2", "2", "x", "3", "3"},
                                                            {"x", "0", "2", "x", "1", "3", "x", "2", "4"}};
        for (int end = 0; end < 2; ++end) {
            f.kappa_num = Poly(end == 0 ? 1L : 0L);
            SRCoeffs c = kappa_family_coeffs(f, pv("x"));
            for (int i = 0; i < 9; ++i) CHECK(c.at(i + 2) == px(want[end][i]));
        }
    }
    SUBCASE("rational kappa in the j=2, alpha=1 cell") {
        KappaFamily f = KappaFamily::parse("j2a1");
        f.kappa_num = Poly(1L);
        f.kappa_den = Poly(2L);
        CHECK(verify_kappa_cell(f, 6));
    }
    SUBCASE("numeric kappa") {
        for (const char* id : {"j1am1", "j2a0"}) {
            KappaFamily f = KappaFamily::parse(id);
            if (!f.uses_kappa()) continue;
            f.kappa_num = Poly(1L);
            f.kappa_den = Poly(2L);
            CHECK(verify_kappa_cell(f, 5));
            f.kappa_num = Poly(3L);
            f.kappa_den = Poly(1L);
            CHECK(verify_kappa_cell(f, 5));
        }
    }
}

TEST_CASE("Hankel matrices of path sequences") {
    std::vector<Poly> cat;
    for (int n = 0; n < 7; ++n) cat.push_back(sr_poly(ones(1), 0, n, 0));
    CHECK(cat[4] == Poly(14L));
    for (std::size_t s = 1; s <= 4; ++s) CHECK(det_exact(hankel_matrix(cat, s)) == Poly(1L));
    CHECK_THROWS(hankel_matrix(cat, 5));

    SRCoeffs c = SRCoeffs::symbolic(2);
    for (int j = 0; j <= 2; ++j) {
        std::vector<Poly> seq;
        for (int i = 0; i < 7; ++i) seq.push_back(sr_poly(c, j, i, 0));
        CHECK(tp_check_symbolic(hankel_matrix(seq, 3), 3).ok);
    }
    // type m+1 leaves the admissible range and a 2x2 minor goes negative
    std::vector<Poly> bad;
    for (int i = 0; i < 5; ++i) bad.push_back(sr_poly(c, 3, i, 0));
    TpReport r = tp_check_symbolic(hankel_matrix(bad, 3), 2);
    CHECK_FALSE(r.ok);
}
