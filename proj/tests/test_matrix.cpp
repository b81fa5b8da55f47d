#include <doctest.h>

#include "lagtp/matrix.hpp"
#include "lagtp/rng.hpp"

using namespace lagtp;

namespace {

Poly sym(const std::string& base, std::size_t i, std::size_t j) {
    return pv(base + std::to_string(i) + "_" + std::to_string(j));
}

// Lower-Hessenberg with symbolic entries p{i}_{j} and, optionally, unit superdiagonal.
Mat symbolic_hessenberg(std::size_t n, bool unit, std::size_t band = 100) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i + 1) m(i, j) = unit ? Poly(1L) : sym("p", i, j);
            if (j <= i && i - j <= band) m(i, j) = sym("p", i, j);
        }
    return m;
}

HessMatrix as_hess(const Mat& m) {
    return HessMatrix([m](std::size_t i, std::size_t j) {
        return i < m.rows() && j < m.cols() ? m(i, j) : Poly();
    }, std::nullopt);
}

Mat power(const Mat& m, unsigned e) {
    Mat r = Mat::identity(m.rows());
    for (unsigned i = 0; i < e; ++i) r = r * m;
    return r;
}

Mat random_tridiagonal(Xorshift64Star& rng, std::size_t n, long hi) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if ((i > j ? i - j : j - i) <= 1) m(i, j) = Poly(rng.range(0, hi));
    return m;
}

}  // namespace

TEST_CASE("output matrix rows agree with powers of P") {
    Mat p = symbolic_hessenberg(6, false);
    Mat out = output_matrix(p, 5);
    for (unsigned n = 0; n < 5; ++n) {
        Mat pn = power(p, n);
        for (std::size_t k = 0; k < 5; ++k) CHECK(out(n, k) == pn(0, k));
    }
}

TEST_CASE("truncation exactness: rows of P beyond n do not matter") {
    Mat p = symbolic_hessenberg(8, true);
    Mat q = p;
    for (std::size_t j = 0; j < 8; ++j) q(5, j) += Poly(7L);
    // an n-row output matrix only reads rows 0..n-2 of P
    CHECK(output_matrix(p, 6) == output_matrix(q, 6));
    CHECK(output_matrix(p, 7) != output_matrix(q, 7));
}

TEST_CASE("production_of inverts output_matrix") {
    for (std::size_t n = 2; n <= 8; ++n) {
        Mat p = symbolic_hessenberg(n + 1, true, 2);
        CHECK(production_of(output_matrix(p, n)) == p.block(n - 1));
    }
    CHECK_THROWS(production_of(Mat::from_rows({{px("2"), Poly()}, {Poly(1L), Poly(1L)}})));
}

TEST_CASE("Hankel matrix of the zeroth column factors through O(P) and O(P^T)") {
    const std::size_t n = 5;
    Mat p = symbolic_hessenberg(2 * n, true, 1);
    Mat out = output_matrix(p, 2 * n - 1);
    Mat pt = p.transpose();
    Mat lhs(n, n), rhs(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) lhs(i, j) = out(i + j, 0);
    for (std::size_t i = 0; i < n; ++i) {
        Mat pi = power(p, static_cast<unsigned>(i));
        for (std::size_t j = 0; j < n; ++j) {
            Mat ptj = power(pt, static_cast<unsigned>(j));
            Poly s;
            for (std::size_t k = 0; k < 2 * n; ++k) s += pi(0, k) * ptj(0, k);
            rhs(i, j) = s;
        }
    }
    CHECK(lhs == rhs);
}

TEST_CASE("binomial shift: O(aI + bP) = B_{a,b} O(P)") {
    const std::size_t n = 5;
    Mat p = symbolic_hessenberg(n + 1, false, 2);
    Poly a = pv("a"), b = pv("b");
    Mat shifted = Mat::identity(n + 1).scaled(a) + p.scaled(b);
    CHECK(output_matrix(shifted, n) == binomial_matrix(a, b, n) * output_matrix(p, n));
}

TEST_CASE("binomial matrix basics") {
    const std::size_t n = 5;
    Poly x = pv("x");
    Mat bx = binomial_matrix(x, n);
    CHECK(det_exact(bx) == Poly(1L));
    CHECK(binomial_matrix(-x, n) * bx == Mat::identity(n));
    CHECK(inverse_unit_lower(bx) == binomial_matrix(-x, n));
    Mat want(n - 1, n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        want(i, i) = x;
        if (i + 2 < n) want(i, i + 1) = Poly(1L);
    }
    CHECK(production_of(bx) == want);
    CHECK(tp_check_symbolic(bx, 3).ok);
    CHECK(bx(4, 2) == px("6*x^2"));
}

TEST_CASE("determinants agree") {
    Xorshift64Star rng(5);
    for (std::size_t n = 1; n <= 5; ++n) {
        Mat m(n, n);
        std::vector<std::vector<mpz_class>> ints(n, std::vector<mpz_class>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) = sym("m", i, j);
                ints[i][j] = rng.range(-5, 5);
            }
        CHECK(det_bareiss(m) == det_laplace(m));
        Mat im(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) im(i, j) = Poly(ints[i][j]);
        CHECK(Poly(det_integer(ints)) == det_laplace(im));
    }
    // a zero pivot forces a row swap in Bareiss
    Mat z = Mat::from_rows({{Poly(), pv("x"), Poly(1L)}, {pv("y"), Poly(), Poly(2L)}, {Poly(1L), Poly(1L), Poly()}});
    CHECK(det_bareiss(z) == det_laplace(z));
}

TEST_CASE("colex subsets") {
    auto s = colex_subsets(4, 2);
    std::vector<std::vector<std::size_t>> want = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}};
    CHECK(s == want);
    CHECK(colex_subsets(5, 0).size() == 1);
    CHECK(colex_subsets(5, 3).size() == 10);
}

TEST_CASE("TP check finds the classic failing minor") {
    Mat m = Mat::from_rows({{Poly(1L), Poly(2L)}, {Poly(3L), Poly(1L)}});
    TpReport r = tp_check_symbolic(m, 2);
    CHECK_FALSE(r.ok);
    CHECK(r.minor == Poly(-5L));
    CHECK(r.rows == std::vector<std::size_t>{0, 1});
    CHECK(r.to_json()["witness"]["minor_text"] == "-5");
    CHECK(tp_check_symbolic(m, 1).ok);
    TpReport s = tp_check_sampled(m, 2, 1, 3);
    CHECK_FALSE(s.ok);
}

TEST_CASE("sampled TP check records the assignment") {
    Mat m = Mat::from_rows({{pv("x"), Poly(1L)}, {Poly(1L), pv("y")}});  // xy - 1
    TpReport r = tp_check_sampled(m, 2, 9, 200);
    CHECK_FALSE(r.ok);
    long x = r.assignment.at(Var("x")), y = r.assignment.at(Var("y"));
    CHECK(x * y - 1 < 0);
    TpReport a = tp_check_sampled(m, 2, 9, 50), b = tp_check_sampled(m, 2, 9, 50);
    CHECK(a.to_json() == b.to_json());
}

TEST_CASE("tridiagonal criterion agrees with brute force") {
    Xorshift64Star rng(21);
    int agreed = 0, positives = 0;
    for (int t = 0; t < 60; ++t) {
        std::size_t n = 2 + rng.below(6);
        Mat m = random_tridiagonal(rng, n, 3);
        bool crit = tridiagonal_tp_criterion(m);
        bool brute = tp_check_symbolic(m, static_cast<int>(n)).ok;
        agreed += crit == brute;
        positives += brute;
    }
    CHECK(agreed == 60);
    CHECK(positives > 0);
    Mat notri = Mat::from_rows({{Poly(1L), Poly(), Poly(1L)}, {Poly(), Poly(1L), Poly()}, {Poly(), Poly(), Poly(1L)}});
    CHECK_THROWS(tridiagonal_tp_criterion(notri));
}

TEST_CASE("tridiagonal comparison: TP plus a nonnegative diagonal stays TP") {
    Xorshift64Star rng(8);
    int tried = 0;
    while (tried < 15) {
        std::size_t n = 2 + rng.below(5);
        Mat a = random_tridiagonal(rng, n, 4);
        if (!tridiagonal_tp_criterion(a)) continue;
        ++tried;
        Mat d(n, n);
        for (std::size_t i = 0; i < n; ++i) d(i, i) = Poly(rng.range(0, 3));
        CHECK(tp_check_symbolic(a + d, static_cast<int>(n)).ok);
    }
}

TEST_CASE("exponential Riordan arrays") {
    const int N = 6;
    Series t = Series::t(N);
    Series f1 = series_exp(t.scaled(QPoly::parse("u")));
    Series g1 = t + t.pow(2);
    Series f2 = Series::constant(QPoly(1L), N) + t.scaled(QPoly::parse("v"));
    Series g2 = series_exp(t) - Series::constant(QPoly(1L), N);
    const std::size_t n = 6;

    SUBCASE("product rule") {
        Mat lhs = riordan_matrix(f1, g1, n) * riordan_matrix(f2, g2, n);
        Mat rhs = riordan_matrix(series_compose(f2, g1) * f1, series_compose(g2, g1), n);
        CHECK(lhs == rhs);
    }
    SUBCASE("fundamental theorem: R[F,G] b has EGF F B(G)") {
        Series bser = series_exp(t.scaled(QPoly::parse("w"))) + t.pow(3);
        Mat r = riordan_matrix(f1, g1, n);
        Series image = f1 * series_compose(bser, g1);
        for (std::size_t i = 0; i < n; ++i) {
            Poly s;
            for (std::size_t k = 0; k <= i; ++k) s += r(i, k) * to_z(bser.egf(static_cast<int>(k)));
            CHECK(s == to_z(image.egf(static_cast<int>(i))));
        }
    }
    SUBCASE("Stirling subset numbers as R[1, e^t - 1]") {
        Mat s = riordan_matrix(Series::constant(QPoly(1L), N), g2, n);
        CHECK(s(4, 2) == Poly(7L));
        CHECK(s(5, 3) == Poly(25L));
    }
    CHECK_THROWS(riordan_matrix(f1, f2, n));
}

TEST_CASE("production matrix of a Riordan array is an EAZ matrix") {
    // Start from integer A and Z, recover F and G, and rebuild A and Z from them.
    std::vector<Poly> a = {Poly(1L), px("2+c"), Poly(3L), Poly(1L)}, z = {px("c"), Poly(2L), Poly(5L)};
    const std::size_t n = 7;
    Mat l = output_matrix(eaz_matrix(a, z), n);
    const int N = static_cast<int>(n) - 1;
    std::vector<QPoly> fc(n), c1(n);
    for (std::size_t i = 0; i < n; ++i) {
        mpq_class inv(1, factorial(static_cast<unsigned>(i)));
        fc[i] = to_q(l(i, 0)).scaled(inv);
        c1[i] = to_q(l(i, 1)).scaled(inv);
    }
    Series f(N, fc), fg(N, c1);
    Series g = fg * series_reciprocal(f);
    Series gbar = series_revert(g);
    Series aser = series_compose(g.derivative(), gbar.truncated(N - 1));
    Series logd = f.derivative() * series_reciprocal(f.truncated(N - 1));
    Series zser = series_compose(logd, gbar.truncated(N - 1));
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(to_z(aser[static_cast<int>(i)]) == (i < a.size() ? a[i] : Poly()));
        CHECK(to_z(zser[static_cast<int>(i)]) == (i < z.size() ? z[i] : Poly()));
    }
    CHECK(production_of(riordan_matrix(f, g, n)) == eaz_matrix(a, z).truncate(n - 1));
}

TEST_CASE("EAZ conjugation by the binomial matrix") {
    std::vector<Poly> a, z;
    for (int i = 0; i < 6; ++i) {
        a.push_back(pv("a_" + std::to_string(i)));
        z.push_back(pv("z_" + std::to_string(i)));
    }
    CHECK(bx_conjugate_eaz_identity_check(a, z, Var("x"), 6));
    HessMatrix e = eaz_matrix(a, z);
    CHECK(e.entry(0, 1) == a[0]);
    CHECK(e.entry(2, 0) == px("2*z_2"));
    CHECK(e.entry(2, 1) == px("2*(z_1+a_2)"));
}

TEST_CASE("lazy Hessenberg matrices") {
    HessMatrix d = delta_matrix();
    Mat dm = d.truncate(3, 4);
    CHECK(dm(0, 1) == Poly(1L));
    CHECK(dm(2, 3) == Poly(1L));
    CHECK(dm(1, 1).is_zero());
    HessMatrix s = scalar_matrix(pv("c"));
    CHECK(s.entry(4, 4) == pv("c"));
    CHECK(s.entry(4, 3).is_zero());
    Mat p = symbolic_hessenberg(5, true);
    CHECK(as_hess(p).truncate(5) == p);
    CHECK(conjugate_by_binomial(as_hess(Mat::identity(6)), Var("x"), 4) == Mat::identity(4));
}

TEST_CASE("matrix json round trip") {
    Mat m = Mat::from_rows({{px("1+x"), Poly()}, {px("-2*y"), Poly(3L)}});
    CHECK(Mat::from_json(m.to_json()) == m);
    CHECK(Mat::from_json(nlohmann::json::parse("[[1,2],[\"x\",0]]"))(1, 0) == pv("x"));
    CHECK_THROWS(Mat::from_json(nlohmann::json::parse("[[1,2],[3]]")));
    CHECK_THROWS(Mat::from_json(nlohmann::json::parse("{\"rows\":3,\"entries\":[[1]]}")));
}
