#include <doctest.h>

#include "lagtp/laguerre.hpp"
#include "lagtp/quadtp.hpp"

using namespace lagtp;

namespace {

// Lower bidiagonal: diag s(i), subdiagonal t(i) at (i, i-1).
Mat lower_bidiag(const std::function<Poly(long)>& s, const std::function<Poly(long)>& t, std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = s(static_cast<long>(i));
        if (i > 0) m(i, i - 1) = t(static_cast<long>(i));
    }
    return m;
}

// Upper bidiagonal: diag s(i), superdiagonal t(i+1) at (i, i+1).
Mat upper_bidiag(const std::function<Poly(long)>& s, const std::function<Poly(long)>& t, std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = s(static_cast<long>(i));
        if (i + 1 < n) m(i, i + 1) = t(static_cast<long>(i + 1));
    }
    return m;
}

Mat diag(const std::function<Poly(long)>& s, std::size_t n) { return lower_bidiag(s, [](long) { return Poly(); }, n); }

// Products on an (n+1) block, then cropped, so the last row sees U's superdiagonal.
Mat general_oracle(const QuadFactorParams& q, std::size_t n) {
    auto s = [&](char c) { return [&q, c](long i) { return q.at(c, i); }; };
    std::size_t b = n + 1;
    Mat l1 = lower_bidiag(s('a'), s('b'), b), u = upper_bidiag(s('d'), s('c'), b);
    Mat l2 = lower_bidiag(s('e'), s('f'), b);
    Mat p = l1 * u * l2 + l1 * diag(s('g'), b) + diag(s('h'), b) * l2;
    return p.block(n);
}

Mat variant_oracle(const QuadVariantParams& q, std::size_t n) {
    auto s = [&](char c) { return [&q, c](long i) { return q.at(c, i); }; };
    std::size_t b = n + 1;
    Mat l = lower_bidiag(s('a'), s('b'), b), id = Mat::identity(b);
    Mat l1 = id.scaled(q.alpha) + l.scaled(q.x), l2 = id.scaled(q.beta) + l.scaled(q.y);
    Mat p = l1 * l2 * upper_bidiag(s('d'), s('c'), b) + l1 * diag(s('e'), b) + l2 * diag(s('f'), b);
    return p.block(n);
}

}  // namespace

TEST_CASE("boundary conventions") {
    QuadFactorParams q = QuadFactorParams::symbolic();
    CHECK(q.at('b', 0).is_zero());
    CHECK(q.at('c', 0).is_zero());
    CHECK(q.at('f', 0).is_zero());
    CHECK(q.at('a', 0) == pv("a_0"));
    CHECK(q.at('b', 2) == pv("b_2"));
    CHECK(q.at('a', -1).is_zero());
    QuadVariantParams v = QuadVariantParams::symbolic();
    CHECK(v.at('b', 0).is_zero());
    CHECK(v.at('c', 0).is_zero());
    CHECK(v.at('f', 0) == pv("f_0"));
}

TEST_CASE("shift matrix as a degenerate factorization") {
    QuadFactorParams q;
    q.a = q.c = q.e = constant_seq(Poly(1L));
    q.b = q.d = q.f = q.g = q.h = constant_seq(Poly());
    CHECK(build_general_quad(q).truncate(6) == delta_matrix().truncate(6));
}

TEST_CASE("general closed form against the factor product") {
    QuadFactorParams q = QuadFactorParams::symbolic();
    const std::size_t n = 6;
    Mat oracle = general_oracle(q, n);
    CHECK(build_general_quad(q).truncate(n) == oracle);
    CHECK(general_quad_product(q, n) == oracle);
    CHECK(build_general_quad(q).entry(3, 1) == px("b_3*d_2*f_2"));
    CHECK(build_general_quad(q).entry(2, 3) == px("a_2*c_3*e_3"));
    CHECK(build_general_quad(q).entry(4, 1).is_zero());

    // p_n = q_n + h_n l_n with l_n = (..., f_n, e_n) the rows of L2
    Mat qm = general_quad_q(q).truncate(n), l2 = general_quad_l2(q, n);
    for (std::size_t r = 0; r < n; ++r) {
        CHECK(l2(r, r) == q.at('e', static_cast<long>(r)));
        if (r > 0) CHECK(l2(r, r - 1) == q.at('f', static_cast<long>(r)));
        for (std::size_t k = 0; k < n; ++k)
            CHECK(oracle(r, k) == qm(r, k) + q.at('h', static_cast<long>(r)) * l2(r, k));
    }
}

TEST_CASE("Laguerre specialization gives the flat production matrix") {
    VertexWeights w = VertexWeights::symbolic();
    w.y_fp = w.y_p;
    Poly x = pv("x");
    for (const LaguerreParams& lp : {LaguerreParams::lambda_form(), LaguerreParams::of(2)}) {
        QuadFactorParams q = QuadFactorParams::laguerre_flat(w, lp.lambda(), x);
        CHECK(build_general_quad(q).truncate(8) == prodmat(lp, ProdVariant::PFlat, w, x).truncate(8));
    }
    QuadFactorParams q = QuadFactorParams::laguerre_flat(w, pv("lambda"), x);
    CHECK(q.at('b', 3) == px("3*y_v"));
    CHECK(q.at('h', 2) == px("2*(y_da+y_dd-y_p-y_v)"));
}

TEST_CASE("variant closed form against the factor product") {
    QuadVariantParams q = QuadVariantParams::symbolic();
    const std::size_t n = 6;
    Mat oracle = variant_oracle(q, n);
    CHECK(build_variant_quad(q).truncate(n) == oracle);
    CHECK(variant_quad_product(q, n) == oracle);
    CHECK(variant_commutation_check(q, n));
    CHECK(build_variant_quad(q).entry(4, 2) == px("x*y*b_4*b_3*d_2"));

    QuadVariantParams q0 = q;
    q0.f = constant_seq(Poly());
    CHECK(variant_quad_q(q).truncate(n) == variant_oracle(q0, n));
}

TEST_CASE("variant collapses when x = y = 0") {
    QuadVariantParams q = QuadVariantParams::symbolic();
    q.x = q.y = Poly();
    Mat p = build_variant_quad(q).truncate(5);
    for (long k = 0; k < 5; ++k) {
        CHECK(p(k, k) == q.alpha * q.beta * q.at('d', k) + q.alpha * q.at('e', k) + q.beta * q.at('f', k));
        if (k > 0) CHECK(p(k - 1, k) == q.alpha * q.beta * q.at('c', k));
        if (k + 1 < 5) CHECK(p(k + 1, k).is_zero());
    }
}

TEST_CASE("small total-positivity checks") {
    CHECK(tp_check_symbolic(build_general_quad(QuadFactorParams::symbolic()).truncate(4), 4).ok);
    CHECK(tp_check_symbolic(build_variant_quad(QuadVariantParams::symbolic()).truncate(4), 4).ok);
    // a negative h breaks coefficientwise positivity of the diagonal
    QuadFactorParams q = QuadFactorParams::symbolic();
    q.h = constant_seq(Poly(-1L));
    CHECK_FALSE(tp_check_symbolic(build_general_quad(q).truncate(3), 1).ok);
}
