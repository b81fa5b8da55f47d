#include <doctest.h>

#include "lagtp/poly.hpp"
#include "lagtp/rng.hpp"

using namespace lagtp;

namespace {

Poly random_poly(Xorshift64Star& rng, const std::vector<Poly>& vars, int terms) {
    Poly p;
    for (int i = 0; i < terms; ++i) {
        Poly m(rng.range(-4, 4));
        for (const Poly& v : vars) m = m * v.pow(static_cast<unsigned>(rng.below(3)));
        p += m;
    }
    return p;
}

}  // namespace

TEST_CASE("graded order, ascending display") {
    CHECK(px("x^3+3*a*x^2+1+x*a").str() == "1+a*x+x^3+3*a*x^2");
    CHECK(px("(1+a)*(2+a)*(3+a)+3*(2+a)*(3+a)*x+3*(3+a)*x^2+x^3").str() ==
          "6+18*x+11*a+9*x^2+15*a*x+6*a^2+x^3+3*a*x^2+3*a^2*x+a^3");
    CHECK(px("0").str() == "0");
    CHECK(px("-x+2").str() == "2-x");
    CHECK(QPoly::parse("3+1/2*x").str() == "3+1/2*x");
}

TEST_CASE("parse and print round trip") {
    for (const char* s : {"1", "x", "-3*y_p^2*y_v", "1+4*x+2*x^2", "2*lambda-1", "al02*al03+al02^2"})
        CHECK(px(px(s).str()) == px(s));
    CHECK_THROWS(px("1+"));
    CHECK_THROWS(px("x^"));
}

TEST_CASE("ring axioms on random polynomials") {
    Xorshift64Star rng(7);
    std::vector<Poly> vars = {pv("x"), pv("y"), pv("a")};
    for (int i = 0; i < 40; ++i) {
        Poly a = random_poly(rng, vars, 6), b = random_poly(rng, vars, 6), c = random_poly(rng, vars, 6);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a - a == Poly());
        if (!b.is_zero()) CHECK((a * b).divide_exact(b) == a);
    }
}

TEST_CASE("renaming substitutions compose") {
    Xorshift64Star rng(11);
    Var x("x"), y("y"), z("z"), w("w");
    for (int i = 0; i < 20; ++i) {
        Poly p = random_poly(rng, {pv("x"), pv("y"), pv("z")}, 6);
        std::map<Var, Poly> sigma = {{x, pv("y")}, {y, pv("z")}, {z, pv("x")}};
        std::map<Var, Poly> tau = {{x, pv("w")}, {y, pv("x")}};
        // tau after sigma: x -> tau(y) = x, y -> tau(z) = z, z -> tau(x) = w
        std::map<Var, Poly> both = {{x, pv("x")}, {y, pv("z")}, {z, pv("w")}};
        CHECK(poly_substitute(poly_substitute(p, sigma), tau) == poly_substitute(p, both));
    }
}

TEST_CASE("coefficientwise order is closed under + and *") {
    Xorshift64Star rng(3);
    std::vector<Poly> vars = {pv("x"), pv("y")};
    for (int i = 0; i < 40; ++i) {
        Poly a = random_poly(rng, vars, 5), b = random_poly(rng, vars, 5);
        if (a.nonneg() && b.nonneg()) {
            CHECK((a + b).nonneg());
            CHECK((a * b).nonneg());
        }
    }
    CHECK(px("1+x*y").nonneg());
    CHECK_FALSE(px("x-y").nonneg());
}

TEST_CASE("degrees and coefficient extraction") {
    Poly p = px("3+2*x*y^2+x^3");
    CHECK(p.degree() == 3);
    CHECK(p.degree_in(Var("y")) == 2);
    CHECK(Poly().degree() == -1);
    CHECK(p.coeff_in(Var("y"), 2) == px("2*x"));
    CHECK(p.coeff_in(Var("y"), 0) == px("3+x^3"));
    CHECK(p.evaluate({{Var("x"), 2}, {Var("y"), 1}}) == 3 + 4 + 8);
}

TEST_CASE("integer helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(3, -1) == 0);
    CHECK(rising(pv("a"), 3) == px("a*(a+1)*(a+2)"));
    CHECK(falling(pv("a"), 3) == px("a*(a-1)*(a-2)"));
    CHECK(falling(Poly(2L), 3) == Poly());
    CHECK(rising(pv("a"), 0) == Poly(1L));
}

TEST_CASE("rational conversion") {
    QPoly q = QPoly::parse("1/2*x+1/2*x^2");
    CHECK_FALSE(is_integral(q));
    CHECK(is_integral(q.scaled(mpq_class(2))));
    CHECK(to_z(q.scaled(mpq_class(2))) == px("x+x^2"));
    CHECK_THROWS(to_z(q));
    CHECK(to_q(px("x+1")) == QPoly::parse("x+1"));
}

TEST_CASE("json round trip") {
    Poly p = px("1-2*x*y_p+x^3*a");
    CHECK(Poly::from_json(p.to_json()) == p);
    CHECK(Poly::from_json(nlohmann::json("1+x")) == px("1+x"));
    CHECK(Poly::from_json(nlohmann::json(5)) == Poly(5L));
    CHECK_THROWS(Poly::from_json(nlohmann::json::array()));
}
