#pragma once

#include <vector>

#include "lagtp/poly.hpp"

namespace lagtp {

// Power series in t known modulo t^(order+1).
class Series {
public:
    Series() = default;
    explicit Series(int order);
    Series(int order, std::vector<QPoly> coefs);

    static Series constant(const QPoly& c, int order);
    static Series t(int order);  // the series t
    // Series from a polynomial given by its coefficient list in t.
    static Series from_coefs(const std::vector<QPoly>& coefs, int order);

    int order() const { return order_; }
    const QPoly& operator[](int n) const { return c_[n]; }
    QPoly& operator[](int n) { return c_[n]; }
    const std::vector<QPoly>& coefs() const { return c_; }
    // n! [t^n]
    QPoly egf(int n) const;

    Series truncated(int order) const;
    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const;
    Series scaled(const QPoly& c) const;
    Series pow(unsigned e) const;

    Series derivative() const;  // order drops by one
    Series integral() const;    // zero constant term, order rises by one

    bool operator==(const Series& o) const;

private:
    int order_ = 0;
    std::vector<QPoly> c_;
};

Series series_reciprocal(const Series& s);
// F(G(t)); requires G(0) = 0.
Series series_compose(const Series& f, const Series& g);
// Compositional inverse; requires G(0) = 0 and a nonzero rational [t]G.
Series series_revert(const Series& g);
Series series_log(const Series& f);  // F(0) = 1
Series series_exp(const Series& g);  // G(0) = 0
// Polynomial in s, given by coefficients, evaluated at a series.
Series series_eval_poly(const std::vector<QPoly>& z, const Series& g);

// Unique G with G(0) = 0 and G' = p + q G + r G^2.
Series solve_riccati(const Poly& p, const Poly& q, const Poly& r, int order);
// Unique F with F(0) = 1 and F'/F = lam * Z(G), Z given by its coefficients in s.
Series solve_logderiv(const std::vector<Poly>& z, const Series& g, const Poly& lam, int order);
// exp(lam * log F1)
Series series_pow_sym(const Series& f1, const Poly& lam, int order);

}  // namespace lagtp
