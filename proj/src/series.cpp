#include "lagtp/series.hpp"

#include <stdexcept>

namespace lagtp {

Series::Series(int order) : order_(order), c_(static_cast<std::size_t>(order + 1)) {
    if (order < 0) throw std::invalid_argument("negative series order");
}

Series::Series(int order, std::vector<QPoly> coefs) : Series(order) {
    for (std::size_t i = 0; i < coefs.size() && i < c_.size(); ++i) c_[i] = std::move(coefs[i]);
}

Series Series::constant(const QPoly& c, int order) {
    Series s(order);
    s.c_[0] = c;
    return s;
}

Series Series::t(int order) {
    Series s(order);
    if (order >= 1) s.c_[1] = QPoly(1L);
    return s;
}

Series Series::from_coefs(const std::vector<QPoly>& coefs, int order) { return Series(order, coefs); }

QPoly Series::egf(int n) const { return c_[n].scaled(mpq_class(factorial(n))); }

Series Series::truncated(int order) const {
    if (order > order_) throw std::invalid_argument("cannot extend a truncated series");
    return Series(order, std::vector<QPoly>(c_.begin(), c_.begin() + order + 1));
}

Series Series::operator+(const Series& o) const {
    Series r(std::min(order_, o.order_));
    for (int i = 0; i <= r.order_; ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

Series Series::operator-(const Series& o) const {
    Series r(std::min(order_, o.order_));
    for (int i = 0; i <= r.order_; ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

Series Series::operator*(const Series& o) const {
    Series r(std::min(order_, o.order_));
    for (int i = 0; i <= r.order_; ++i) {
        if (c_[i].is_zero()) continue;
        for (int j = 0; i + j <= r.order_; ++j)
            if (!o.c_[j].is_zero()) r.c_[i + j] += c_[i] * o.c_[j];
    }
    return r;
}

Series Series::scaled(const QPoly& c) const {
    Series r(order_);
    for (int i = 0; i <= order_; ++i) r.c_[i] = c_[i] * c;
    return r;
}

Series Series::pow(unsigned e) const {
    Series r = constant(QPoly(1L), order_), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

Series Series::derivative() const {
    if (order_ == 0) throw std::invalid_argument("derivative of an order-0 series is unknown");
    Series r(order_ - 1);
    for (int i = 1; i <= order_; ++i) r.c_[i - 1] = c_[i].scaled(mpq_class(i));
    return r;
}

Series Series::integral() const {
    Series r(order_ + 1);
    for (int i = 0; i <= order_; ++i) r.c_[i + 1] = c_[i].scaled(mpq_class(1, i + 1));
    return r;
}

bool Series::operator==(const Series& o) const { return order_ == o.order_ && c_ == o.c_; }

namespace {
mpq_class rational_constant(const QPoly& p, const char* what) {
    if (!p.is_constant() || p.is_zero()) throw std::domain_error(what);
    return p.constant_term();
}
}  // namespace

Series series_reciprocal(const Series& s) {
    mpq_class c0 = rational_constant(s[0], "series constant term is not an invertible rational");
    mpq_class inv = 1 / c0;
    Series r(s.order());
    r[0] = QPoly(inv);
    for (int n = 1; n <= s.order(); ++n) {
        QPoly acc;
        for (int k = 1; k <= n; ++k)
            if (!s[k].is_zero()) acc += s[k] * r[n - k];
        r[n] = (-acc).scaled(inv);
    }
    return r;
}

Series series_compose(const Series& f, const Series& g) {
    if (!g[0].is_zero()) throw std::domain_error("inner series must vanish at t=0");
    int n = std::min(f.order(), g.order());
    Series r = Series::constant(f[n], n);
    for (int i = n - 1; i >= 0; --i) r = r * g.truncated(n) + Series::constant(f[i], n);
    return r;
}

Series series_revert(const Series& g) {
    if (!g[0].is_zero()) throw std::domain_error("series to revert must vanish at t=0");
    int n = g.order();
    if (n < 1) return Series(n);
    mpq_class g1 = rational_constant(g[1], "reversion needs a nonzero rational linear coefficient");
    Series h(n);
    h[1] = QPoly(mpq_class(1 / g1));
    for (int k = 2; k <= n; ++k) {
        Series c = series_compose(g, h);
        h[k] = (-c[k]).scaled(mpq_class(1 / g1));
    }
    return h;
}

Series series_log(const Series& f) {
    if (f[0] != QPoly(1L)) throw std::domain_error("log needs constant term 1");
    if (f.order() == 0) return Series(0);
    return (f.derivative() * series_reciprocal(f.truncated(f.order() - 1))).integral();
}

Series series_exp(const Series& g) {
    if (!g[0].is_zero()) throw std::domain_error("exp needs zero constant term");
    int n = g.order();
    Series e(n);
    e[0] = QPoly(1L);
    for (int m = 1; m <= n; ++m) {
        QPoly acc;
        for (int k = 1; k <= m; ++k)
            if (!g[k].is_zero()) acc += g[k].scaled(mpq_class(k)) * e[m - k];
        e[m] = acc.scaled(mpq_class(1, m));
    }
    return e;
}

Series series_eval_poly(const std::vector<QPoly>& z, const Series& g) {
    Series r(g.order());
    for (std::size_t i = z.size(); i-- > 0;) r = r * g + Series::constant(z[i], g.order());
    return r;
}

Series solve_riccati(const Poly& p, const Poly& q, const Poly& r, int order) {
    QPoly pq = to_q(p), qq = to_q(q), rq = to_q(r);
    Series g(order);
    std::vector<QPoly> sq(static_cast<std::size_t>(order + 1));  // coefficients of G^2
    for (int n = 0; n < order; ++n) {
        // [t^n] G^2 uses g_1..g_{n-1}, all known.
        QPoly s;
        for (int i = 1; i < n; ++i) s += g[i] * g[n - i];
        sq[n] = s;
        QPoly rhs = (n == 0 ? pq : QPoly()) + qq * g[n] + rq * sq[n];
        g[n + 1] = rhs.scaled(mpq_class(1, n + 1));
    }
    return g;
}

Series solve_logderiv(const std::vector<Poly>& z, const Series& g, const Poly& lam, int order) {
    if (!g[0].is_zero()) throw std::domain_error("G must vanish at t=0");
    if (g.order() < order) throw std::invalid_argument("G known to insufficient order");
    std::vector<QPoly> zq;
    for (auto& c : z) zq.push_back(to_q(c));
    Series w = series_eval_poly(zq, g.truncated(order)).scaled(to_q(lam));
    Series f(order);
    f[0] = QPoly(1L);
    for (int n = 0; n < order; ++n) {
        QPoly acc;
        for (int k = 0; k <= n; ++k)
            if (!w[k].is_zero()) acc += w[k] * f[n - k];
        f[n + 1] = acc.scaled(mpq_class(1, n + 1));
    }
    return f;
}

Series series_pow_sym(const Series& f1, const Poly& lam, int order) {
    if (f1[0] != QPoly(1L)) throw std::domain_error("F1(0) must be 1");
    return series_exp(series_log(f1.truncated(order)).scaled(to_q(lam)));
}

}  // namespace lagtp
