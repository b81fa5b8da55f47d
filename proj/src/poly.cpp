#include "lagtp/poly.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace lagtp {

Var::Var(std::string_view name) {
    if (name.empty()) throw std::invalid_argument("empty variable name");
    static std::mutex mu;
    static std::unordered_set<std::string> pool;
    std::lock_guard<std::mutex> lock(mu);
    p_ = &*pool.emplace(name).first;
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(Var v, std::uint32_t e) {
    Monomial m;
    if (e > 0) {
        m.f_.emplace_back(v, e);
        m.deg_ = e;
    }
    return m;
}

Monomial Monomial::from_factors(std::vector<Factor> f) {
    std::sort(f.begin(), f.end(), [](const Factor& a, const Factor& b) { return a.first < b.first; });
    Monomial m;
    for (auto& [v, e] : f) {
        if (e == 0) continue;
        if (!m.f_.empty() && m.f_.back().first == v)
            m.f_.back().second += e;
        else
            m.f_.emplace_back(v, e);
        m.deg_ += e;
    }
    return m;
}

std::uint32_t Monomial::exponent(Var v) const {
    for (auto& [w, e] : f_)
        if (w == v) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.f_.reserve(f_.size() + o.f_.size());
    std::size_t i = 0, j = 0;
    while (i < f_.size() && j < o.f_.size()) {
        if (f_[i].first == o.f_[j].first) {
            r.f_.emplace_back(f_[i].first, f_[i].second + o.f_[j].second);
            ++i, ++j;
        } else if (f_[i].first < o.f_[j].first) {
            r.f_.push_back(f_[i++]);
        } else {
            r.f_.push_back(o.f_[j++]);
        }
    }
    for (; i < f_.size(); ++i) r.f_.push_back(f_[i]);
    for (; j < o.f_.size(); ++j) r.f_.push_back(o.f_[j]);
    r.deg_ = deg_ + o.deg_;
    return r;
}

bool Monomial::divide(const Monomial& o, Monomial& out) const {
    if (o.deg_ > deg_) return false;
    Monomial r;
    std::size_t i = 0, j = 0;
    while (j < o.f_.size()) {
        while (i < f_.size() && f_[i].first < o.f_[j].first) r.f_.push_back(f_[i++]);
        if (i == f_.size() || !(f_[i].first == o.f_[j].first) || f_[i].second < o.f_[j].second) return false;
        if (f_[i].second > o.f_[j].second) r.f_.emplace_back(f_[i].first, f_[i].second - o.f_[j].second);
        ++i, ++j;
    }
    for (; i < f_.size(); ++i) r.f_.push_back(f_[i]);
    r.deg_ = deg_ - o.deg_;
    out = std::move(r);
    return true;
}

Monomial Monomial::without(Var v) const {
    Monomial r;
    for (auto& fe : f_)
        if (!(fe.first == v)) {
            r.f_.push_back(fe);
            r.deg_ += fe.second;
        }
    return r;
}

std::size_t Monomial::hash() const {
    std::size_t h = deg_;
    for (auto& [v, e] : f_) h = h * 1000003u ^ (v.hash() + 0x9e3779b97f4a7c15ull + e);
    return h;
}

int mono_cmp(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t i = 0, j = 0;
    while (i < fa.size() && j < fb.size()) {
        if (fa[i].first == fb[j].first) {
            if (fa[i].second != fb[j].second) return fa[i].second < fb[j].second ? -1 : 1;
            ++i, ++j;
        } else {
            return fa[i].first < fb[j].first ? 1 : -1;
        }
    }
    return 0;
}

// ---------------------------------------------------------------- BasicPoly

namespace {

bool is_zero_c(const mpz_class& c) { return sgn(c) == 0; }
bool is_zero_c(const mpq_class& c) { return sgn(c) == 0; }

template <class C>
C parse_coef(const std::string& s);
template <>
mpz_class parse_coef<mpz_class>(const std::string& s) { return mpz_class(s, 10); }
template <>
mpq_class parse_coef<mpq_class>(const std::string& s) {
    mpq_class q(s, 10);
    q.canonicalize();
    return q;
}

std::string mono_str(const Monomial& m) {
    std::string s;
    for (auto& [v, e] : m.factors()) {
        if (!s.empty()) s += '*';
        s += v.name();
        if (e > 1) s += '^' + std::to_string(e);
    }
    return s;
}

template <class C>
class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    BasicPoly<C> run() {
        auto p = expr();
        skip();
        if (i_ != s_.size()) fail("trailing input");
        return p;
    }

private:
    std::string_view s_;
    std::size_t i_ = 0;

    [[noreturn]] void fail(const char* what) {
        throw std::invalid_argument(std::string("poly parse error (") + what + ") at offset " +
                                    std::to_string(i_) + " in '" + std::string(s_) + "'");
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    std::string digits() {
        skip();
        std::size_t b = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (b == i_) fail("expected integer");
        return std::string(s_.substr(b, i_ - b));
    }

    BasicPoly<C> expr() {
        BasicPoly<C> acc = term();
        for (;;) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }
    BasicPoly<C> term() {
        BasicPoly<C> acc = unary();
        while (eat('*')) acc *= unary();
        return acc;
    }
    BasicPoly<C> unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        auto base = primary();
        if (eat('^')) base = base.pow(static_cast<unsigned>(std::stoul(digits())));
        return base;
    }
    BasicPoly<C> primary() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end");
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            auto p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = digits();
            if (eat('/')) num += "/" + digits();
            if (num.find('/') != std::string::npos) {
                mpq_class q(num, 10);
                q.canonicalize();
                if constexpr (std::is_same_v<C, mpz_class>) {
                    if (q.get_den() != 1) fail("non-integer literal");
                    return BasicPoly<C>(C(q.get_num()));
                } else {
                    return BasicPoly<C>(q);
                }
            }
            return BasicPoly<C>(parse_coef<C>(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t b = i_;
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
            return BasicPoly<C>(Var(s_.substr(b, i_ - b)));
        }
        fail("unexpected character");
    }
};

}  // namespace

template <class C>
BasicPoly<C>::BasicPoly(long c) {
    if (c != 0) t_.emplace_back(Monomial(), C(c));
}

template <class C>
BasicPoly<C>::BasicPoly(const C& c) {
    if (!is_zero_c(c)) t_.emplace_back(Monomial(), c);
}

template <class C>
BasicPoly<C>::BasicPoly(Var v) {
    t_.emplace_back(Monomial::of(v), C(1));
}

template <class C>
BasicPoly<C> BasicPoly<C>::monomial(const Monomial& m, const C& c) {
    BasicPoly p;
    if (!is_zero_c(c)) p.t_.emplace_back(m, c);
    return p;
}

template <class C>
BasicPoly<C> BasicPoly<C>::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return mono_cmp(a.first, b.first) < 0; });
    BasicPoly p;
    for (auto& t : terms) {
        if (!p.t_.empty() && p.t_.back().first == t.first)
            p.t_.back().second += t.second;
        else {
            if (!p.t_.empty() && is_zero_c(p.t_.back().second)) p.t_.pop_back();
            p.t_.push_back(std::move(t));
        }
    }
    if (!p.t_.empty() && is_zero_c(p.t_.back().second)) p.t_.pop_back();
    return p;
}

template <class C>
BasicPoly<C> BasicPoly<C>::parse(std::string_view text) {
    return Parser<C>(text).run();
}

template <class C>
C BasicPoly<C>::constant_term() const {
    if (!t_.empty() && t_[0].first.is_one()) return t_[0].second;
    return C(0);
}

template <class C>
C BasicPoly<C>::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(t_.begin(), t_.end(), m,
                               [](const Term& t, const Monomial& k) { return mono_cmp(t.first, k) < 0; });
    if (it != t_.end() && it->first == m) return it->second;
    return C(0);
}

template <class C>
long BasicPoly<C>::degree() const {
    return t_.empty() ? -1 : static_cast<long>(t_.back().first.degree());
}

template <class C>
long BasicPoly<C>::degree_in(Var v) const {
    long d = -1;
    for (auto& t : t_) d = std::max<long>(d, t.first.exponent(v));
    return d;
}

template <class C>
std::vector<Var> BasicPoly<C>::variables() const {
    std::vector<Var> vs;
    for (auto& t : t_)
        for (auto& f : t.first.factors()) vs.push_back(f.first);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

template <class C>
BasicPoly<C> BasicPoly<C>::coeff_in(Var v, std::uint32_t e) const {
    std::vector<Term> out;
    for (auto& t : t_)
        if (t.first.exponent(v) == e) out.emplace_back(t.first.without(v), t.second);
    return from_terms(std::move(out));
}

template <class C>
BasicPoly<C> BasicPoly<C>::operator-() const {
    BasicPoly r = *this;
    for (auto& t : r.t_) t.second = -t.second;
    return r;
}

namespace {
template <class C, bool Sub>
std::vector<std::pair<Monomial, C>> merge(const std::vector<std::pair<Monomial, C>>& a,
                                          const std::vector<std::pair<Monomial, C>>& b) {
    std::vector<std::pair<Monomial, C>> r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        int c = mono_cmp(a[i].first, b[j].first);
        if (c < 0) {
            r.push_back(a[i++]);
        } else if (c > 0) {
            r.emplace_back(b[j].first, Sub ? C(-b[j].second) : b[j].second);
            ++j;
        } else {
            C s = Sub ? C(a[i].second - b[j].second) : C(a[i].second + b[j].second);
            if (!is_zero_c(s)) r.emplace_back(a[i].first, std::move(s));
            ++i, ++j;
        }
    }
    for (; i < a.size(); ++i) r.push_back(a[i]);
    for (; j < b.size(); ++j) r.emplace_back(b[j].first, Sub ? C(-b[j].second) : b[j].second);
    return r;
}
}  // namespace

template <class C>
BasicPoly<C>& BasicPoly<C>::operator+=(const BasicPoly& o) {
    if (o.t_.empty()) return *this;
    if (t_.empty()) return *this = o;
    t_ = merge<C, false>(t_, o.t_);
    return *this;
}

template <class C>
BasicPoly<C>& BasicPoly<C>::operator-=(const BasicPoly& o) {
    if (o.t_.empty()) return *this;
    t_ = merge<C, true>(t_, o.t_);
    return *this;
}

template <class C>
BasicPoly<C>& BasicPoly<C>::operator*=(const BasicPoly& o) {
    return *this = mul(o);
}

template <class C>
BasicPoly<C> BasicPoly<C>::mul(const BasicPoly& o) const {
    if (t_.empty() || o.t_.empty()) return BasicPoly();
    const BasicPoly& big = t_.size() >= o.t_.size() ? *this : o;
    const BasicPoly& small = t_.size() >= o.t_.size() ? o : *this;
    if (small.t_.size() == 1) {
        // Monomial order is multiplicative, so the order is preserved.
        BasicPoly r;
        r.t_.reserve(big.t_.size());
        const auto& [m, c] = small.t_[0];
        for (auto& t : big.t_) r.t_.emplace_back(t.first * m, C(t.second * c));
        return r;
    }
    std::unordered_map<Monomial, C, MonomialHash> acc;
    acc.reserve(big.t_.size() * small.t_.size());
    for (auto& a : small.t_)
        for (auto& b : big.t_) {
            auto [it, fresh] = acc.try_emplace(a.first * b.first, a.second * b.second);
            if (!fresh) it->second += a.second * b.second;
        }
    BasicPoly r;
    r.t_.reserve(acc.size());
    for (auto& kv : acc)
        if (!is_zero_c(kv.second)) r.t_.emplace_back(kv.first, std::move(kv.second));
    std::sort(r.t_.begin(), r.t_.end(), [](const Term& a, const Term& b) { return mono_cmp(a.first, b.first) < 0; });
    return r;
}

template <class C>
BasicPoly<C> BasicPoly<C>::scaled(const C& c) const {
    if (is_zero_c(c)) return BasicPoly();
    BasicPoly r = *this;
    for (auto& t : r.t_) t.second *= c;
    return r;
}

template <class C>
BasicPoly<C> BasicPoly<C>::pow(unsigned e) const {
    BasicPoly r(1L), b = *this;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

template <class C>
BasicPoly<C> BasicPoly<C>::divide_exact(const BasicPoly& b) const {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    const auto& [lm, lc] = b.leading();
    BasicPoly rem = *this, q;
    std::vector<Term> qt;
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.leading();
        Monomial m;
        if (!rm.divide(lm, m)) throw std::domain_error("inexact polynomial division");
        C c;
        if constexpr (std::is_same_v<C, mpz_class>) {
            if (!mpz_divisible_p(rc.get_mpz_t(), lc.get_mpz_t())) throw std::domain_error("inexact polynomial division");
            c = rc / lc;
        } else {
            c = rc / lc;
        }
        BasicPoly t = monomial(m, c);
        rem -= t * b;
        qt.emplace_back(std::move(m), std::move(c));
    }
    return from_terms(std::move(qt));
}

template <class C>
BasicPoly<C> BasicPoly<C>::substitute(const std::map<Var, BasicPoly>& env) const {
    std::map<std::pair<Var, std::uint32_t>, BasicPoly> powers;
    std::vector<Term> out;
    for (auto& [m, c] : t_) {
        std::vector<Monomial::Factor> keep;
        BasicPoly factor = monomial(Monomial(), c);
        for (auto& [v, e] : m.factors()) {
            auto it = env.find(v);
            if (it == env.end()) {
                keep.emplace_back(v, e);
                continue;
            }
            auto key = std::make_pair(v, e);
            auto pit = powers.find(key);
            if (pit == powers.end()) pit = powers.emplace(key, it->second.pow(e)).first;
            factor *= pit->second;
            if (factor.is_zero()) break;
        }
        if (factor.is_zero()) continue;
        Monomial rest = Monomial::from_factors(std::move(keep));
        for (auto& t : factor.t_) out.emplace_back(t.first * rest, t.second);
    }
    return from_terms(std::move(out));
}

template <class C>
C BasicPoly<C>::evaluate(const std::map<Var, C>& point) const {
    C sum = 0;
    for (auto& [m, c] : t_) {
        C v = c;
        for (auto& [x, e] : m.factors()) {
            auto it = point.find(x);
            if (it == point.end()) throw std::invalid_argument("unbound variable " + x.name());
            for (std::uint32_t k = 0; k < e; ++k) v *= it->second;
        }
        sum += v;
    }
    return sum;
}

template <class C>
bool BasicPoly<C>::nonneg() const {
    for (auto& t : t_)
        if (sgn(t.second) < 0) return false;
    return true;
}

template <class C>
bool BasicPoly<C>::operator==(const BasicPoly& o) const {
    if (t_.size() != o.t_.size()) return false;
    for (std::size_t i = 0; i < t_.size(); ++i)
        if (!(t_[i].first == o.t_[i].first) || t_[i].second != o.t_[i].second) return false;
    return true;
}

template <class C>
std::string BasicPoly<C>::str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (auto& [m, c] : t_) {
        bool neg = sgn(c) < 0;
        C a = neg ? C(-c) : c;
        if (!s.empty())
            s += neg ? "-" : "+";
        else if (neg)
            s += "-";
        if (m.is_one()) {
            s += a.get_str();
        } else {
            if (a != 1) s += a.get_str() + "*";
            s += mono_str(m);
        }
    }
    return s;
}

template <class C>
nlohmann::json BasicPoly<C>::to_json() const {
    auto vs = variables();
    nlohmann::json names = nlohmann::json::array();
    for (auto v : vs) names.push_back(v.name());
    nlohmann::json terms = nlohmann::json::array();
    for (auto& [m, c] : t_) {
        nlohmann::json exp = nlohmann::json::array();
        for (auto v : vs) exp.push_back(m.exponent(v));
        terms.push_back({{"exp", exp}, {"coef", c.get_str()}});
    }
    return {{"vars", names}, {"terms", terms}};
}

template <class C>
BasicPoly<C> BasicPoly<C>::from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return BasicPoly(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return parse(j.get<std::string>());
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
        throw std::invalid_argument("polynomial JSON must be an object with 'vars' and 'terms'");
    std::vector<Var> vs;
    for (auto& n : j.at("vars")) vs.emplace_back(n.get<std::string>());
    std::vector<Term> terms;
    for (auto& t : j.at("terms")) {
        const auto& exp = t.at("exp");
        if (exp.size() != vs.size()) throw std::invalid_argument("exponent vector length mismatch");
        std::vector<Monomial::Factor> f;
        for (std::size_t i = 0; i < vs.size(); ++i) f.emplace_back(vs[i], exp[i].get<std::uint32_t>());
        terms.emplace_back(Monomial::from_factors(std::move(f)), parse_coef<C>(t.at("coef").get<std::string>()));
    }
    return from_terms(std::move(terms));
}

template class BasicPoly<mpz_class>;
template class BasicPoly<mpq_class>;

// ---------------------------------------------------------------- helpers

Poly poly_mul(const Poly& a, const Poly& b) { return a * b; }
Poly poly_substitute(const Poly& p, const std::map<Var, Poly>& env) { return p.substitute(env); }
bool poly_is_coeffwise_nonneg(const Poly& p) { return p.nonneg(); }

QPoly to_q(const Poly& p) {
    std::vector<QPoly::Term> t;
    t.reserve(p.size());
    for (auto& [m, c] : p.terms()) t.emplace_back(m, mpq_class(c));
    return QPoly::from_terms(std::move(t));
}

bool is_integral(const QPoly& p) {
    for (auto& t : p.terms())
        if (t.second.get_den() != 1) return false;
    return true;
}

Poly to_z(const QPoly& p) {
    std::vector<Poly::Term> t;
    t.reserve(p.size());
    for (auto& [m, c] : p.terms()) {
        if (c.get_den() != 1) throw std::domain_error("non-integer coefficient " + c.get_str());
        t.emplace_back(m, mpz_class(c.get_num()));
    }
    return Poly::from_terms(std::move(t));
}

mpz_class factorial(unsigned n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Poly rising(const Poly& x, unsigned n) {
    Poly r(1L);
    for (unsigned i = 0; i < n; ++i) r *= x + Poly(static_cast<long>(i));
    return r;
}

Poly falling(const Poly& x, unsigned n) {
    Poly r(1L);
    for (unsigned i = 0; i < n; ++i) r *= x - Poly(static_cast<long>(i));
    return r;
}

}  // namespace lagtp
