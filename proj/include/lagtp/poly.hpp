#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace lagtp {

// Interned variable name. Variables are ordered lexicographically by name.
class Var {
public:
    Var() = default;
    explicit Var(std::string_view name);

    const std::string& name() const { return *p_; }
    bool valid() const { return p_ != nullptr; }

    friend bool operator==(Var a, Var b) { return a.p_ == b.p_; }
    friend std::strong_ordering operator<=>(Var a, Var b) {
        if (a.p_ == b.p_) return std::strong_ordering::equal;
        return *a.p_ <=> *b.p_;
    }
    std::size_t hash() const { return std::hash<const void*>{}(p_); }

private:
    const std::string* p_ = nullptr;
};

// Power product, factors sorted by variable order, no zero exponents.
class Monomial {
public:
    using Factor = std::pair<Var, std::uint32_t>;

    Monomial() = default;
    static Monomial of(Var v, std::uint32_t e = 1);
    static Monomial from_factors(std::vector<Factor> f);

    std::uint32_t degree() const { return deg_; }
    std::uint32_t exponent(Var v) const;
    const std::vector<Factor>& factors() const { return f_; }
    bool is_one() const { return f_.empty(); }

    Monomial operator*(const Monomial& o) const;
    // Returns false when o does not divide *this.
    bool divide(const Monomial& o, Monomial& out) const;
    Monomial without(Var v) const;

    bool operator==(const Monomial& o) const { return deg_ == o.deg_ && f_ == o.f_; }
    std::size_t hash() const;

private:
    std::vector<Factor> f_;
    std::uint32_t deg_ = 0;
};

// Graded lex: total degree first, then the exponent of the earliest variable.
int mono_cmp(const Monomial& a, const Monomial& b);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

template <class C>
class BasicPoly {
public:
    using Coef = C;
    using Term = std::pair<Monomial, C>;

    BasicPoly() = default;
    BasicPoly(long c);
    BasicPoly(const C& c);
    BasicPoly(Var v);
    static BasicPoly var(std::string_view name) { return BasicPoly(Var(name)); }
    static BasicPoly monomial(const Monomial& m, const C& c);
    // Terms may be unsorted and repeated; zero coefficients are dropped.
    static BasicPoly from_terms(std::vector<Term> terms);
    static BasicPoly parse(std::string_view text);

    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.is_one()); }
    C constant_term() const;
    C coefficient(const Monomial& m) const;
    std::size_t size() const { return t_.size(); }
    long degree() const;            // -1 for zero
    long degree_in(Var v) const;    // -1 for zero
    std::vector<Var> variables() const;
    const Term& leading() const { return t_.back(); }

    // Coefficient of v^e viewed as a polynomial in v.
    BasicPoly coeff_in(Var v, std::uint32_t e) const;

    BasicPoly operator-() const;
    BasicPoly& operator+=(const BasicPoly& o);
    BasicPoly& operator-=(const BasicPoly& o);
    BasicPoly& operator*=(const BasicPoly& o);
    friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
    friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }
    friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) { return a.mul(b); }
    BasicPoly mul(const BasicPoly& o) const;
    BasicPoly scaled(const C& c) const;
    BasicPoly pow(unsigned e) const;

    // Exact division; throws std::domain_error when b does not divide *this.
    BasicPoly divide_exact(const BasicPoly& b) const;

    // Simultaneous substitution; unmapped variables pass through.
    BasicPoly substitute(const std::map<Var, BasicPoly>& env) const;
    C evaluate(const std::map<Var, C>& point) const;  // all variables must be bound

    bool nonneg() const;  // every coefficient >= 0

    bool operator==(const BasicPoly& o) const;
    bool operator!=(const BasicPoly& o) const { return !(*this == o); }

    std::string str() const;
    nlohmann::json to_json() const;
    static BasicPoly from_json(const nlohmann::json& j);

private:
    std::vector<Term> t_;  // ascending in mono_cmp
};

using Poly = BasicPoly<mpz_class>;
using QPoly = BasicPoly<mpq_class>;

extern template class BasicPoly<mpz_class>;
extern template class BasicPoly<mpq_class>;

// The free functions named by the public interface.
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_substitute(const Poly& p, const std::map<Var, Poly>& env);
bool poly_is_coeffwise_nonneg(const Poly& p);

QPoly to_q(const Poly& p);
// Throws std::domain_error if some coefficient is not an integer.
Poly to_z(const QPoly& p);
bool is_integral(const QPoly& p);

mpz_class factorial(unsigned n);
mpz_class binomial(long n, long k);
// x(x+1)...(x+n-1) and x(x-1)...(x-n+1)
Poly rising(const Poly& x, unsigned n);
Poly falling(const Poly& x, unsigned n);

inline Poly px(std::string_view text) { return Poly::parse(text); }
inline Poly pv(std::string_view name) { return Poly::var(name); }

}  // namespace lagtp
