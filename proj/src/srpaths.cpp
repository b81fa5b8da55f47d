#include "lagtp/srpaths.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "lagtp/laguerre.hpp"

namespace lagtp {

// ---------------------------------------------------------------- Frac

Frac::Frac(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw std::domain_error("zero denominator");
}

Frac Frac::operator+(const Frac& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den == o.den) return Frac(num + o.num, den);
    return Frac(num * o.den + o.num * den, den * o.den);
}

Frac Frac::operator*(const Frac& o) const {
    if (is_zero() || o.is_zero()) return Frac();
    Poly one(1L);
    return Frac(num * o.num, den == one ? o.den : (o.den == one ? den : den * o.den));
}

void Frac::reduce() {
    if (num.is_zero()) {
        den = Poly(1L);
        return;
    }
    if (den == Poly(1L)) return;
    try {
        num = num.divide_exact(den);
        den = Poly(1L);
    } catch (const std::domain_error&) {
    }
}

Poly Frac::to_poly() const {
    if (den == Poly(1L)) return num;
    return num.divide_exact(den);
}

// ---------------------------------------------------------------- SRCoeffs

std::string sr_var_name(int i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "al%02d", i);
    return buf;
}

Poly SRCoeffs::at(int i) const {
    if (i < m) return Poly();
    if (!den) return num(i);
    return frac(i).to_poly();
}

Frac SRCoeffs::frac(int i) const {
    if (i < m) return Frac();
    return den ? Frac(num(i), den(i)) : Frac(num(i));
}

SRCoeffs SRCoeffs::symbolic(int m) {
    return {m, [](int i) { return pv(sr_var_name(i)); }, {}};
}

SRCoeffs SRCoeffs::from_list(int m, std::vector<Poly> values) {
    auto v = std::make_shared<std::vector<Poly>>(std::move(values));
    return {m, [v](int i) { return i >= 0 && i < static_cast<int>(v->size()) ? (*v)[i] : Poly(); }, {}};
}

SRCoeffs SRCoeffs::shifted(int zeros) const {
    SRCoeffs base = *this;
    int mm = m;
    SRCoeffs out;
    out.m = m;
    out.num = [base, zeros, mm](int i) { return i < mm + zeros ? Poly() : base.num(i - zeros); };
    if (den) out.den = [base, zeros, mm](int i) { return i < mm + zeros ? Poly(1L) : base.den(i - zeros); };
    return out;
}

// ---------------------------------------------------------------- SR polynomials

const Poly& SRTable::get(int j, int n, int k) {
    static const Poly zero;
    int m = c_.m;
    if (n < 0 || j < 0) return zero;
    return walk((m + 1) * n + j, (m + 1) * k + j);
}

// Weight of paths of the given length ending at height h: last step a rise,
// or an m-fall from height h+m weighted alpha_{h+m}.
const Poly& SRTable::walk(int len, int h) {
    static const Poly zero, one(1L);
    if (h < 0 || h > len) return zero;
    if (len == 0) return one;
    auto key = std::make_pair(len, h);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    int m = c_.m;
    Poly v = walk(len - 1, h - 1);
    const Poly& rest = walk(len - 1, h + m);
    if (!rest.is_zero()) v += c_.at(h + m) * rest;
    return memo_.emplace(key, std::move(v)).first->second;
}

Poly sr_poly(const SRCoeffs& c, int j, int n, int k) {
    if (j < 0) throw std::invalid_argument("negative type j");
    SRTable t(c);
    return t.get(j, n, k);
}

Mat sr_matrix(const SRCoeffs& c, int j, std::size_t n) {
    SRTable t(c);
    Mat s(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k <= r; ++k) s(r, k) = t.get(j, static_cast<int>(r), static_cast<int>(k));
    return s;
}

namespace {

struct PathWalker {
    int m, length, target;
    std::vector<int> falls;  // falls[h] = number of m-falls from height h
    std::map<std::vector<int>, long> tally;

    void walk(int pos, int h) {
        int rest = length - pos;
        if (rest == 0) {
            if (h == target) ++tally[falls];
            return;
        }
        // Reachability: ups - m*downs = target - h with ups + downs = rest.
        int diff = rest - (target - h);
        if (diff < 0 || diff % (m + 1) != 0) return;
        walk(pos + 1, h + 1);
        if (h >= m) {
            ++falls[h];
            walk(pos + 1, h - m);
            --falls[h];
        }
    }
};

}  // namespace

Poly sr_path_oracle(const SRCoeffs& c, int j, int n, int k) {
    if (j < 0 || n < 0 || k < 0) throw std::invalid_argument("negative path parameter");
    int length = (c.m + 1) * n + j;
    if (length > kPathOracleMaxLength)
        throw std::length_error("path length " + std::to_string(length) + " exceeds the oracle limit");
    if (k > n) return Poly();
    PathWalker w{c.m, length, (c.m + 1) * k + j, std::vector<int>(length + 1, 0), {}};
    w.walk(0, 0);
    Poly total;
    for (auto& [falls, count] : w.tally) {
        Poly term(count);
        for (int h = 0; h < static_cast<int>(falls.size()); ++h)
            if (falls[h]) term = term * c.at(h).pow(static_cast<unsigned>(falls[h]));
        total += term;
    }
    return total;
}

// ---------------------------------------------------------------- production matrices

namespace {

using FracMat = std::vector<std::vector<Frac>>;

// Subdiagonal entry i (row i, column i-1) of L_r.
Frac l_entry(const SRCoeffs& c, int r, int i) { return c.frac(i * (c.m + 1) + r - 1); }

void left_mul_l(FracMat& x, const SRCoeffs& c, int r) {
    int w = static_cast<int>(x.size());
    for (int n = w - 1; n >= 1; --n) {
        Frac s = l_entry(c, r, n);
        if (s.is_zero()) continue;
        for (int k = 0; k < w; ++k)
            if (!x[n - 1][k].is_zero()) {
                x[n][k] = x[n][k] + s * x[n - 1][k];
                x[n][k].reduce();
            }
    }
}

void right_mul_l(FracMat& x, const SRCoeffs& c, int r) {
    int w = static_cast<int>(x.size());
    for (int k = 0; k + 1 < w; ++k) {
        Frac s = l_entry(c, r, k + 1);
        if (s.is_zero()) continue;
        for (int n = 0; n < w; ++n)
            if (!x[n][k + 1].is_zero()) {
                x[n][k] = x[n][k] + x[n][k + 1] * s;
                x[n][k].reduce();
            }
    }
}

Mat smj_block(const SRCoeffs& c, int j, std::size_t size) {
    int m = c.m;
    int w = static_cast<int>(size) + j + 2;  // right factors spoil the last j columns
    FracMat x(w, std::vector<Frac>(w));
    for (int i = 0; i < w; ++i) {
        x[i][i] = c.frac((i + 1) * (m + 1) - 1);
        if (i + 1 < w) x[i][i + 1] = Frac(Poly(1L));
    }
    for (int r = m; r >= j + 1; --r) left_mul_l(x, c, r);
    for (int r = 1; r <= j; ++r) right_mul_l(x, c, r);
    Mat out(size, size);
    for (std::size_t n = 0; n < size; ++n)
        for (std::size_t k = 0; k < size; ++k) {
            Frac f = x[n][k];
            f.reduce();
            out(n, k) = f.to_poly();
        }
    return out;
}

}  // namespace

HessMatrix prodmat_smj(const SRCoeffs& c, int j) {
    if (j < 0 || j > c.m) throw std::invalid_argument("prodmat_smj needs 0 <= j <= m");
    return HessMatrix::from_builder([c, j](std::size_t s) { return smj_block(c, j, s); },
                                    static_cast<std::size_t>(c.m));
}

HessMatrix prodmat_m2_explicit(const SRCoeffs& c, int j) {
    if (c.m != 2) throw std::invalid_argument("explicit formulas are for m = 2");
    if (j < 0 || j > 2) throw std::invalid_argument("explicit formulas need 0 <= j <= 2");
    // Indices below 2 (after the shift by j) read as zero.
    auto a = [c, j](long i) { return i + j < 2 ? Poly() : c.at(static_cast<int>(i + j)); };
    return HessMatrix(
        [a](std::size_t n, std::size_t k) {
            long N = static_cast<long>(n);
            if (k == n + 1) return Poly(1L);
            if (k == n) return a(3 * N) + a(3 * N + 1) + a(3 * N + 2);
            if (k + 1 == n) return a(3 * N - 2) * a(3 * N) + a(3 * N - 1) * a(3 * N) + a(3 * N - 1) * a(3 * N + 1);
            if (k + 2 == n) return a(3 * N - 4) * a(3 * N - 2) * a(3 * N);
            return Poly();
        },
        2);
}

// ---------------------------------------------------------------- series

Series sfrac_tail_series(const SRCoeffs& c, int j, int order) {
    if (j < 0) throw std::invalid_argument("negative type j");
    int m = c.m;
    int kmax = m * order + j + 1;
    // f_k for k in [kmax+1, kmax+m] are 1 to this order.
    std::vector<Series> f(kmax + m + 1, Series::constant(QPoly(1L), order));
    Series t = Series::t(order);
    for (int k = kmax; k >= 0; --k) {
        Series prod = Series::constant(QPoly(1L), order);
        for (int i = 1; i <= m; ++i) prod = prod * f[k + i];
        Series denom = Series::constant(QPoly(1L), order) - (t * prod).scaled(to_q(c.at(k + m)));
        f[k] = series_reciprocal(denom);
    }
    Series out = Series::constant(QPoly(1L), order);
    for (int i = 0; i <= j; ++i) out = out * f[i];
    return out;
}

Series sfrac_alternate_series(const SRCoeffs& c, int j, int order) {
    int m = c.m;
    if (j < 0 || j > m) throw std::invalid_argument("alternate form needs 0 <= j <= m");
    SRCoeffs sym = SRCoeffs::symbolic(m);
    Series f0 = sfrac_tail_series(sym, 0, order + 1);
    Poly am = sym.at(m);
    int ell = m - j;
    std::map<Var, Poly> env;
    int top = (m + 1) * (order + 2) + m;
    for (int i = m; i <= top; ++i) env[Var(sr_var_name(i))] = i < m + ell ? Poly() : c.at(i - ell);
    Series out(order);
    for (int n = 0; n <= order; ++n) out[n] = to_q(to_z(f0[n + 1]).divide_exact(am).substitute(env));
    return out;
}

// ---------------------------------------------------------------- kappa families

KappaFamily KappaFamily::parse(const std::string& id0) {
    std::string id = id0;
    auto pos = id.find("a-1");
    if (pos != std::string::npos) id.replace(pos, 3, "am1");
    KappaFamily f;
    if (id == "j0am1") f = {0, -1};
    else if (id == "j1am1") f = {1, -1};
    else if (id == "j1a0") f = {1, 0};
    else if (id == "j2am1") f = {2, -1};
    else if (id == "j2a0") f = {2, 0};
    else if (id == "j2a1") f = {2, 1};
    else throw std::invalid_argument("unknown family id '" + id0 + "'");
    return f;
}

std::string KappaFamily::id() const {
    return "j" + std::to_string(j) + (alpha_lag < 0 ? "am1" : "a" + std::to_string(alpha_lag));
}

bool KappaFamily::uses_kappa() const { return !((j == 1 && alpha_lag == 0) || (j == 2 && alpha_lag == 0)); }

SRCoeffs kappa_family_coeffs(const KappaFamily& fam, const Poly& x) {
    static const int cells[6][2] = {{0, -1}, {1, -1}, {1, 0}, {2, -1}, {2, 0}, {2, 1}};
    bool ok = false;
    for (auto& c : cells) ok |= (c[0] == fam.j && c[1] == fam.alpha_lag);
    if (!ok)
        throw std::invalid_argument("inadmissible cell j=" + std::to_string(fam.j) +
                                    ", alpha=" + std::to_string(fam.alpha_lag));
    Poly kn = fam.kappa_num, kd = fam.kappa_den;
    // D_n = n - (n-1) kappa, scaled by the denominator of kappa; c_n = D_{n-1}/D_n.
    auto dn = [kn, kd](long n) { return kd.scaled(mpz_class(n)) - kn.scaled(mpz_class(n - 1)); };
    auto cn_n = [dn](long n) { return Frac(dn(n - 1).scaled(mpz_class(n)), dn(n)); };       // c_n n
    auto cn_bar = [dn](long n) { return Frac(dn(n + 1).scaled(mpz_class(n)), dn(n)); };     // (2 - c_n) n
    auto lit = [](long n) { return Frac(Poly(n)); };

    std::function<Frac(int)> rule;
    int j = fam.j, a = fam.alpha_lag;
    if ((j == 0 && a == -1) || (j == 2 && a == 1)) {
        rule = [=](int i) {
            if (i % 3 == 2) return Frac(x);
            if (i % 3 == 0) return cn_n(i / 3);
            return cn_bar((i - 1) / 3);
        };
    } else if (j == 1 && a == -1) {
        rule = [=](int i) {
            if (i == 2) return Frac();
            if (i % 3 == 0) return Frac(x);
            if (i % 3 == 1) return cn_n((i - 1) / 3);
            return cn_bar((i - 2) / 3);
        };
    } else if (j == 1 && a == 0) {
        rule = [=](int i) {
            if (i % 3 == 2) return Frac(x);
            if (i % 3 == 0) return lit(i / 3);
            return lit((i - 1) / 3);
        };
    } else if (j == 2 && a == -1) {
        rule = [=](int i) {
            if (i == 2 || i == 3) return Frac();
            if (i % 3 == 1) return Frac(x);
            if (i % 3 == 2) return cn_n((i - 2) / 3);
            return cn_bar((i - 3) / 3);
        };
    } else {  // j = 2, alpha = 0
        rule = [=](int i) {
            if (i == 2) return Frac();
            if (i % 3 == 0) return Frac(x);
            if (i % 3 == 1) return lit((i - 1) / 3);
            return lit((i - 2) / 3);
        };
    }
    auto cache = std::make_shared<std::map<int, Frac>>();
    auto get = [rule, cache](int i) -> Frac {
        auto it = cache->find(i);
        if (it != cache->end()) return it->second;
        Frac f = rule(i);
        if (f.den.is_zero()) throw std::domain_error("kappa makes a denominator vanish");
        return cache->emplace(i, f).first->second;
    };
    SRCoeffs c;
    c.m = 2;
    c.num = [get](int i) { return get(i).num; };
    if (fam.uses_kappa()) c.den = [get](int i) { return get(i).den; };
    return c;
}

bool verify_kappa_cell(const KappaFamily& fam, std::size_t n) {
    Poly x = pv("x");
    SRCoeffs c = kappa_family_coeffs(fam, x);
    Mat lhs = prodmat_smj(c, fam.j).truncate(n);
    Mat rhs = prodmat(LaguerreParams::of(fam.alpha_lag), ProdVariant::P, VertexWeights::symbolic(), x).truncate(n);
    return lhs == rhs;
}

Mat hankel_matrix(const std::vector<Poly>& seq, std::size_t size) {
    if (size && seq.size() < 2 * size - 1) throw std::invalid_argument("sequence too short for the Hankel block");
    Mat h(size, size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) h(i, j) = seq[i + j];
    return h;
}

}  // namespace lagtp
