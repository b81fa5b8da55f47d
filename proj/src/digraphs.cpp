#include "lagtp/digraphs.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace lagtp {

std::vector<int> LaguerreDigraph::pred() const {
    std::vector<int> p(n, -1);
    for (int i = 0; i < n; ++i)
        if (succ[i] >= 0) p[succ[i]] = i;
    return p;
}

bool LaguerreDigraph::valid() const {
    if (static_cast<int>(succ.size()) != n) return false;
    std::vector<char> hit(n, 0);
    for (int s : succ) {
        if (s < -1 || s >= n) return false;
        if (s >= 0 && hit[s]++) return false;
    }
    return true;
}

int oracle_limit() {
    if (const char* env = std::getenv("LAGTP_LIMIT")) {
        try {
            int v = std::stoi(env);
            if (v >= 0) return v;
        } catch (const std::exception&) {
        }
    }
    return 9;
}

namespace {

void check_limit(int n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (n > oracle_limit())
        throw std::length_error("n = " + std::to_string(n) + " exceeds the oracle limit " +
                                std::to_string(oracle_limit()) + " (set LAGTP_LIMIT to raise it)");
}

template <class Visit>
void enumerate_impl(LaguerreDigraph& g, int i, unsigned used, Visit& visit) {
    if (i == g.n) {
        visit(g);
        return;
    }
    g.succ[i] = -1;
    enumerate_impl(g, i + 1, used, visit);
    for (int j = 0; j < g.n; ++j) {
        if (used & (1u << j)) continue;
        g.succ[i] = j;
        enumerate_impl(g, i + 1, used | (1u << j), visit);
    }
    g.succ[i] = -1;
}

template <class Visit>
void enumerate_fast(int n, Visit&& visit) {
    check_limit(n);
    if (n > 30) throw std::length_error("vertex count too large for the enumerator");
    LaguerreDigraph g;
    g.n = n;
    g.succ.assign(n, -1);
    enumerate_impl(g, 0, 0u, visit);
}

enum VClass { PEAK, VALLEY, DASC, DDESC, FIXED };

// Labels are 1-based with 0 for the virtual boundary vertex.
VClass vertex_class(int label, int pre, int suc) {
    if (pre == label && suc == label) return FIXED;
    bool up_in = pre < label, up_out = label < suc;
    if (up_in && !up_out) return PEAK;
    if (!up_in && up_out) return VALLEY;
    if (up_in) return DASC;
    return DDESC;
}

}  // namespace

void enumerate_digraphs(int n, const std::function<void(const LaguerreDigraph&)>& visit) {
    enumerate_fast(n, [&](const LaguerreDigraph& g) { visit(g); });
}

std::uint64_t count_digraphs(int n) {
    check_limit(n);
    // sum_k binom(n,k)^2 k!
    mpz_class total = 0;
    for (int k = 0; k <= n; ++k) total += binomial(n, k) * binomial(n, k) * factorial(k);
    return total.get_ui();
}

DigraphStats classify(const LaguerreDigraph& g) {
    DigraphStats s;
    int n = g.n;
    std::vector<int> pre(n, -1);
    for (int i = 0; i < n; ++i)
        if (g.succ[i] >= 0) pre[g.succ[i]] = i;

    std::vector<char> on_path(n, 0);
    for (int i = 0; i < n; ++i) {
        if (pre[i] >= 0) continue;
        ++s.pa;
        for (int v = i; v >= 0; v = g.succ[v]) on_path[v] = 1;
    }
    std::vector<char> seen(on_path);
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        ++s.cyc;
        for (int v = i; !seen[v]; v = g.succ[v]) seen[v] = 1;
    }
    for (int i = 0; i < n; ++i) {
        int t = g.succ[i];
        if (t >= 0) {
            ++s.e;
            if (t < i)
                ++s.e_minus;
            else if (t == i)
                ++s.e_zero;
            else
                ++s.e_plus;
        }
        int label = i + 1;
        VClass c = vertex_class(label, pre[i] + 1, t + 1);
        bool path = on_path[i];
        switch (c) {
            case PEAK: ++s.p; ++(path ? s.ppa : s.pcyc); break;
            case VALLEY: ++s.v; ++(path ? s.vpa : s.vcyc); break;
            case DASC: ++s.da; ++(path ? s.dapa : s.dacyc); break;
            case DDESC: ++s.dd; ++(path ? s.ddpa : s.ddcyc); break;
            case FIXED: ++s.fp; break;
        }
    }
    return s;
}

OracleWeights OracleWeights::symbolic() {
    return {px("1+a"), EdgeWeights::symbolic(), VertexWeights::symbolic()};
}

namespace {

// Up to 15 small counters packed four bits each.
std::uint64_t pack(std::initializer_list<int> fields) {
    std::uint64_t key = 0;
    int shift = 0;
    for (int f : fields) {
        key |= static_cast<std::uint64_t>(f) << shift;
        shift += 4;
    }
    return key;
}

int field(std::uint64_t key, int idx) { return static_cast<int>((key >> (4 * idx)) & 0xf); }

class PowerCache {
public:
    explicit PowerCache(Poly base) { pw_.push_back(Poly(1L)); pw_.push_back(std::move(base)); }
    const Poly& operator()(int e) {
        while (static_cast<int>(pw_.size()) <= e) pw_.push_back(pw_.back() * pw_[1]);
        return pw_[e];
    }

private:
    std::vector<Poly> pw_;
};

}  // namespace

Mat oracle_matrix(std::size_t n_rows, OracleMode mode, const OracleWeights& w) {
    Mat out(n_rows, n_rows);
    if (n_rows == 0) return out;
    check_limit(static_cast<int>(n_rows) - 1);

    const VertexWeights& vw = w.vertices;
    VertexWeights eff = vw;
    if (mode == OracleMode::second_mv) {
        eff.z_p = vw.y_p;
        eff.z_v = vw.y_v;
        eff.z_da = vw.y_da;
        eff.z_dd = vw.y_dd;
    }
    PowerCache lam(w.lambda);
    PowerCache vm(w.edges.v_m), v0(w.edges.v_0), vp(w.edges.v_p);
    PowerCache yp(eff.y_p), yv(eff.y_v), yda(eff.y_da), ydd(eff.y_dd), yfp(eff.y_fp);
    PowerCache zp(eff.z_p), zv(eff.z_v), zda(eff.z_da), zdd(eff.z_dd);

    for (std::size_t n = 0; n < n_rows; ++n) {
        std::unordered_map<std::uint64_t, std::uint64_t> tally;
        enumerate_fast(static_cast<int>(n), [&](const LaguerreDigraph& g) {
            DigraphStats s = classify(g);
            std::uint64_t key =
                mode == OracleMode::first_mv
                    ? pack({s.pa, s.cyc, s.e_minus, s.e_zero, s.e_plus})
                    : pack({s.pa, s.cyc, s.pcyc, s.vcyc, s.dacyc, s.ddcyc, s.fp, s.ppa, s.vpa, s.dapa, s.ddpa});
            ++tally[key];
        });
        std::vector<std::pair<std::uint64_t, std::uint64_t>> items(tally.begin(), tally.end());
        std::sort(items.begin(), items.end());
        for (auto& [key, count] : items) {
            int k = field(key, 0);
            Poly term = lam(field(key, 1));
            if (mode == OracleMode::first_mv) {
                term = term * vm(field(key, 2)) * v0(field(key, 3)) * vp(field(key, 4));
            } else {
                term = term * yp(field(key, 2)) * yv(field(key, 3)) * yda(field(key, 4)) * ydd(field(key, 5)) *
                       yfp(field(key, 6)) * zp(field(key, 7)) * zv(field(key, 8)) * zda(field(key, 9)) *
                       zdd(field(key, 10));
            }
            out(n, k) += term.scaled(mpz_class(static_cast<unsigned long>(count)));
        }
    }
    return out;
}

Poly oracle_entry(int n, int k, const OracleWeights& w, OracleMode mode) {
    if (n < 0 || k < 0) throw std::invalid_argument("negative index");
    if (k > n) return Poly();
    return oracle_matrix(static_cast<std::size_t>(n) + 1, mode, w)(n, k);
}

Poly permutation_oracle(int n, PermKind kind, const Poly& lambda, const VertexWeights& w) {
    check_limit(n);
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    PowerCache lam(lambda);
    Poly total;
    LaguerreDigraph g;
    g.n = n;
    g.succ.assign(n, -1);
    do {
        if (kind == PermKind::cyclic) {
            g.succ = sigma;
        } else {
            std::fill(g.succ.begin(), g.succ.end(), -1);
            for (int i = 0; i + 1 < n; ++i) g.succ[sigma[i]] = sigma[i + 1];
        }
        DigraphStats s = classify(g);
        Poly term(1L);
        if (kind == PermKind::cyclic) {
            term = lam(s.cyc) * w.y_p.pow(s.pcyc) * w.y_v.pow(s.vcyc) * w.y_da.pow(s.dacyc) *
                   w.y_dd.pow(s.ddcyc) * w.y_fp.pow(s.fp);
        } else {
            term = w.z_p.pow(s.ppa) * w.z_v.pow(s.vpa) * w.z_da.pow(s.dapa) * w.z_dd.pow(s.ddpa);
        }
        total += term;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

}  // namespace lagtp
