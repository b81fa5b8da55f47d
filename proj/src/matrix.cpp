#include "lagtp/matrix.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "lagtp/rng.hpp"

namespace lagtp {

// ---------------------------------------------------------------- Mat

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly(1L);
    return m;
}

Mat Mat::from_rows(const std::vector<std::vector<Poly>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    Mat m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Mat Mat::block(std::size_t rows, std::size_t cols) const {
    if (rows > r_ || cols > c_) throw std::out_of_range("block larger than matrix");
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = (*this)(i, j);
    return m;
}

Mat Mat::sub(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    Mat m(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(rows[i], cols[j]);
    return m;
}

Mat Mat::transpose() const {
    Mat m(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

Mat Mat::substitute(const std::map<Var, Poly>& env) const {
    Mat m(r_, c_);
    for (std::size_t i = 0; i < d_.size(); ++i) m.d_[i] = d_[i].substitute(env);
    return m;
}

Mat Mat::operator+(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("shape mismatch in +");
    Mat m(r_, c_);
    for (std::size_t i = 0; i < d_.size(); ++i) m.d_[i] = d_[i] + o.d_[i];
    return m;
}

Mat Mat::operator-(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("shape mismatch in -");
    Mat m(r_, c_);
    for (std::size_t i = 0; i < d_.size(); ++i) m.d_[i] = d_[i] - o.d_[i];
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (c_ != o.r_) throw std::invalid_argument("shape mismatch in *");
    Mat m(r_, o.c_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t k = 0; k < c_; ++k) {
            const Poly& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.c_; ++j)
                if (!o(k, j).is_zero()) m(i, j) += a * o(k, j);
        }
    return m;
}

Mat Mat::scaled(const Poly& c) const {
    Mat m(r_, c_);
    for (std::size_t i = 0; i < d_.size(); ++i) m.d_[i] = d_[i] * c;
    return m;
}

bool Mat::operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && d_ == o.d_; }

nlohmann::json Mat::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < r_; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < c_; ++j) row.push_back((*this)(i, j).to_json());
        rows.push_back(row);
    }
    return {{"rows", r_}, {"cols", c_}, {"entries", rows}};
}

Mat Mat::from_json(const nlohmann::json& j) {
    const nlohmann::json* entries = &j;
    if (j.is_object()) entries = &j.at("entries");
    if (!entries->is_array()) throw std::invalid_argument("matrix JSON must be an array of rows");
    std::vector<std::vector<Poly>> rows;
    for (auto& r : *entries) {
        if (!r.is_array()) throw std::invalid_argument("matrix row must be an array");
        std::vector<Poly> row;
        for (auto& e : r) row.push_back(Poly::from_json(e));
        rows.push_back(std::move(row));
    }
    Mat m = from_rows(rows);
    if (j.is_object()) {
        if (j.contains("rows") && j.at("rows").get<std::size_t>() != m.rows())
            throw std::invalid_argument("row count does not match entries");
        if (j.contains("cols") && j.at("cols").get<std::size_t>() != m.cols())
            throw std::invalid_argument("column count does not match entries");
    }
    return m;
}

std::string Mat::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < r_; ++i) {
        for (std::size_t j = 0; j < c_; ++j) os << (j ? "  " : "") << (*this)(i, j).str();
        os << '\n';
    }
    return os.str();
}

// ---------------------------------------------------------------- HessMatrix

struct HessMatrix::Cache {
    std::mutex mu;
    Builder build;
    Mat block;
};

HessMatrix::HessMatrix(Entry e, std::optional<std::size_t> lower_band) : e_(std::move(e)), band_(lower_band) {}

HessMatrix HessMatrix::from_builder(Builder b, std::optional<std::size_t> lower_band) {
    HessMatrix h;
    h.band_ = lower_band;
    h.cache_ = std::make_shared<Cache>();
    h.cache_->build = std::move(b);
    return h;
}

Poly HessMatrix::entry(std::size_t n, std::size_t k) const {
    if (k > n + 1) return Poly();
    if (band_ && n > k + *band_) return Poly();
    if (cache_) {
        std::lock_guard<std::mutex> lock(cache_->mu);
        std::size_t need = std::max(n, k) + 1;
        if (cache_->block.rows() < need) {
            std::size_t s = std::max<std::size_t>({need, 2 * cache_->block.rows(), 8});
            cache_->block = cache_->build(s);
        }
        return cache_->block(n, k);
    }
    return e_(n, k);
}

Mat HessMatrix::truncate(std::size_t rows, std::size_t cols) const {
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols && j <= i + 1; ++j) m(i, j) = entry(i, j);
    return m;
}

HessMatrix delta_matrix() {
    return HessMatrix([](std::size_t n, std::size_t k) { return k == n + 1 ? Poly(1L) : Poly(); }, 0);
}

HessMatrix scalar_matrix(const Poly& c) {
    return HessMatrix([c](std::size_t n, std::size_t k) { return k == n ? c : Poly(); }, 0);
}

Mat binomial_matrix(const Poly& a, const Poly& b, std::size_t n) {
    Mat m(n, n);
    std::vector<Poly> ap{Poly(1L)}, bp{Poly(1L)};
    for (std::size_t i = 1; i < n; ++i) {
        ap.push_back(ap.back() * a);
        bp.push_back(bp.back() * b);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k <= i; ++k)
            m(i, k) = (ap[i - k] * bp[k]).scaled(binomial(static_cast<long>(i), static_cast<long>(k)));
    return m;
}

Mat binomial_matrix(const Poly& x, std::size_t n) { return binomial_matrix(x, Poly(1L), n); }

Mat lower_bidiagonal(const std::vector<Poly>& s, std::size_t n) {
    Mat m = Mat::identity(n);
    for (std::size_t i = 1; i < n && i - 1 < s.size(); ++i) m(i, i - 1) = s[i - 1];
    return m;
}

Mat inverse_unit_lower(const Mat& l) {
    std::size_t n = l.rows();
    for (std::size_t i = 0; i < n; ++i)
        if (l(i, i) != Poly(1L)) throw std::domain_error("matrix is not unit-lower-triangular");
    Mat inv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        inv(j, j) = Poly(1L);
        for (std::size_t i = j + 1; i < n; ++i) {
            Poly acc;
            for (std::size_t k = j; k < i; ++k)
                if (!l(i, k).is_zero()) acc += l(i, k) * inv(k, j);
            inv(i, j) = -acc;
        }
    }
    return inv;
}

// ---------------------------------------------------------------- production matrices

Mat output_matrix(const Mat& p, std::size_t n) {
    if (n == 0) return Mat();
    if (p.cols() < n) throw std::invalid_argument("production matrix block too small");
    std::size_t w = p.cols();
    std::vector<Poly> row(w);
    row[0] = Poly(1L);
    Mat a(n, n);
    for (std::size_t j = 0; j < n; ++j) a(0, j) = row[j];
    for (std::size_t r = 1; r < n; ++r) {
        std::vector<Poly> next(w);
        for (std::size_t i = 0; i < w && i < p.rows(); ++i) {
            if (row[i].is_zero()) continue;
            for (std::size_t k = 0; k < w; ++k)
                if (!p(i, k).is_zero()) next[k] += row[i] * p(i, k);
        }
        row = std::move(next);
        for (std::size_t j = 0; j < n; ++j) a(r, j) = row[j];
    }
    return a;
}

Mat output_matrix(const HessMatrix& p, std::size_t n) {
    // Row n of O(P) needs P on rows 0..n-1 and columns 0..n.
    return output_matrix(p.truncate(n, n + 1), n);
}

Mat production_of(const Mat& l) {
    std::size_t n = l.rows();
    if (n == 0 || l.cols() != n) throw std::invalid_argument("production_of needs a nonempty square block");
    for (std::size_t i = 0; i < n; ++i)
        if (l(i, i) != Poly(1L)) throw std::domain_error("matrix is not unit-lower-triangular");
    // L P = Delta L, solved row by row.
    std::size_t m = n - 1;
    Mat p(m, m);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t k = 0; k < m; ++k) {
            Poly acc = l(r + 1, k);
            for (std::size_t i = 0; i < r; ++i)
                if (!l(r, i).is_zero() && !p(i, k).is_zero()) acc -= l(r, i) * p(i, k);
            p(r, k) = std::move(acc);
        }
    return p;
}

Mat conjugate_by_binomial(const HessMatrix& p, Var xi, std::size_t n) {
    std::size_t s = n + 2;
    Poly x(xi);
    Mat r = binomial_matrix(-x, s) * p.truncate(s) * binomial_matrix(x, s);
    return r.block(n);
}

// ---------------------------------------------------------------- determinants

Poly det_laplace(const Mat& m) {
    std::size_t n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("determinant of a non-square matrix");
    if (n == 0) return Poly(1L);
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    Poly acc;
    std::vector<std::size_t> rows;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) continue;
        std::vector<std::size_t> cols;
        for (std::size_t c = 0; c < n; ++c)
            if (c != j) cols.push_back(c);
        Poly term = m(0, j) * det_laplace(m.sub(rows, cols));
        if (j % 2)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

Poly det_bareiss(const Mat& m0) {
    std::size_t n = m0.rows();
    if (m0.cols() != n) throw std::invalid_argument("determinant of a non-square matrix");
    if (n == 0) return Poly(1L);
    Mat m = m0;
    Poly prev(1L);
    bool neg = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && m(piv, k).is_zero()) ++piv;
            if (piv == n) return Poly();
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
            neg = !neg;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                m(i, j) = prev == Poly(1L) ? std::move(num) : num.divide_exact(prev);
            }
            m(i, k) = Poly();
        }
        prev = m(k, k);
    }
    return neg ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

Poly det_exact(const Mat& m) { return m.rows() <= 4 ? det_laplace(m) : det_bareiss(m); }

mpz_class det_integer(std::vector<std::vector<mpz_class>> m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    mpz_class prev = 1;
    bool neg = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            neg = !neg;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return neg ? mpz_class(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

// ---------------------------------------------------------------- total positivity

std::vector<std::vector<std::size_t>> colex_subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    for (;;) {
        out.push_back(c);
        std::size_t i = 0;
        while (i < k && c[i] + 1 == (i + 1 < k ? c[i + 1] : n)) ++i;
        if (i == k) break;
        ++c[i];
        for (std::size_t j = 0; j < i; ++j) c[j] = j;
    }
    return out;
}

nlohmann::json TpReport::to_json() const {
    nlohmann::json j = {{"ok", ok}, {"order", order}, {"minors_checked", minors_checked}};
    if (ok) {
        j["witness"] = nullptr;
    } else {
        j["witness"] = {{"rows", rows}, {"cols", cols}, {"minor", minor.to_json()}, {"minor_text", minor.str()}};
        if (!assignment.empty()) {
            nlohmann::json a = nlohmann::json::object();
            for (auto& [v, x] : assignment) a[v.name()] = x;
            j["witness"]["assignment"] = a;
        }
    }
    if (samples) j["samples"] = samples;
    return j;
}

TpReport tp_check_symbolic(const Mat& m, int r) {
    TpReport rep;
    rep.order = r;
    for (int s = 1; s <= r; ++s) {
        auto rs = colex_subsets(m.rows(), static_cast<std::size_t>(s));
        auto cs = colex_subsets(m.cols(), static_cast<std::size_t>(s));
        for (auto& ri : rs)
            for (auto& ci : cs) {
                Poly d = det_exact(m.sub(ri, ci));
                ++rep.minors_checked;
                if (!d.nonneg()) {
                    rep.ok = false;
                    rep.rows = ri;
                    rep.cols = ci;
                    rep.minor = d;
                    return rep;
                }
            }
    }
    return rep;
}

TpReport tp_check_sampled(const Mat& m, int r, std::uint64_t seed, int samples) {
    TpReport rep;
    rep.order = r;
    std::vector<Var> vars;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            for (Var v : m(i, j).variables()) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());

    std::vector<std::vector<std::vector<std::size_t>>> rsets, csets;
    for (int s = 1; s <= r; ++s) {
        rsets.push_back(colex_subsets(m.rows(), static_cast<std::size_t>(s)));
        csets.push_back(colex_subsets(m.cols(), static_cast<std::size_t>(s)));
    }
    Xorshift64Star rng(seed);
    for (int t = 0; t < samples; ++t) {
        std::map<Var, mpz_class> point;
        std::map<Var, long> shown;
        for (Var v : vars) {
            long x = static_cast<long>(rng.below(4));
            point[v] = x;
            shown[v] = x;
        }
        std::vector<std::vector<mpz_class>> num(m.rows(), std::vector<mpz_class>(m.cols()));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) num[i][j] = m(i, j).evaluate(point);
        ++rep.samples;
        for (int s = 1; s <= r; ++s)
            for (auto& ri : rsets[s - 1])
                for (auto& ci : csets[s - 1]) {
                    std::vector<std::vector<mpz_class>> sub(ri.size(), std::vector<mpz_class>(ci.size()));
                    for (std::size_t a = 0; a < ri.size(); ++a)
                        for (std::size_t b = 0; b < ci.size(); ++b) sub[a][b] = num[ri[a]][ci[b]];
                    mpz_class d = det_integer(std::move(sub));
                    ++rep.minors_checked;
                    if (d < 0) {
                        rep.ok = false;
                        rep.rows = ri;
                        rep.cols = ci;
                        rep.minor = Poly(d);
                        rep.assignment = shown;
                        return rep;
                    }
                }
    }
    return rep;
}

bool tridiagonal_tp_criterion(const Mat& m) {
    std::size_t n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("criterion needs a square matrix");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t d = i > j ? i - j : j - i;
            if (d > 1 && !m(i, j).is_zero()) throw std::invalid_argument("matrix is not tridiagonal");
            if (d == 1 && !m(i, j).nonneg()) return false;
        }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            std::vector<std::size_t> idx;
            for (std::size_t i = a; i <= b; ++i) idx.push_back(i);
            if (!det_exact(m.sub(idx, idx)).nonneg()) return false;
        }
    return true;
}

// ---------------------------------------------------------------- EAZ and Riordan

HessMatrix eaz_matrix(const std::vector<Poly>& a, const std::vector<Poly>& z) {
    auto at = [](const std::vector<Poly>& v, long i) { return i >= 0 && i < static_cast<long>(v.size()) ? v[i] : Poly(); };
    std::size_t band = 0;
    if (!z.empty()) band = std::max(band, z.size() - 1);
    if (a.size() >= 2) band = std::max(band, a.size() - 2);
    return HessMatrix(
        [a, z, at](std::size_t n, std::size_t k) {
            if (k == n + 1) return at(a, 0);
            long d = static_cast<long>(n) - static_cast<long>(k);
            mpz_class ff = 1;
            for (std::size_t i = k + 1; i <= n; ++i) ff *= static_cast<unsigned long>(i);
            Poly inner = at(z, d) + at(a, d + 1).scaled(mpz_class(static_cast<unsigned long>(k)));
            return inner.scaled(ff);
        },
        band);
}

bool bx_conjugate_eaz_identity_check(const std::vector<Poly>& a, const std::vector<Poly>& z, Var x, std::size_t n) {
    std::vector<Poly> zx(std::max(a.size(), z.size()));
    for (std::size_t i = 0; i < zx.size(); ++i) {
        if (i < z.size()) zx[i] += z[i];
        if (i < a.size()) zx[i] += Poly(x) * a[i];
    }
    return conjugate_by_binomial(eaz_matrix(a, z), x, n) == eaz_matrix(a, zx).truncate(n);
}

std::vector<std::vector<QPoly>> riordan_matrix_q(const Series& f, const Series& g, std::size_t n) {
    if (!g[0].is_zero()) throw std::domain_error("Riordan G must vanish at t=0");
    int order = static_cast<int>(n) - 1;
    if (order < 0) return {};
    Series fo = f.truncated(order), go = g.truncated(order);
    std::vector<std::vector<QPoly>> out(n, std::vector<QPoly>(n));
    Series col = fo;  // F G^k
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t r = k; r < n; ++r) {
            mpq_class scale(factorial(static_cast<unsigned>(r)), factorial(static_cast<unsigned>(k)));
            scale.canonicalize();
            out[r][k] = col[static_cast<int>(r)].scaled(scale);
        }
        col = col * go;
    }
    return out;
}

Mat riordan_matrix(const Series& f, const Series& g, std::size_t n) {
    auto q = riordan_matrix_q(f, g, n);
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!is_integral(q[i][j]))
                throw std::domain_error("Riordan entry (" + std::to_string(i) + "," + std::to_string(j) +
                                        ") is not an integer polynomial: " + q[i][j].str());
            m(i, j) = to_z(q[i][j]);
        }
    return m;
}

}  // namespace lagtp
