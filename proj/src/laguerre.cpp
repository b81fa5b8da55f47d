#include "lagtp/laguerre.hpp"

#include <functional>
#include <stdexcept>

#include "lagtp/digraphs.hpp"
#include "lagtp/srpaths.hpp"

namespace lagtp {

Poly monic_laguerre(int n, const LaguerreParams& p, const Poly& x) {
    if (n < 0) throw std::invalid_argument("negative degree");
    Poly top = p.alpha + Poly(static_cast<long>(n));
    Poly s, xk(1L);
    for (int k = 0; k <= n; ++k) {
        s += (falling(top, static_cast<unsigned>(n - k)) * xk).scaled(binomial(n, k));
        xk = xk * x;
    }
    return s;
}

Poly reversed_laguerre(int n, const LaguerreParams& p, const Poly& x) {
    if (n < 0) throw std::invalid_argument("negative degree");
    Poly top = p.alpha + Poly(static_cast<long>(n));
    Poly s, xk(1L);
    for (int k = 0; k <= n; ++k) {
        s += (falling(top, static_cast<unsigned>(k)) * xk).scaled(binomial(n, k));
        xk = xk * x;
    }
    return s;
}

Mat coeff_matrix_uni(const LaguerreParams& p, std::size_t n) {
    Mat m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k <= r; ++k)
            m(r, k) = rising(p.lambda() + Poly(static_cast<long>(k)), static_cast<unsigned>(r - k))
                          .scaled(binomial(static_cast<long>(r), static_cast<long>(k)));
    return m;
}

Mat coeff_matrix_uni_by_row_scaling(const Poly& lambda, std::size_t n) {
    // b_{nk} = x_{k+1} ... x_n binom(n,k) with x_i = lambda + i - 1
    Mat m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k <= r; ++k) {
            Poly prod(binomial(static_cast<long>(r), static_cast<long>(k)));
            for (std::size_t i = k + 1; i <= r; ++i) prod = prod * (lambda + Poly(static_cast<long>(i) - 1));
            m(r, k) = prod;
        }
    return m;
}

Mat coeff_matrix_first_mv(const LaguerreParams& p, const EdgeWeights& w, std::size_t n) {
    OracleWeights ow{p.lambda(), w, VertexWeights::symbolic()};
    return oracle_matrix(n, OracleMode::first_mv, ow);
}

VertexWeights first_from_second_final(const EdgeWeights& e) {
    return VertexWeights::of(e.v_m, e.v_p, e.v_p, e.v_m, e.v_0);
}

VertexWeights first_from_second_initial(const EdgeWeights& e) {
    return VertexWeights::of(e.v_p, e.v_m, e.v_p, e.v_m, e.v_0);
}

Series second_mv_f(const LaguerreParams& p, const VertexWeights& w, int order) {
    // Cycles: F1'/F1 = y_fp + y_v Gy with Gy' = y_p + (y_da+y_dd) Gy + y_v Gy^2.
    Series gy = solve_riccati(w.y_p, w.y_da + w.y_dd, w.y_v, order);
    Series f1 = solve_logderiv({w.y_fp, w.y_v}, gy, Poly(1L), order);
    return series_pow_sym(f1, p.lambda(), order);
}

Series second_mv_g(const VertexWeights& w, int order, bool flat) {
    if (flat) return solve_riccati(Poly(1L), w.z_da + w.z_dd, w.z_p * w.z_v, order);
    return solve_riccati(w.z_p, w.z_da + w.z_dd, w.z_v, order);
}

Mat coeff_matrix_first_mv_egf(const LaguerreParams& p, const EdgeWeights& e, std::size_t n) {
    Mat out(n, n);
    if (n == 0) return out;
    int order = static_cast<int>(n) - 1;
    VertexWeights w = first_from_second_final(e);
    Series f = second_mv_f(p, w, order);
    Series g = second_mv_g(w, order, true);
    Var u("u");
    Series bivariate = f * series_exp(g.scaled(QPoly(u)));
    for (std::size_t r = 0; r < n; ++r) {
        QPoly coef = bivariate.egf(static_cast<int>(r));
        for (std::size_t k = 0; k <= r; ++k) {
            QPoly c = coef.coeff_in(u, static_cast<std::uint32_t>(k));
            out(r, k) = to_z(c);
        }
    }
    return out;
}

Mat coeff_matrix_second_mv(const LaguerreParams& p, const VertexWeights& w, std::size_t n, bool flat) {
    if (n == 0) return Mat();
    int order = static_cast<int>(n) - 1;
    return riordan_matrix(second_mv_f(p, w, order), second_mv_g(w, order, flat), n);
}

Mat coeff_matrix_second_mv_oracle(const LaguerreParams& p, const VertexWeights& w, std::size_t n, bool flat) {
    OracleWeights ow{p.lambda(), EdgeWeights::symbolic(), w};
    Mat m = oracle_matrix(n, OracleMode::second_mv_general, ow);
    if (flat) {
        Poly zpk(1L);
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t r = k; r < n; ++r) m(r, k) = m(r, k).divide_exact(zpk);
            zpk = zpk * w.z_p;
        }
    }
    return m;
}

Mat coeff_matrix_second_mv_checked(const LaguerreParams& p, const VertexWeights& w, std::size_t n, bool flat,
                                   std::size_t oracle_rows) {
    Mat m = coeff_matrix_second_mv(p, w, n, flat);
    std::size_t k = std::min(n, oracle_rows);
    if (k > 0 && m.block(k) != coeff_matrix_second_mv_oracle(p, w, k, flat))
        throw std::logic_error("Riordan route and digraph oracle disagree");
    return m;
}

ProdVariant parse_prod_variant(const std::string& name) {
    if (name == "Pcirc") return ProdVariant::Pcirc;
    if (name == "P") return ProdVariant::P;
    if (name == "PcircFlat") return ProdVariant::PcircFlat;
    if (name == "PFlat") return ProdVariant::PFlat;
    if (name == "PcircY") return ProdVariant::PcircY;
    if (name == "PY") return ProdVariant::PY;
    throw std::invalid_argument("unknown production matrix variant '" + name + "'");
}

std::string prod_variant_name(ProdVariant v) {
    switch (v) {
        case ProdVariant::Pcirc: return "Pcirc";
        case ProdVariant::P: return "P";
        case ProdVariant::PcircFlat: return "PcircFlat";
        case ProdVariant::PFlat: return "PFlat";
        case ProdVariant::PcircY: return "PcircY";
        case ProdVariant::PY: return "PY";
    }
    return "?";
}

HessMatrix prodmat(const LaguerreParams& p, ProdVariant which, const VertexWeights& w, const Poly& x) {
    Poly a = p.alpha, lam = p.lambda();
    Poly dsum = w.y_da + w.y_dd, pvw = w.y_p * w.y_v;
    auto nn = [](std::size_t n) { return Poly(static_cast<long>(n)); };
    std::function<Poly(std::size_t, int)> e;  // (row n, offset k-n)
    std::size_t band = 2;
    switch (which) {
        case ProdVariant::Pcirc:
            band = 1;
            e = [a, nn](std::size_t n, int off) {
                Poly N = nn(n);
                if (off == 1) return Poly(1L);
                if (off == 0) return N.scaled(2) + Poly(1L) + a;
                return N * (N + a);
            };
            break;
        case ProdVariant::P:
            e = [a, x, nn](std::size_t n, int off) {
                Poly N = nn(n);
                if (off == 1) return Poly(1L);
                if (off == 0) return N.scaled(2) + Poly(1L) + a + x;
                if (off == -1) return N * (N + a) + (N * x).scaled(2);
                return N * (N - Poly(1L)) * x;
            };
            break;
        case ProdVariant::PcircFlat:
            band = 1;
            e = [a, lam, w, dsum, pvw, nn](std::size_t n, int off) {
                Poly N = nn(n);
                if (off == 1) return Poly(1L);
                if (off == 0) return lam * w.y_fp + N * dsum;
                return N * (N + a) * pvw;
            };
            break;
        case ProdVariant::PFlat:
            e = [a, lam, w, dsum, pvw, x, nn](std::size_t n, int off) {
                Poly N = nn(n);
                if (off == 1) return Poly(1L);
                if (off == 0) return lam * w.y_fp + N * dsum + x;
                if (off == -1) return N * (N + a) * pvw + N * dsum * x;
                return N * (N - Poly(1L)) * pvw * x;
            };
            break;
        case ProdVariant::PcircY:
            band = 1;
            e = [a, lam, w, dsum, nn](std::size_t n, int off) {
                Poly N = nn(n);
                if (off == 1) return w.y_p;
                if (off == 0) return lam * w.y_fp + N * dsum;
                return N * (N + a) * w.y_v;
            };
            break;
        case ProdVariant::PY:
            e = [a, lam, w, dsum, x, nn](std::size_t n, int off) {
                Poly N = nn(n);
                if (off == 1) return w.y_p;
                if (off == 0) return lam * w.y_fp + N * dsum + w.y_p * x;
                if (off == -1) return N * (N + a) * w.y_v + N * dsum * x;
                return N * (N - Poly(1L)) * w.y_v * x;
            };
            break;
    }
    return HessMatrix(
        [e, band](std::size_t n, std::size_t k) {
            long off = static_cast<long>(k) - static_cast<long>(n);
            if (off > 1 || off < -static_cast<long>(band)) return Poly();
            return e(n, static_cast<int>(off));
        },
        band);
}

Factorization parse_factorization(const std::string& name) {
    if (name == "PcircLU") return Factorization::PcircLU;
    if (name == "PShiftedLU") return Factorization::PShiftedLU;
    if (name == "PcircFlatSplit") return Factorization::PcircFlatSplit;
    throw std::invalid_argument("unknown factorization '" + name + "'");
}

namespace {

// Subdiagonal 1, 2, 3, ...
Mat l_count(std::size_t n) {
    std::vector<Poly> s;
    for (std::size_t i = 1; i < n; ++i) s.push_back(Poly(static_cast<long>(i)));
    return lower_bidiagonal(s, n);
}

// Diagonal lambda, lambda+1, ... and superdiagonal 1.
Mat u_lambda(const Poly& lam, std::size_t n) {
    Mat u(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        u(i, i) = lam + Poly(static_cast<long>(i));
        if (i + 1 < n) u(i, i + 1) = Poly(1L);
    }
    return u;
}

}  // namespace

Mat pcircflat_q(const LaguerreParams& p, const VertexWeights& w, std::size_t n) {
    // S-fraction with alpha_{2k-1} = (k+alpha) y_p, alpha_{2k} = k y_v.
    Poly a = p.alpha, yp = w.y_p, yv = w.y_v;
    SRCoeffs c{1,
               [a, yp, yv](int i) {
                   long k = (i + 1) / 2;
                   return i % 2 ? (Poly(k) + a) * yp : yv.scaled(mpz_class(k));
               },
               {}};
    return prodmat_smj(c, 0).truncate(n);
}

Mat pcircflat_d(const LaguerreParams& p, const VertexWeights& w, std::size_t n) {
    Mat d(n, n);
    Poly base = p.lambda() * (w.y_fp - w.y_p), slope = w.y_da + w.y_dd - w.y_p - w.y_v;
    for (std::size_t i = 0; i < n; ++i) d(i, i) = base + slope.scaled(mpz_class(static_cast<unsigned long>(i)));
    return d;
}

bool factorization_check(Factorization which, const LaguerreParams& p, std::size_t n, const VertexWeights& w) {
    Poly lam = p.lambda();
    switch (which) {
        case Factorization::PcircLU: {
            std::size_t s = n + 1;
            Mat lu = (l_count(s) * u_lambda(lam, s)).block(n);
            return lu == prodmat(p, ProdVariant::Pcirc, w, Poly()).truncate(n);
        }
        case Factorization::PShiftedLU: {
            Poly x = pv("x");
            std::size_t s = n + 2;
            Mat l = l_count(s);
            Mat ux = Mat::identity(s).scaled(x);
            for (std::size_t i = 0; i + 1 < s; ++i) ux(i, i + 1) = Poly(1L);
            Mat rhs = (l * (l * ux + Mat::identity(s).scaled(lam))).block(n);
            return rhs == prodmat(p, ProdVariant::P, w, x).truncate(n);
        }
        case Factorization::PcircFlatSplit:
            return pcircflat_q(p, w, n) + pcircflat_d(p, w, n) ==
                   prodmat(p, ProdVariant::PcircFlat, w, Poly()).truncate(n);
    }
    return false;
}

bool unsigned_self_inverse_check(const LaguerreParams& p, std::size_t n) {
    Mat l = coeff_matrix_uni(p, n);
    Mat inv = inverse_unit_lower(l);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if ((i + j) % 2) inv(i, j) = -inv(i, j);
    return inv == l;
}

std::vector<Poly> rowgen_polys(const Mat& m, const Poly& x, bool reversed) {
    std::vector<Poly> out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Poly s;
        for (std::size_t k = 0; k <= r && k < m.cols(); ++k)
            if (!m(r, k).is_zero()) s += m(r, k) * x.pow(static_cast<unsigned>(reversed ? r - k : k));
        out.push_back(s);
    }
    return out;
}

Mat binomial_rowgen_matrix(const Mat& m, const Poly& x, std::size_t n) { return m.block(n) * binomial_matrix(x, n); }

bool binomial_rowgen_identity_check(const LaguerreParams& p, const Poly& x, std::size_t n) {
    Mat lb = binomial_rowgen_matrix(coeff_matrix_uni(p, n), x, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k) {
            Poly want;
            if (k <= r) {
                LaguerreParams shifted{p.alpha + Poly(static_cast<long>(k))};
                want = monic_laguerre(static_cast<int>(r - k), shifted, x)
                           .scaled(binomial(static_cast<long>(r), static_cast<long>(k)));
            }
            if (lb(r, k) != want) return false;
        }
    return true;
}

}  // namespace lagtp
