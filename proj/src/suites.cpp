#include "lagtp/suites.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "lagtp/banded.hpp"
#include "lagtp/digraphs.hpp"
#include "lagtp/laguerre.hpp"
#include "lagtp/quadtp.hpp"
#include "lagtp/rng.hpp"
#include "lagtp/srpaths.hpp"

namespace lagtp {

namespace {

struct Outcome {
    bool ok;
    std::string detail;
};

struct Check {
    std::string name;
    std::function<Outcome(const SuiteOptions&)> run;
};

Outcome pass(std::string d = {}) { return {true, std::move(d)}; }
Outcome expect(bool ok, std::string what) { return {ok, ok ? std::string() : std::move(what)}; }

std::size_t size_for(const SuiteOptions& o, std::size_t def) {
    return o.max_n > 0 ? std::min(def, static_cast<std::size_t>(o.max_n)) : def;
}

Outcome tp_outcome(const TpReport& r) { return {r.ok, r.ok ? std::string() : r.to_json().dump()}; }

// Pairs (A, Z) with production_of(R[F,G]) = EAZ(A, Z).
std::pair<std::vector<Poly>, std::vector<Poly>> az_of(const Series& f, const Series& g) {
    Series gbar = series_revert(g);
    Series a = series_compose(g.derivative(), gbar);
    Series logd = f.derivative() * series_reciprocal(f.truncated(f.order() - 1));
    Series z = series_compose(logd, gbar.truncated(logd.order()));
    std::vector<Poly> av, zv;
    for (int i = 0; i <= a.order(); ++i) av.push_back(to_z(a[i]));
    for (int i = 0; i <= z.order(); ++i) zv.push_back(to_z(z[i]));
    return {av, zv};
}

std::map<Var, Poly> tp_substitution() {
    // y_fp = y_p, y_da = y_p, y_dd = y_v + w
    return {{Var("y_fp"), pv("y_p")}, {Var("y_da"), pv("y_p")}, {Var("y_dd"), px("y_v+w")}};
}

std::vector<Check> univariate_checks() {
    LaguerreParams p = LaguerreParams::symbolic();
    Poly x = pv("x");
    VertexWeights w = VertexWeights::symbolic();
    return {
        {"pcirc_output_is_coefficient_matrix",
         [=](const SuiteOptions& o) {
             std::size_t n = size_for(o, 9);
             return expect(output_matrix(prodmat(p, ProdVariant::Pcirc, w, Poly()), n) == coeff_matrix_uni(p, n),
                           "O(Pcirc) differs from the coefficient matrix");
         }},
        {"p_output_is_binomial_rowgen",
         [=](const SuiteOptions& o) {
             std::size_t n = size_for(o, 8);
             Mat out = output_matrix(prodmat(p, ProdVariant::P, w, x), n);
             if (out != binomial_rowgen_matrix(coeff_matrix_uni(p, n), x, n)) return Outcome{false, "O(P) != L B_x"};
             for (std::size_t r = 0; r < n; ++r)
                 if (out(r, 0) != monic_laguerre(static_cast<int>(r), p, x))
                     return Outcome{false, "column 0 differs at row " + std::to_string(r)};
             return expect(binomial_rowgen_identity_check(p, x, n), "binomial row-generating identity");
         }},
        {"p_is_binomial_conjugate_of_pcirc",
         [=](const SuiteOptions& o) {
             std::size_t n = size_for(o, 7);
             return expect(conjugate_by_binomial(prodmat(p, ProdVariant::Pcirc, w, Poly()), Var("x"), n) ==
                               prodmat(p, ProdVariant::P, w, x).truncate(n),
                           "B_x^{-1} Pcirc B_x != P");
         }},
        {"factorization_pcirc_lu",
         [=](const SuiteOptions& o) {
             return expect(factorization_check(Factorization::PcircLU, p, size_for(o, 8)), "Pcirc != L U");
         }},
        {"factorization_p",
         [=](const SuiteOptions& o) {
             return expect(factorization_check(Factorization::PShiftedLU, p, size_for(o, 8)), "P != L(L U_x + lambda I)");
         }},
        {"unsigned_self_inverse",
         [=](const SuiteOptions& o) {
             return expect(unsigned_self_inverse_check(p, size_for(o, 8)), "S L^{-1} S != L");
         }},
        {"coefficient_matrix_is_stieltjes_matrix",
         [=](const SuiteOptions& o) {
             std::size_t n = size_for(o, 8);
             Poly a = p.alpha;
             SRCoeffs c{1, [a](int i) { return i % 2 ? Poly(static_cast<long>((i + 1) / 2)) + a
                                                      : Poly(static_cast<long>(i / 2)); }, {}};
             return expect(sr_matrix(c, 0, n) == coeff_matrix_uni(p, n), "S-matrix differs");
         }},
        {"direct_route_row_scaling",
         [=](const SuiteOptions& o) {
             std::size_t n = size_for(o, 8);
             LaguerreParams lp = LaguerreParams::lambda_form();
             return expect(coeff_matrix_uni_by_row_scaling(pv("lambda"), n) == coeff_matrix_uni(lp, n),
                           "row-scaled binomial matrix differs");
         }},
        {"egf_matches_laguerre",
         [=](const SuiteOptions& o) {
             int order = static_cast<int>(size_for(o, 8));
             // (1-t)^{-lambda} exp(x t/(1-t))
             Series g = Series::t(order) * series_reciprocal(Series::constant(QPoly(1L), order) - Series::t(order));
             Series f = series_pow_sym(series_reciprocal(Series::constant(QPoly(1L), order) - Series::t(order)),
                                       p.lambda(), order);
             Series egf = f * series_exp(g.scaled(to_q(x)));
             for (int n = 0; n <= order; ++n)
                 if (to_z(egf.egf(n)) != monic_laguerre(n, p, x))
                     return Outcome{false, "mismatch at n = " + std::to_string(n)};
             return pass();
         }},
        {"pcirc_tp3",
         [=](const SuiteOptions& o) {
             LaguerreParams lp = LaguerreParams::lambda_form();
             return tp_outcome(
                 tp_check_symbolic(prodmat(lp, ProdVariant::Pcirc, w, Poly()).truncate(size_for(o, 6)), 3));
         }},
        {"hankel_laguerre_tp3",
         [=](const SuiteOptions& o) {
             std::size_t n = size_for(o, 4);
             LaguerreParams lp = LaguerreParams::lambda_form();
             std::vector<Poly> seq;
             for (std::size_t i = 0; i + 1 < 2 * n; ++i) seq.push_back(monic_laguerre(static_cast<int>(i), lp, x));
             return tp_outcome(tp_check_symbolic(hankel_matrix(seq, n), 3));
         }},
    };
}

std::vector<Check> multivariate_checks() {
    LaguerreParams p = LaguerreParams::symbolic();
    Poly x = pv("x");
    VertexWeights w = VertexWeights::symbolic();
    VertexWeights split = VertexWeights::symbolic_split();
    EdgeWeights e = EdgeWeights::symbolic();
    return {
        {"first_mv_egf_matches_digraphs",
         [=](const SuiteOptions& o) {
             std::size_t n = size_for(o, 6);
             return expect(coeff_matrix_first_mv(p, e, n) == coeff_matrix_first_mv_egf(p, e, n),
                           "bivariate series and digraph sum differ");
         }},
        {"second_mv_riordan_matches_digraphs",
         [=](const SuiteOptions& o) {
             std::size_t n = size_for(o, 6);
             for (bool flat : {false, true})
                 if (coeff_matrix_second_mv(p, split, n, flat) != coeff_matrix_second_mv_oracle(p, split, n, flat))
                     return Outcome{false, flat ? "flat matrices differ" : "matrices differ"};
             return pass();
         }},
        {"pcircflat_output_is_flat_matrix",
         [=](const SuiteOptions& o) {
             std::size_t n = size_for(o, 7);
             return expect(output_matrix(prodmat(p, ProdVariant::PcircFlat, w, Poly()), n) ==
                               coeff_matrix_second_mv(p, w, n, true),
                           "O(PcircFlat) differs");
         }},
        {"pcircy_output_is_second_matrix",
         [=](const SuiteOptions& o) {
             std::size_t n = size_for(o, 7);
             return expect(output_matrix(prodmat(p, ProdVariant::PcircY, w, Poly()), n) ==
                               coeff_matrix_second_mv(p, w, n, false),
                           "O(PcircY) differs");
         }},
        {"pflat_is_binomial_conjugate",
         [=](const SuiteOptions& o) {
             std::size_t n = size_for(o, 6);
             bool flat = conjugate_by_binomial(prodmat(p, ProdVariant::PcircFlat, w, Poly()), Var("x"), n) ==
                         prodmat(p, ProdVariant::PFlat, w, x).truncate(n);
             bool y = conjugate_by_binomial(prodmat(p, ProdVariant::PcircY, w, Poly()), Var("x"), n) ==
                      prodmat(p, ProdVariant::PY, w, x).truncate(n);
             return expect(flat && y, flat ? "PY mismatch" : "PFlat mismatch");
         }},
        {"specializations_to_first_mv",
         [=](const SuiteOptions& o) {
             std::size_t n = size_for(o, 6);
             Mat first = coeff_matrix_first_mv(p, e, n);
             for (bool final_form : {true, false}) {
                 VertexWeights s = final_form ? first_from_second_final(e) : first_from_second_initial(e);
                 Mat nonflat = coeff_matrix_second_mv(p, s, n, false), flat = coeff_matrix_second_mv(p, s, n, true);
                 Poly scale = final_form ? e.v_m : e.v_p, sk(1L);
                 for (std::size_t k = 0; k < n; ++k, sk = sk * scale)
                     for (std::size_t r = k; r < n; ++r)
                         if (nonflat(r, k) != first(r, k) * sk || flat(r, k) != first(r, k))
                             return Outcome{false, std::string(final_form ? "final" : "initial") +
                                                       " specialization fails at (" + std::to_string(r) + "," +
                                                       std::to_string(k) + ")"};
             }
             return pass();
         }},
        {"homogeneity_and_peak_factor",
         [=](const SuiteOptions& o) {
             std::size_t n = size_for(o, 6);
             // Scaling all five y-variables by s detects the total degree.
             Poly s = pv("s");
             std::map<Var, Poly> env;
             for (const char* v : {"y_p", "y_v", "y_da", "y_dd", "y_fp"}) env[Var(v)] = s * pv(v);
             Mat nf = coeff_matrix_second_mv(p, w, n, false), fl = coeff_matrix_second_mv(p, w, n, true);
             for (std::size_t r = 0; r < n; ++r)
                 for (std::size_t k = 0; k <= r; ++k) {
                     if (nf(r, k).substitute(env) != nf(r, k) * s.pow(static_cast<unsigned>(r)))
                         return Outcome{false, "non-flat entry not homogeneous"};
                     if (fl(r, k).substitute(env) != fl(r, k) * s.pow(static_cast<unsigned>(r - k)))
                         return Outcome{false, "flat entry not homogeneous"};
                     if (nf(r, k) != fl(r, k) * w.y_p.pow(static_cast<unsigned>(k)))
                         return Outcome{false, "y_p^k factor"};
                 }
             return pass();
         }},
        {"pcircflat_split",
         [=](const SuiteOptions& o) {
             return expect(factorization_check(Factorization::PcircFlatSplit, p, size_for(o, 8)), "PcircFlat != Q + D");
         }},
        {"pcircflat_tridiagonal_criterion",
         [=](const SuiteOptions& o) {
             LaguerreParams lp = LaguerreParams::lambda_form();
             Mat m = prodmat(lp, ProdVariant::PcircFlat, w.substitute(tp_substitution()), Poly())
                         .truncate(size_for(o, 6));
             return expect(tridiagonal_tp_criterion(m), "criterion fails");
         }},
        {"permutation_egfs",
         [=](const SuiteOptions& o) {
             int order = static_cast<int>(size_for(o, 6));
             Poly lam = p.lambda();
             Series gy = solve_riccati(w.y_p, w.y_da + w.y_dd, w.y_v, order);
             Series cyc = solve_logderiv({w.y_fp, w.y_v}, gy, lam, order);
             Series lin = solve_riccati(split.z_p, split.z_da + split.z_dd, split.z_v, order);
             for (int n = 0; n <= order; ++n) {
                 if (to_z(cyc.egf(n)) != permutation_oracle(n, PermKind::cyclic, lam, w))
                     return Outcome{false, "cyclic mismatch at n = " + std::to_string(n)};
                 if (n > 0 && to_z(lin.egf(n)) != permutation_oracle(n, PermKind::linear00, lam, split))
                     return Outcome{false, "linear mismatch at n = " + std::to_string(n)};
             }
             return pass();
         }},
    };
}

std::vector<Check> riordan_checks() {
    LaguerreParams p = LaguerreParams::symbolic();
    VertexWeights w = VertexWeights::symbolic();
    return {
        {"eaz_binomial_conjugation",
         [](const SuiteOptions& o) {
             std::vector<Poly> a, z;
             for (int i = 0; i < 6; ++i) {
                 a.push_back(pv("a_" + std::to_string(i)));
                 z.push_back(pv("z_" + std::to_string(i)));
             }
             return expect(bx_conjugate_eaz_identity_check(a, z, Var("x"), size_for(o, 6)),
                           "B_x^{-1} EAZ(a,z) B_x != EAZ(a, z + x a)");
         }},
        {"laguerre_riordan_round_trip",
         [=](const SuiteOptions& o) {
             std::size_t n = size_for(o, 7);
             int order = static_cast<int>(n);
             Series one_minus_t = Series::constant(QPoly(1L), order) - Series::t(order);
             Series f = series_pow_sym(series_reciprocal(one_minus_t), p.lambda(), order);
             Series g = Series::t(order) * series_reciprocal(one_minus_t);
             auto [a, z] = az_of(f, g);
             Mat lag = riordan_matrix(f, g, n + 1);
             if (lag.block(n) != coeff_matrix_uni(p, n)) return Outcome{false, "R[F,G] != coefficient matrix"};
             return expect(production_of(lag) == eaz_matrix(a, z).truncate(n), "production matrix != EAZ(A,Z)");
         }},
        {"second_mv_eaz_forms",
         [=](const SuiteOptions& o) {
             std::size_t n = size_for(o, 6);
             Poly lam = p.lambda(), d = w.y_da + w.y_dd;
             HessMatrix nonflat = eaz_matrix({w.y_p, d, w.y_v}, {lam * w.y_fp, lam * w.y_v});
             HessMatrix flat = eaz_matrix({Poly(1L), d, w.y_p * w.y_v}, {lam * w.y_fp, lam * w.y_p * w.y_v});
             // The non-flat diagonal is y_p^k, so compare outputs there.
             bool a = output_matrix(nonflat, n) == coeff_matrix_second_mv(p, w, n, false);
             bool b = production_of(coeff_matrix_second_mv(p, w, n + 1, true)) == flat.truncate(n);
             bool c = nonflat.truncate(n) == prodmat(p, ProdVariant::PcircY, w, Poly()).truncate(n) &&
                      flat.truncate(n) == prodmat(p, ProdVariant::PcircFlat, w, Poly()).truncate(n);
             return expect(a && b && c, "EAZ form mismatch");
         }},
        {"series_routes_agree",
         [=](const SuiteOptions& o) {
             int order = static_cast<int>(size_for(o, 7));
             Series gy = solve_riccati(w.y_p, w.y_da + w.y_dd, w.y_v, order);
             Series direct = solve_logderiv({w.y_fp, w.y_v}, gy, p.lambda(), order);
             return expect(direct == second_mv_f(p, w, order), "F1^lambda differs from the direct solution");
         }},
    };
}

std::vector<Check> srpaths_checks() {
    return {
        {"recurrence_matches_paths",
         [](const SuiteOptions& o) {
             int cap = static_cast<int>(size_for(o, 18));
             for (int m = 1; m <= 3; ++m) {
                 SRCoeffs c = SRCoeffs::symbolic(m);
                 for (int j = 0; j <= m + 1; ++j)
                     for (int n = 0; (m + 1) * n + j <= cap; ++n)
                         for (int k = 0; k <= n; ++k)
                             if (sr_poly(c, j, n, k) != sr_path_oracle(c, j, n, k))
                                 return Outcome{false, "m=" + std::to_string(m) + " j=" + std::to_string(j) +
                                                           " n=" + std::to_string(n) + " k=" + std::to_string(k)};
             }
             return pass();
         }},
        {"production_matrix_round_trip",
         [](const SuiteOptions& o) {
             std::size_t n = size_for(o, 6);
             for (int m = 1; m <= 2; ++m) {
                 SRCoeffs c = SRCoeffs::symbolic(m);
                 for (int j = 0; j <= m; ++j)
                     if (output_matrix(prodmat_smj(c, j), n) != sr_matrix(c, j, n))
                         return Outcome{false, "m=" + std::to_string(m) + " j=" + std::to_string(j)};
             }
             return pass();
         }},
        {"m2_explicit_entries",
         [](const SuiteOptions& o) {
             SRCoeffs c = SRCoeffs::symbolic(2);
             for (int j = 0; j <= 2; ++j)
                 if (prodmat_smj(c, j).truncate(size_for(o, 7)) != prodmat_m2_explicit(c, j).truncate(size_for(o, 7)))
                     return Outcome{false, "j=" + std::to_string(j)};
             return pass();
         }},
        {"type_shift_identity",
         [](const SuiteOptions& o) {
             std::size_t n = size_for(o, 6);
             for (int m = 1; m <= 3; ++m) {
                 SRCoeffs c = SRCoeffs::symbolic(m);
                 for (int j = 0; j < m; ++j)
                     if (prodmat_smj(c, j).truncate(n) != prodmat_smj(c.shifted(1), j + 1).truncate(n))
                         return Outcome{false, "m=" + std::to_string(m) + " j=" + std::to_string(j)};
             }
             return pass();
         }},
        {"delta_submatrix_shift",
         [](const SuiteOptions& o) {
             std::size_t n = size_for(o, 6);
             SRCoeffs c = SRCoeffs::symbolic(2);
             for (int j = 0; j <= 2; ++j) {
                 Mat big = sr_matrix(c, j, n + 1), shifted = sr_matrix(c, j + 3, n);
                 for (std::size_t r = 0; r < n; ++r)
                     for (std::size_t k = 0; k < n; ++k)
                         if (shifted(r, k) != big(r + 1, k + 1)) return Outcome{false, "j=" + std::to_string(j)};
             }
             return pass();
         }},
        {"type_recurrences",
         [](const SuiteOptions& o) {
             int n = static_cast<int>(size_for(o, 6));
             for (int m = 1; m <= 2; ++m) {
                 SRCoeffs c = SRCoeffs::symbolic(m);
                 for (int j = 0; j <= m + 1; ++j)
                     for (int r = 0; r < n; ++r)
                         for (int k = 0; k <= r; ++k) {
                             Poly lhs = sr_poly(c, j + 1, r, k);
                             Poly rhs = sr_poly(c, j, r, k) + c.at((m + 1) * (k + 1) + j) * sr_poly(c, j, r, k + 1);
                             if (lhs != rhs) return Outcome{false, "first-step recurrence, m=" + std::to_string(m)};
                             Poly next = sr_poly(c, j, r + 1, k);
                             Poly rhs2 = sr_poly(c, j + m, r, k - 1) + c.at((m + 1) * k + j + m) * sr_poly(c, j + m, r, k);
                             if (next != rhs2) return Outcome{false, "last-step recurrence, m=" + std::to_string(m)};
                         }
             }
             return pass();
         }},
        {"specialization_identities",
         [](const SuiteOptions& o) {
             int n = static_cast<int>(size_for(o, 5));
             const int m = 2;
             SRCoeffs c = SRCoeffs::symbolic(m);
             Poly am = c.at(m);
             for (int ell = 0; ell <= m; ++ell) {
                 std::map<Var, Poly> env;
                 for (int i = m; i < m + ell; ++i) env[Var(sr_var_name(i))] = Poly();
                 for (int i = m + ell; i <= (m + 1) * (n + 1) + m; ++i)
                     env[Var(sr_var_name(i))] = pv(sr_var_name(i - ell));
                 for (int r = 0; r <= n; ++r) {
                     Poly want = sr_poly(c, 0, r + 1, 0).divide_exact(am).substitute(env);
                     if (sr_poly(c, m - ell, r, 0) != want) return Outcome{false, "ell=" + std::to_string(ell)};
                 }
             }
             return pass();
         }},
        {"continued_fraction_series",
         [](const SuiteOptions& o) {
             int order = static_cast<int>(size_for(o, 5));
             for (int m = 1; m <= 2; ++m) {
                 SRCoeffs c = SRCoeffs::symbolic(m);
                 for (int j = 0; j <= m; ++j) {
                     Series tail = sfrac_tail_series(c, j, order), alt = sfrac_alternate_series(c, j, order);
                     for (int n = 0; n <= order; ++n) {
                         Poly want = sr_poly(c, j, n, 0);
                         if (to_z(tail[n]) != want || to_z(alt[n]) != want)
                             return Outcome{false, "m=" + std::to_string(m) + " j=" + std::to_string(j)};
                     }
                 }
             }
             return pass();
         }},
        {"production_matrix_tp3",
         [](const SuiteOptions& o) {
             SRCoeffs c = SRCoeffs::symbolic(2);
             for (int j = 0; j <= 2; ++j) {
                 TpReport r = tp_check_symbolic(prodmat_smj(c, j).truncate(size_for(o, 6)), 3);
                 if (!r.ok) return tp_outcome(r);
             }
             return pass();
         }},
        {"hankel_tp3",
         [](const SuiteOptions& o) {
             std::size_t n = size_for(o, 4);
             SRCoeffs c = SRCoeffs::symbolic(2);
             for (int j = 0; j <= 2; ++j) {
                 std::vector<Poly> seq;
                 for (std::size_t i = 0; i + 1 < 2 * n; ++i) seq.push_back(sr_poly(c, j, static_cast<int>(i), 0));
                 TpReport r = tp_check_symbolic(hankel_matrix(seq, n), 3);
                 if (!r.ok) return tp_outcome(r);
             }
             return pass();
         }},
        {"hankel_fails_beyond_m",
         [](const SuiteOptions&) {
             SRCoeffs c = SRCoeffs::symbolic(2);
             std::vector<Poly> seq;
             for (int i = 0; i < 5; ++i) seq.push_back(sr_poly(c, 3, i, 0));
             TpReport r = tp_check_symbolic(hankel_matrix(seq, 3), 2);
             return Outcome{!r.ok, r.ok ? "no negative minor found" : "witness " + r.minor.str()};
         }},
        {"kappa_families",
         [](const SuiteOptions& o) {
             for (const char* id : {"j0am1", "j1am1", "j1a0", "j2am1", "j2a0", "j2a1"})
                 if (!verify_kappa_cell(KappaFamily::parse(id), size_for(o, 6))) return Outcome{false, id};
             return pass();
         }},
    };
}

std::vector<Check> quadtp_checks() {
    return {
        {"general_closed_form_matches_product",
         [](const SuiteOptions& o) {
             std::size_t n = size_for(o, 7);
             QuadFactorParams q = QuadFactorParams::symbolic();
             if (build_general_quad(q).truncate(n) != general_quad_product(q, n)) return Outcome{false, "P"};
             Mat qm = general_quad_q(q).truncate(n), l2 = general_quad_l2(q, n);
             for (std::size_t r = 0; r < n; ++r)
                 for (std::size_t k = 0; k < n; ++k)
                     if (build_general_quad(q).entry(r, k) != qm(r, k) + q.at('h', static_cast<long>(r)) * l2(r, k))
                         return Outcome{false, "p_n != q_n + h_n l_n"};
             return pass();
         }},
        {"general_specializes_to_pflat",
         [](const SuiteOptions& o) {
             std::size_t n = size_for(o, 8);
             VertexWeights w = VertexWeights::symbolic();
             w.y_fp = w.y_p;
             LaguerreParams lp = LaguerreParams::lambda_form();
             Poly x = pv("x");
             QuadFactorParams q = QuadFactorParams::laguerre_flat(w, lp.lambda(), x);
             return expect(build_general_quad(q).truncate(n) == prodmat(lp, ProdVariant::PFlat, w, x).truncate(n),
                           "specialization differs from PFlat");
         }},
        {"general_tp",
         [](const SuiteOptions& o) {
             QuadFactorParams q = QuadFactorParams::symbolic();
             TpReport r = tp_check_symbolic(build_general_quad(q).truncate(size_for(o, 6)), 3);
             if (!r.ok) return tp_outcome(r);
             return tp_outcome(tp_check_sampled(build_general_quad(q).truncate(size_for(o, 7)), 4, o.seed, o.samples));
         }},
        {"variant_closed_form_matches_product",
         [](const SuiteOptions& o) {
             std::size_t n = size_for(o, 7);
             QuadVariantParams q = QuadVariantParams::symbolic();
             if (!variant_commutation_check(q, 6)) return Outcome{false, "L1 L2 != L2 L1"};
             if (build_variant_quad(q).truncate(n) != variant_quad_product(q, n)) return Outcome{false, "P"};
             QuadVariantParams q0 = q;
             q0.f = constant_seq(Poly());
             return expect(variant_quad_q(q).truncate(n) == variant_quad_product(q0, n), "Q != L1(L2 U + D1)");
         }},
        {"variant_tp",
         [](const SuiteOptions& o) {
             QuadVariantParams q = QuadVariantParams::symbolic();
             TpReport r = tp_check_symbolic(build_variant_quad(q).truncate(size_for(o, 6)), 3);
             if (!r.ok) return tp_outcome(r);
             return tp_outcome(tp_check_sampled(build_variant_quad(q).truncate(size_for(o, 7)), 4, o.seed, o.samples));
         }},
    };
}

DiagonalPolySpec pcirc_spec() {
    DiagonalPolySpec s;
    s.r = 2;
    s.f = {Poly(1L), px("2*n+1+a"), px("n+a")};
    return s;
}

std::vector<Check> banded_checks() {
    return {
        {"pcirc_conjugate",
         [](const SuiteOptions& o) {
             std::size_t n = size_for(o, 7);
             DiagonalPolySpec s = pcirc_spec();
             if (!check_banded_criterion(s)) return Outcome{false, "criterion rejects Pcirc"};
             if (conjugate_and_measure_band(s, n) != 2) return Outcome{false, "bandwidth is not 2"};
             Mat c = conjugate_by_binomial(s.matrix(), Var("xi"), n);
             return expect(c == prodmat(LaguerreParams::symbolic(), ProdVariant::P, VertexWeights::symbolic(),
                                        pv("xi"))
                                    .truncate(n),
                           "conjugate differs from P");
         }},
        {"criterion_matches_bandwidth",
         [](const SuiteOptions& o) {
             Xorshift64Star rng(o.seed);
             std::size_t n = size_for(o, 9);
             for (int i = 0; i < 20; ++i) {
                 DiagonalPolySpec s = random_diagonal_spec(rng);
                 bool crit = check_banded_criterion(s);
                 bool measured = conjugate_and_measure_band(s, n) <= s.r;
                 bool next_vanishes = conjugate_subdiagonal_vanishes(s, n, s.r + 1);
                 if (crit != measured || crit != next_vanishes)
                     return Outcome{false, "spec " + std::to_string(i) + ": " + s.to_json().dump()};
             }
             return pass();
         }},
    };
}

std::vector<Check> checks_for(const std::string& suite) {
    if (suite == "univariate") return univariate_checks();
    if (suite == "multivariate") return multivariate_checks();
    if (suite == "riordan") return riordan_checks();
    if (suite == "srpaths") return srpaths_checks();
    if (suite == "quadtp") return quadtp_checks();
    if (suite == "banded") return banded_checks();
    throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace

bool SuiteReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok; });
}

nlohmann::json SuiteReport::to_json(bool with_timing) const {
    nlohmann::json arr = nlohmann::json::array();
    for (const CheckResult& c : checks) {
        nlohmann::json j = {{"suite", c.suite}, {"check", c.name}, {"ok", c.ok}};
        if (!c.detail.empty()) j["detail"] = c.detail;
        if (with_timing) j["ms"] = c.ms;
        arr.push_back(j);
    }
    return {{"ok", ok()}, {"checks", arr}};
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"all",     "univariate", "multivariate", "riordan",
                                                   "srpaths", "quadtp",     "banded"};
    return names;
}

bool is_suite(const std::string& name) {
    const auto& n = suite_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt,
                      const std::function<void(const CheckResult&)>& progress) {
    if (!is_suite(name)) throw std::invalid_argument("unknown suite '" + name + "'");
    std::vector<std::string> order;
    if (name == "all")
        order.assign(suite_names().begin() + 1, suite_names().end());
    else
        order.push_back(name);

    SuiteReport rep;
    for (const std::string& s : order)
        for (const Check& c : checks_for(s)) {
            CheckResult res;
            res.suite = s;
            res.name = c.name;
            auto t0 = std::chrono::steady_clock::now();
            try {
                Outcome out = c.run(opt);
                res.ok = out.ok;
                res.detail = out.detail;
            } catch (const std::exception& e) {
                res.ok = false;
                res.detail = std::string("exception: ") + e.what();
            }
            res.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            if (progress) progress(res);
            rep.checks.push_back(std::move(res));
        }
    return rep;
}

}  // namespace lagtp
