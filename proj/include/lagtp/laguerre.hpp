#pragma once

#include <string>
#include <vector>

#include "lagtp/matrix.hpp"
#include "lagtp/series.hpp"
#include "lagtp/weights.hpp"

namespace lagtp {

// Laguerre parameter; lambda = 1 + alpha.
struct LaguerreParams {
    Poly alpha;

    Poly lambda() const { return alpha + Poly(1L); }
    static LaguerreParams symbolic() { return {pv("a")}; }
    static LaguerreParams of(long a) { return {Poly(a)}; }
    // alpha = -1 + lambda with lambda the variable "lambda".
    static LaguerreParams lambda_form() { return {px("lambda-1")}; }
};

// sum_k binom(n,k) (n+alpha)^{falling n-k} x^k
Poly monic_laguerre(int n, const LaguerreParams& p, const Poly& x);
// x^n times the above at 1/x
Poly reversed_laguerre(int n, const LaguerreParams& p, const Poly& x);

// binom(n,k) (1+alpha+k)^{rising n-k}
Mat coeff_matrix_uni(const LaguerreParams& p, std::size_t n);
// binom(n,k) (lambda+k)^{rising n-k} assembled by scaling the binomial matrix.
Mat coeff_matrix_uni_by_row_scaling(const Poly& lambda, std::size_t n);

// Digraph sum with edge weights; default cap 9 rows beyond which it throws.
Mat coeff_matrix_first_mv(const LaguerreParams& p, const EdgeWeights& w, std::size_t n);
// Same matrix from the bivariate series F(t) exp(u G(t)), u tracked as a variable.
Mat coeff_matrix_first_mv_egf(const LaguerreParams& p, const EdgeWeights& w, std::size_t n);

// Riordan route R[F1^lambda, G] (or G-flat); the z block of w weights paths.
Mat coeff_matrix_second_mv(const LaguerreParams& p, const VertexWeights& w, std::size_t n, bool flat);
// Digraph route.
Mat coeff_matrix_second_mv_oracle(const LaguerreParams& p, const VertexWeights& w, std::size_t n, bool flat);
// Riordan route, cross-checked against the oracle on rows below oracle_rows.
// Throws std::logic_error on a mismatch.
Mat coeff_matrix_second_mv_checked(const LaguerreParams& p, const VertexWeights& w, std::size_t n, bool flat,
                                   std::size_t oracle_rows);

// The F and G series of the Riordan route.
Series second_mv_f(const LaguerreParams& p, const VertexWeights& w, int order);
Series second_mv_g(const VertexWeights& w, int order, bool flat);

// The specializations taking the second matrix to the first one.
VertexWeights first_from_second_final(const EdgeWeights& e);    // y_p = y_dd = v_m, y_v = y_da = v_p
VertexWeights first_from_second_initial(const EdgeWeights& e);  // y_v = y_dd = v_m, y_p = y_da = v_p

enum class ProdVariant { Pcirc, P, PcircFlat, PFlat, PcircY, PY };
ProdVariant parse_prod_variant(const std::string& name);  // throws std::invalid_argument
std::string prod_variant_name(ProdVariant v);

// Closed-form production matrices. Weights are ignored by Pcirc and P.
HessMatrix prodmat(const LaguerreParams& p, ProdVariant which, const VertexWeights& w, const Poly& x);

enum class Factorization { PcircLU, PShiftedLU, PcircFlatSplit };
Factorization parse_factorization(const std::string& name);
// Pcirc = L U; P = L (L U_x + lambda I); PcircFlat = Q + D with Q an S-fraction matrix.
bool factorization_check(Factorization which, const LaguerreParams& p, std::size_t n,
                         const VertexWeights& w = VertexWeights::symbolic());
// The S-fraction part Q and diagonal part D of PcircFlat.
Mat pcircflat_q(const LaguerreParams& p, const VertexWeights& w, std::size_t n);
Mat pcircflat_d(const LaguerreParams& p, const VertexWeights& w, std::size_t n);

// L = S L^{-1} S with S = diag((-1)^i).
bool unsigned_self_inverse_check(const LaguerreParams& p, std::size_t n);

// sum_k M_{n,k} x^k, or x^{n-k} when reversed.
std::vector<Poly> rowgen_polys(const Mat& m, const Poly& x, bool reversed);
// M B_x
Mat binomial_rowgen_matrix(const Mat& m, const Poly& x, std::size_t n);
// (L B_x)_{n,k} = binom(n,k) L_{n-k}^{(alpha+k)}(x)
bool binomial_rowgen_identity_check(const LaguerreParams& p, const Poly& x, std::size_t n);

}  // namespace lagtp
