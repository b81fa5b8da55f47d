#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lagtp/matrix.hpp"
#include "lagtp/weights.hpp"

namespace lagtp {

// Sequence of polynomials indexed by n >= 0.
using PolySeq = std::function<Poly(long)>;

// name_0, name_1, ... as fresh indeterminates.
PolySeq symbolic_seq(const std::string& name);
PolySeq constant_seq(const Poly& c);
// n -> c * n
PolySeq linear_seq(const Poly& c);

// P = L1 U L2 + L1 D1 + D2 L2 with L1 = bidiag(a; b), U = bidiag(d; c) upper,
// L2 = bidiag(e; f), D1 = diag(g), D2 = diag(h). b, c, f start at index 1.
struct QuadFactorParams {
    PolySeq a, b, c, d, e, f, g, h;

    // Boundary-aware access: b_0 = c_0 = f_0 = 0 and every sequence vanishes below 0.
    Poly at(char which, long n) const;

    static QuadFactorParams symbolic();
    // a = c = e = 1, b_n = n y_v, d_n = n y_p, f_n = x, g_n = lambda y_p,
    // h_n = n (y_da + y_dd - y_p - y_v).
    static QuadFactorParams laguerre_flat(const VertexWeights& w, const Poly& lambda, const Poly& x);
};

// Closed-form entries.
HessMatrix build_general_quad(const QuadFactorParams& p);
// Same matrix at h = 0.
HessMatrix general_quad_q(const QuadFactorParams& p);
// Leading n x n block of the defining matrix product.
Mat general_quad_product(const QuadFactorParams& p, std::size_t n);
// Leading block of L2, whose rows are the vectors l_n of p_n = q_n + h_n l_n.
Mat general_quad_l2(const QuadFactorParams& p, std::size_t n);

// P = L1 L2 U + L1 D1 + L2 D2 with L1 = alpha I + x L, L2 = beta I + y L,
// L = bidiag(a; b), U = bidiag(d; c) upper, D1 = diag(e), D2 = diag(f).
struct QuadVariantParams {
    Poly alpha, beta, x, y;
    PolySeq a, b, c, d, e, f;

    Poly at(char which, long n) const;  // b_0 = c_0 = 0

    static QuadVariantParams symbolic();
};

HessMatrix build_variant_quad(const QuadVariantParams& p);
HessMatrix variant_quad_q(const QuadVariantParams& p);  // f = 0
Mat variant_quad_product(const QuadVariantParams& p, std::size_t n);
// L1 L2 = L2 L1 on an n x n block.
bool variant_commutation_check(const QuadVariantParams& p, std::size_t n);

}  // namespace lagtp
