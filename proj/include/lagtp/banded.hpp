#pragma once

#include <vector>

#include "lagtp/matrix.hpp"
#include "lagtp/rng.hpp"

namespace lagtp {

// Lower-Hessenberg matrix whose diagonals are polynomials in the row index n:
// p_{n,n+1} = f_{-1}(n) and p_{n,n-m} = n(n-1)...(n-m+1) f_m(n) for 0 <= m <= r.
struct DiagonalPolySpec {
    int r = 0;
    std::vector<Poly> f;  // f[0] = f_{-1}, f[m+1] = f_m; missing entries are 0
    Var n{"n"};

    Poly diag(int m) const;  // f_m, m >= -1
    HessMatrix matrix() const;
    nlohmann::json to_json() const;
};

// deg f_{-1} <= r and deg f_m <= r - m for 0 <= m <= r (degrees in n).
bool check_banded_criterion(const DiagonalPolySpec& spec);

// Largest t with a nonzero (k+t, k) entry of B_xi^{-1} P B_xi on the leading
// n x n block; -1 when the strictly lower part and diagonal vanish.
int conjugate_and_measure_band(const DiagonalPolySpec& spec, std::size_t n, Var xi = Var("xi"));
// True when subdiagonal t of the conjugate vanishes on the leading n x n block.
bool conjugate_subdiagonal_vanishes(const DiagonalPolySpec& spec, std::size_t n, int t, Var xi = Var("xi"));

// Random spec with r <= max_r and every f_m of degree <= max_deg; about half
// of the draws are forced to satisfy the criterion.
DiagonalPolySpec random_diagonal_spec(Xorshift64Star& rng, int max_r = 3, int max_deg = 4);

}  // namespace lagtp
