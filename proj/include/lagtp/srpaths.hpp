#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lagtp/matrix.hpp"
#include "lagtp/series.hpp"

namespace lagtp {

// num / den without reduction; equality against a polynomial is tested by
// cross-multiplication.
struct Frac {
    Poly num, den{1L};

    Frac() = default;
    Frac(Poly n) : num(std::move(n)) {}
    Frac(Poly n, Poly d);

    bool is_zero() const { return num.is_zero(); }
    Frac operator+(const Frac& o) const;
    Frac operator*(const Frac& o) const;
    bool equals(const Poly& p) const { return num == p * den; }
    // Cancels the denominator when it divides the numerator exactly.
    void reduce();
    // Throws std::domain_error when the value is not a polynomial.
    Poly to_poly() const;
};

// alpha_i = num(i) / den(i) for i >= m, and 0 below m.
struct SRCoeffs {
    int m = 1;
    std::function<Poly(int)> num;
    std::function<Poly(int)> den;  // empty means 1

    Poly at(int i) const;  // throws if alpha_i is not a polynomial
    Frac frac(int i) const;
    bool polynomial() const { return !den; }

    // Fresh indeterminates al02, al03, ... (two-digit padding keeps name order numeric).
    static SRCoeffs symbolic(int m);
    // alpha_i = values[i]; indices past the end are 0.
    static SRCoeffs from_list(int m, std::vector<Poly> values);
    // Same alphas, with alpha_m, ..., alpha_{m+zeros-1} set to 0 and the rest shifted up by `zeros`.
    SRCoeffs shifted(int zeros) const;
};

std::string sr_var_name(int i);

// Memoized S^{(m;j)}_{n,k} by removing the final step of the path.
class SRTable {
public:
    explicit SRTable(SRCoeffs c) : c_(std::move(c)) {}
    const Poly& get(int j, int n, int k);
    const SRCoeffs& coeffs() const { return c_; }

private:
    const Poly& walk(int len, int h);

    SRCoeffs c_;
    std::map<std::pair<int, int>, Poly> memo_;
};

Poly sr_poly(const SRCoeffs& c, int j, int n, int k);
// Matrix (S^{(m;j)}_{n,k}) for n,k < N.
Mat sr_matrix(const SRCoeffs& c, int j, std::size_t n);

// Brute force over partial m-Dyck paths from (0,0) to ((m+1)n+j, (m+1)k+j).
Poly sr_path_oracle(const SRCoeffs& c, int j, int n, int k);
constexpr int kPathOracleMaxLength = 24;

// P^{(m;j)} = L_{j+1} ... L_m U_0 L_1 ... L_j, for 0 <= j <= m.
HessMatrix prodmat_smj(const SRCoeffs& c, int j);
// Explicit m = 2 entry formulas, used as a cross-check of the bidiagonal product.
HessMatrix prodmat_m2_explicit(const SRCoeffs& c, int j);

// f_0 f_1 ... f_j to order N; requires polynomial alphas.
Series sfrac_tail_series(const SRCoeffs& c, int j, int order);
// Alternate form for j <= m: ((f_0 - 1)/(alpha_m t)) after zeroing and reindexing.
Series sfrac_alternate_series(const SRCoeffs& c, int j, int order);

struct KappaFamily {
    int j = 0;
    int alpha_lag = -1;
    // kappa = kappa_num / kappa_den; a variable is allowed in kappa_num.
    Poly kappa_num{Var("kappa")};
    Poly kappa_den{1L};

    static KappaFamily parse(const std::string& id);  // j0am1, j1am1, j1a0, j2am1, j2a0, j2a1
    std::string id() const;
    bool uses_kappa() const;
};

// Throws std::invalid_argument for a cell outside the admissible six.
SRCoeffs kappa_family_coeffs(const KappaFamily& fam, const Poly& x);
// prodmat_smj of the cell against the univariate row-generating production matrix.
bool verify_kappa_cell(const KappaFamily& fam, std::size_t n);

// Hankel matrix (a_{i+j}) for i,j < size; needs 2*size-1 terms.
Mat hankel_matrix(const std::vector<Poly>& seq, std::size_t size);

}  // namespace lagtp
