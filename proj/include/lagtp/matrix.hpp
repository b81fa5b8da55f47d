#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "lagtp/poly.hpp"
#include "lagtp/series.hpp"

namespace lagtp {

// Dense finite block of polynomials.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), d_(rows * cols) {}
    static Mat identity(std::size_t n);
    static Mat from_rows(const std::vector<std::vector<Poly>>& rows);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    const Poly& operator()(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }
    Poly& operator()(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }

    Mat block(std::size_t rows, std::size_t cols) const;  // leading block
    Mat block(std::size_t n) const { return block(n, n); }
    Mat sub(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
    Mat transpose() const;
    Mat substitute(const std::map<Var, Poly>& env) const;

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat scaled(const Poly& c) const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

    nlohmann::json to_json() const;
    static Mat from_json(const nlohmann::json& j);
    std::string str() const;

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<Poly> d_;
};

// Lazily generated lower-Hessenberg matrix: entry(n,k) = 0 for k > n+1,
// and for k < n - r when a lower band r is given.
class HessMatrix {
public:
    using Entry = std::function<Poly(std::size_t, std::size_t)>;
    // build(S) must return the exact leading S x S block.
    using Builder = std::function<Mat(std::size_t)>;

    HessMatrix() = default;
    HessMatrix(Entry e, std::optional<std::size_t> lower_band);
    static HessMatrix from_builder(Builder b, std::optional<std::size_t> lower_band);

    Poly entry(std::size_t n, std::size_t k) const;
    Mat truncate(std::size_t rows, std::size_t cols) const;
    Mat truncate(std::size_t n) const { return truncate(n, n); }
    std::optional<std::size_t> lower_band() const { return band_; }

private:
    struct Cache;
    Entry e_;
    std::optional<std::size_t> band_;
    std::shared_ptr<Cache> cache_;
};

HessMatrix delta_matrix();  // 1 on the superdiagonal
HessMatrix scalar_matrix(const Poly& c);
// (B_{a,b})_{nk} = binom(n,k) a^{n-k} b^k ; B_x = B_{x,1}
Mat binomial_matrix(const Poly& a, const Poly& b, std::size_t n);
Mat binomial_matrix(const Poly& x, std::size_t n);
// Lower bidiagonal with 1 on the diagonal and s_1, s_2, ... below.
Mat lower_bidiagonal(const std::vector<Poly>& s, std::size_t n);
Mat inverse_unit_lower(const Mat& l);

// a_{0k} = delta_{0k}, a_{nk} = sum_i a_{n-1,i} p_{ik}. Exact when p is
// lower-Hessenberg and has at least n columns.
Mat output_matrix(const Mat& p, std::size_t n);
Mat output_matrix(const HessMatrix& p, std::size_t n);
// Unit-lower-Hessenberg P with O(P) = L; returns an (N-1) x (N-1) block.
Mat production_of(const Mat& l);
// B_xi^{-1} P B_xi computed on an (N+2) working block.
Mat conjugate_by_binomial(const HessMatrix& p, Var xi, std::size_t n);

Poly det_laplace(const Mat& m);
Poly det_bareiss(const Mat& m);
Poly det_exact(const Mat& m);  // Laplace up to size 4, Bareiss above
mpz_class det_integer(std::vector<std::vector<mpz_class>> m);

// k-subsets of {0..n-1} in colex order.
std::vector<std::vector<std::size_t>> colex_subsets(std::size_t n, std::size_t k);

struct TpReport {
    bool ok = true;
    int order = 0;
    std::vector<std::size_t> rows, cols;
    Poly minor;
    std::map<Var, long> assignment;  // sampled mode only
    std::size_t minors_checked = 0;
    std::size_t samples = 0;

    nlohmann::json to_json() const;
};

TpReport tp_check_symbolic(const Mat& m, int r);
TpReport tp_check_sampled(const Mat& m, int r, std::uint64_t seed, int samples);
// Off-diagonal entries and contiguous principal minors coefficientwise nonnegative.
bool tridiagonal_tp_criterion(const Mat& m);

// EAZ(a,z)_{nk} = (n!/k!) (z_{n-k} + k a_{n-k+1}), with z_{-1} = 0.
HessMatrix eaz_matrix(const std::vector<Poly>& a, const std::vector<Poly>& z);
bool bx_conjugate_eaz_identity_check(const std::vector<Poly>& a, const std::vector<Poly>& z, Var x,
                                     std::size_t n);
// (n!/k!) [t^n] F G^k; throws if an entry is not an integer polynomial.
Mat riordan_matrix(const Series& f, const Series& g, std::size_t n);
// Same entries over the rationals, no integrality requirement.
std::vector<std::vector<QPoly>> riordan_matrix_q(const Series& f, const Series& g, std::size_t n);

}  // namespace lagtp
