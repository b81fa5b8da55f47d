#include "lagtp/banded.hpp"

#include <algorithm>
#include <stdexcept>

namespace lagtp {

Poly DiagonalPolySpec::diag(int m) const {
    if (m < -1) throw std::invalid_argument("diagonal index below -1");
    std::size_t idx = static_cast<std::size_t>(m + 1);
    return idx < f.size() ? f[idx] : Poly();
}

HessMatrix DiagonalPolySpec::matrix() const {
    DiagonalPolySpec s = *this;
    return HessMatrix(
        [s](std::size_t row, std::size_t col) {
            long off = static_cast<long>(row) - static_cast<long>(col);
            if (off < -1 || off > s.r) return Poly();
            Poly at_row = s.diag(static_cast<int>(off)).substitute({{s.n, Poly(static_cast<long>(row))}});
            if (off <= 0) return at_row;
            return falling(Poly(static_cast<long>(row)), static_cast<unsigned>(off)) * at_row;
        },
        static_cast<std::size_t>(s.r));
}

nlohmann::json DiagonalPolySpec::to_json() const {
    nlohmann::json fs = nlohmann::json::array();
    for (const Poly& p : f) fs.push_back(p.str());
    return {{"r", r}, {"f", fs}, {"index", n.name()}};
}

bool check_banded_criterion(const DiagonalPolySpec& spec) {
    if (spec.diag(-1).degree_in(spec.n) > spec.r) return false;
    for (int m = 0; m <= spec.r; ++m)
        if (spec.diag(m).degree_in(spec.n) > spec.r - m) return false;
    return true;
}

int conjugate_and_measure_band(const DiagonalPolySpec& spec, std::size_t n, Var xi) {
    Mat c = conjugate_by_binomial(spec.matrix(), xi, n);
    int band = -1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k <= i; ++k)
            if (!c(i, k).is_zero()) band = std::max(band, static_cast<int>(i - k));
    return band;
}

bool conjugate_subdiagonal_vanishes(const DiagonalPolySpec& spec, std::size_t n, int t, Var xi) {
    if (t < 0) throw std::invalid_argument("negative subdiagonal");
    Mat c = conjugate_by_binomial(spec.matrix(), xi, n);
    for (std::size_t k = 0; k + static_cast<std::size_t>(t) < n; ++k)
        if (!c(k + t, k).is_zero()) return false;
    return true;
}

namespace {

Poly random_poly_in(Xorshift64Star& rng, Var n, int deg) {
    Poly p;
    if (deg < 0) return p;
    Poly pw(1L);
    for (int d = 0; d <= deg; ++d) {
        long c = rng.range(0, 3);
        if (d == deg && c == 0) c = 1;  // exact degree
        p += pw.scaled(mpz_class(c));
        pw = pw * Poly(n);
    }
    return p;
}

}  // namespace

DiagonalPolySpec random_diagonal_spec(Xorshift64Star& rng, int max_r, int max_deg) {
    DiagonalPolySpec s;
    s.r = static_cast<int>(rng.range(0, max_r));
    bool admissible = rng.below(2) == 0;
    for (int m = -1; m <= s.r; ++m) {
        int cap = admissible ? std::min(max_deg, m < 0 ? s.r : s.r - m) : max_deg;
        int deg = static_cast<int>(rng.range(-1, cap));
        if (m == -1 && deg < 0) deg = 0;  // keep a nonzero superdiagonal
        s.f.push_back(random_poly_in(rng, s.n, deg));
    }
    return s;
}

}  // namespace lagtp
