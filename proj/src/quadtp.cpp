#include "lagtp/quadtp.hpp"

#include <stdexcept>

namespace lagtp {

PolySeq symbolic_seq(const std::string& name) {
    return [name](long n) { return pv(name + "_" + std::to_string(n)); };
}

PolySeq constant_seq(const Poly& c) {
    return [c](long) { return c; };
}

PolySeq linear_seq(const Poly& c) {
    return [c](long n) { return c.scaled(mpz_class(n)); };
}

namespace {

const PolySeq& pick_general(const QuadFactorParams& p, char which) {
    switch (which) {
        case 'a': return p.a;
        case 'b': return p.b;
        case 'c': return p.c;
        case 'd': return p.d;
        case 'e': return p.e;
        case 'f': return p.f;
        case 'g': return p.g;
        case 'h': return p.h;
    }
    throw std::invalid_argument(std::string("no sequence '") + which + "'");
}

const PolySeq& pick_variant(const QuadVariantParams& p, char which) {
    switch (which) {
        case 'a': return p.a;
        case 'b': return p.b;
        case 'c': return p.c;
        case 'd': return p.d;
        case 'e': return p.e;
        case 'f': return p.f;
    }
    throw std::invalid_argument(std::string("no sequence '") + which + "'");
}

Mat lower_bi(const PolySeq& diag, const PolySeq& sub, std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = diag(static_cast<long>(i));
        if (i > 0) m(i, i - 1) = sub(static_cast<long>(i));
    }
    return m;
}

Mat upper_bi(const PolySeq& diag, const PolySeq& super, std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = diag(static_cast<long>(i));
        if (i + 1 < n) m(i, i + 1) = super(static_cast<long>(i) + 1);
    }
    return m;
}

Mat diag_of(const PolySeq& s, std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = s(static_cast<long>(i));
    return m;
}

HessMatrix general_entries(const QuadFactorParams& p, bool with_h) {
    return HessMatrix(
        [p, with_h](std::size_t row, std::size_t col) {
            long n = static_cast<long>(row), k = static_cast<long>(col);
            auto A = [&](char w, long i) { return p.at(w, i); };
            Poly h = with_h ? A('h', n) : Poly();
            switch (k - n) {
                case 1: return A('a', n) * A('c', n + 1) * A('e', n + 1);
                case 0:
                    return A('a', n) * A('d', n) * A('e', n) + A('b', n) * A('c', n) * A('e', n) +
                           A('a', n) * A('c', n + 1) * A('f', n + 1) + A('a', n) * A('g', n) + h * A('e', n);
                case -1:
                    return A('a', n) * A('d', n) * A('f', n) + A('b', n) * A('c', n) * A('f', n) +
                           A('b', n) * A('d', n - 1) * A('e', n - 1) + A('b', n) * A('g', n - 1) + h * A('f', n);
                case -2: return A('b', n) * A('d', n - 1) * A('f', n - 1);
            }
            return Poly();
        },
        2);
}

HessMatrix variant_entries(const QuadVariantParams& p, bool with_f) {
    return HessMatrix(
        [p, with_f](std::size_t row, std::size_t col) {
            long n = static_cast<long>(row), k = static_cast<long>(col);
            auto A = [&](char w, long i) { return p.at(w, i); };
            auto l1 = [&](long i) { return p.alpha + p.x * A('a', i); };
            auto l2 = [&](long i) { return p.beta + p.y * A('a', i); };
            Poly f = with_f ? A('f', k) : Poly();
            switch (n - k) {
                case -1: return l1(k - 1) * l2(k - 1) * A('c', k);
                case 0:
                    return l1(k) * l2(k) * A('d', k) + l1(k) * p.y * A('b', k) * A('c', k) +
                           p.x * A('b', k) * l2(k - 1) * A('c', k) + l1(k) * A('e', k) + l2(k) * f;
                case 1:
                    return l1(k + 1) * p.y * A('b', k + 1) * A('d', k) + p.x * A('b', k + 1) * l2(k) * A('d', k) +
                           p.x * A('b', k + 1) * p.y * A('b', k) * A('c', k) + p.x * A('b', k + 1) * A('e', k) +
                           p.y * A('b', k + 1) * f;
                case 2: return p.x * p.y * A('b', k + 2) * A('b', k + 1) * A('d', k);
            }
            return Poly();
        },
        2);
}

}  // namespace

Poly QuadFactorParams::at(char which, long n) const {
    if (n < 0) return Poly();
    if (n == 0 && (which == 'b' || which == 'c' || which == 'f')) return Poly();
    return pick_general(*this, which)(n);
}

QuadFactorParams QuadFactorParams::symbolic() {
    return {symbolic_seq("a"), symbolic_seq("b"), symbolic_seq("c"), symbolic_seq("d"),
            symbolic_seq("e"), symbolic_seq("f"), symbolic_seq("g"), symbolic_seq("h")};
}

QuadFactorParams QuadFactorParams::laguerre_flat(const VertexWeights& w, const Poly& lambda, const Poly& x) {
    Poly one(1L);
    return {constant_seq(one),        linear_seq(w.y_v),        constant_seq(one),
            linear_seq(w.y_p),        constant_seq(one),        constant_seq(x),
            constant_seq(lambda * w.y_p), linear_seq(w.y_da + w.y_dd - w.y_p - w.y_v)};
}

HessMatrix build_general_quad(const QuadFactorParams& p) { return general_entries(p, true); }
HessMatrix general_quad_q(const QuadFactorParams& p) { return general_entries(p, false); }

Mat general_quad_product(const QuadFactorParams& p, std::size_t n) {
    std::size_t s = n + 1;
    auto seq = [&p](char w) { return PolySeq([&p, w](long i) { return p.at(w, i); }); };
    Mat l1 = lower_bi(seq('a'), seq('b'), s);
    Mat u = upper_bi(seq('d'), seq('c'), s);
    Mat l2 = lower_bi(seq('e'), seq('f'), s);
    Mat prod = l1 * u * l2 + l1 * diag_of(seq('g'), s) + diag_of(seq('h'), s) * l2;
    return prod.block(n);
}

Mat general_quad_l2(const QuadFactorParams& p, std::size_t n) {
    return lower_bi([&p](long i) { return p.at('e', i); }, [&p](long i) { return p.at('f', i); }, n);
}

Poly QuadVariantParams::at(char which, long n) const {
    if (n < 0) return Poly();
    if (n == 0 && (which == 'b' || which == 'c')) return Poly();
    return pick_variant(*this, which)(n);
}

QuadVariantParams QuadVariantParams::symbolic() {
    return {pv("alpha"),      pv("beta"),       pv("x"),          pv("y"),          symbolic_seq("a"),
            symbolic_seq("b"), symbolic_seq("c"), symbolic_seq("d"), symbolic_seq("e"), symbolic_seq("f")};
}

HessMatrix build_variant_quad(const QuadVariantParams& p) { return variant_entries(p, true); }
HessMatrix variant_quad_q(const QuadVariantParams& p) { return variant_entries(p, false); }

namespace {

void variant_factors(const QuadVariantParams& p, std::size_t s, Mat& l1, Mat& l2) {
    Mat l = lower_bi([&p](long i) { return p.at('a', i); }, [&p](long i) { return p.at('b', i); }, s);
    Mat id = Mat::identity(s);
    l1 = id.scaled(p.alpha) + l.scaled(p.x);
    l2 = id.scaled(p.beta) + l.scaled(p.y);
}

}  // namespace

Mat variant_quad_product(const QuadVariantParams& p, std::size_t n) {
    std::size_t s = n + 1;
    Mat l1, l2;
    variant_factors(p, s, l1, l2);
    Mat u = upper_bi([&p](long i) { return p.at('d', i); }, [&p](long i) { return p.at('c', i); }, s);
    Mat d1 = diag_of([&p](long i) { return p.at('e', i); }, s);
    Mat d2 = diag_of([&p](long i) { return p.at('f', i); }, s);
    return (l1 * l2 * u + l1 * d1 + l2 * d2).block(n);
}

bool variant_commutation_check(const QuadVariantParams& p, std::size_t n) {
    Mat l1, l2;
    variant_factors(p, n, l1, l2);
    return l1 * l2 == l2 * l1;
}

}  // namespace lagtp
