#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "lagtp/matrix.hpp"
#include "lagtp/weights.hpp"

namespace lagtp {

// Vertices 0..n-1 stand for the labels 1..n; succ[i] = -1 means no outgoing edge.
struct LaguerreDigraph {
    int n = 0;
    std::vector<int> succ;

    std::vector<int> pred() const;
    bool valid() const;  // out-degree and in-degree at most 1
};

struct DigraphStats {
    int pa = 0, cyc = 0, e = 0, e_minus = 0, e_zero = 0, e_plus = 0;
    int p = 0, v = 0, da = 0, dd = 0, fp = 0;
    int pcyc = 0, vcyc = 0, dacyc = 0, ddcyc = 0;
    int ppa = 0, vpa = 0, dapa = 0, ddpa = 0;
};

// Largest n accepted by the enumerators. LAGTP_LIMIT overrides the default 9.
int oracle_limit();

// Every Laguerre digraph on n vertices exactly once, in lexicographic order of
// the successor vector (no successor sorts first).
void enumerate_digraphs(int n, const std::function<void(const LaguerreDigraph&)>& visit);
std::uint64_t count_digraphs(int n);

// Statistics under 0-0 boundary conditions.
DigraphStats classify(const LaguerreDigraph& g);

enum class OracleMode { first_mv, second_mv, second_mv_general };

struct OracleWeights {
    Poly lambda;  // weight per cycle
    EdgeWeights edges;
    VertexWeights vertices;  // second_mv uses the y block for every vertex

    static OracleWeights symbolic();  // lambda = 1+a
};

// Rows 0..N-1 of the weighted digraph sum, indexed by the number of paths.
Mat oracle_matrix(std::size_t n_rows, OracleMode mode, const OracleWeights& w);
Poly oracle_entry(int n, int k, const OracleWeights& w, OracleMode mode);

enum class PermKind { cyclic, linear00 };

// Cyclic: sum over S_n of lambda^cyc times y-weights of the cycle classification.
// Linear00: sum over words of z-weights of the linear classification with 0-0 boundary.
Poly permutation_oracle(int n, PermKind kind, const Poly& lambda, const VertexWeights& w);

}  // namespace lagtp
