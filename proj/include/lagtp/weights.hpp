#pragma once

#include "lagtp/poly.hpp"

namespace lagtp {

// Edge weights for decreasing, loop and increasing edges.
struct EdgeWeights {
    Poly v_m, v_0, v_p;

    static EdgeWeights symbolic() { return {pv("v_m"), pv("v_0"), pv("v_p")}; }
    static EdgeWeights uniform(const Poly& v) { return {v, v, v}; }
};

// Vertex weights: y for vertices on cycles, z for vertices on paths.
struct VertexWeights {
    Poly y_p, y_v, y_da, y_dd, y_fp;
    Poly z_p, z_v, z_da, z_dd;

    // z := y componentwise.
    static VertexWeights symbolic() {
        VertexWeights w;
        w.y_p = w.z_p = pv("y_p");
        w.y_v = w.z_v = pv("y_v");
        w.y_da = w.z_da = pv("y_da");
        w.y_dd = w.z_dd = pv("y_dd");
        w.y_fp = pv("y_fp");
        return w;
    }
    static VertexWeights symbolic_split() {
        VertexWeights w = symbolic();
        w.z_p = pv("z_p");
        w.z_v = pv("z_v");
        w.z_da = pv("z_da");
        w.z_dd = pv("z_dd");
        return w;
    }
    static VertexWeights of(const Poly& p, const Poly& v, const Poly& da, const Poly& dd, const Poly& fp) {
        return {p, v, da, dd, fp, p, v, da, dd};
    }
    bool paths_match_cycles() const { return z_p == y_p && z_v == y_v && z_da == y_da && z_dd == y_dd; }
    VertexWeights substitute(const std::map<Var, Poly>& env) const {
        return {y_p.substitute(env),  y_v.substitute(env),  y_da.substitute(env),
                y_dd.substitute(env), y_fp.substitute(env), z_p.substitute(env),
                z_v.substitute(env),  z_da.substitute(env), z_dd.substitute(env)};
    }
};

}  // namespace lagtp
