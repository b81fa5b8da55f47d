// Command-line front end: gen, tp-check, verify, oracle.
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "lagtp/banded.hpp"
#include "lagtp/digraphs.hpp"
#include "lagtp/laguerre.hpp"
#include "lagtp/quadtp.hpp"
#include "lagtp/srpaths.hpp"
#include "lagtp/suites.hpp"

using namespace lagtp;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// sym -> a, lambda -> lambda-1, integers as given.
LaguerreParams parse_alpha(const std::string& s) {
    if (s == "sym") return LaguerreParams::symbolic();
    if (s == "lambda") return LaguerreParams::lambda_form();
    std::size_t slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            mpz_class num(s.substr(0, slash)), den(s.substr(slash + 1));
            if (den == 0) throw UsageError("zero denominator in --alpha");
            if (num % den != 0) throw UsageError("--alpha must be an integer, 'sym' or 'lambda'");
            return {Poly(mpz_class(num / den))};
        }
        return {Poly(mpz_class(s))};
    } catch (const std::invalid_argument&) {
        throw UsageError("bad --alpha value '" + s + "'");
    }
}

std::map<Var, Poly> parse_bindings(const std::vector<std::string>& items) {
    std::map<Var, Poly> env;
    for (const std::string& it : items) {
        std::size_t eq = it.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("--set expects VAR=POLY, got '" + it + "'");
        std::string value = it.substr(eq + 1);
        if (value == "symbolic") continue;
        try {
            env[Var(it.substr(0, eq))] = Poly::parse(value);
        } catch (const std::exception& e) {
            throw UsageError("bad value in --set '" + it + "': " + e.what());
        }
    }
    return env;
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

struct Output {
    std::string path;
    std::string format = "json";

    void write(const std::string& text) const {
        if (path.empty() || path == "-") {
            std::cout << text;
            return;
        }
        std::ofstream f(path);
        if (!f) throw UsageError("cannot write '" + path + "'");
        f << text;
    }
};

std::string render_matrix(const Mat& m, const nlohmann::json& meta, const std::string& format) {
    if (format == "csv") {
        std::ostringstream os;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << csv_quote(m(i, j).str());
            os << "\n";
        }
        return os.str();
    }
    nlohmann::json j = meta;
    j["matrix"] = m.to_json();
    nlohmann::json text = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).str());
        text.push_back(row);
    }
    j["text"] = text;
    return j.dump(1) + "\n";
}

std::string render_polys(const std::vector<Poly>& ps, const nlohmann::json& meta, const std::string& format) {
    if (format == "csv") {
        std::ostringstream os;
        for (std::size_t i = 0; i < ps.size(); ++i) os << i << "," << ps[i].str() << "\n";
        return os.str();
    }
    nlohmann::json j = meta;
    nlohmann::json arr = nlohmann::json::array();
    for (const Poly& p : ps) arr.push_back(p.str());
    j["polynomials"] = arr;
    return j.dump(1) + "\n";
}

struct GenArgs {
    std::string selector;
    std::string alpha = "sym";
    std::size_t n = 5;
    bool rowgen = false, reversed = false, flat = false, split = false, triangle = false, q_part = false;
    std::string route = "series";
    int m = 2, j = 0;
    std::size_t hankel = 0;
    std::string family, kappa;
    std::vector<std::string> set;
    Output out;
};

Mat substitute_all(const Mat& m, const std::map<Var, Poly>& env) { return env.empty() ? m : m.substitute(env); }

int cmd_gen(const GenArgs& a) {
    const std::vector<std::string> prod = {"Pcirc", "P", "PcircFlat", "PFlat", "PcircY", "PY"};
    const std::string& sel = a.selector;
    bool known = sel == "laguerre-coeff" || sel == "first-mv" || sel == "second-mv" || sel == "smj" ||
                 sel == "quad-general" || sel == "quad-variant";
    if (sel.rfind("prodmat:", 0) == 0)
        known = std::find(prod.begin(), prod.end(), sel.substr(8)) != prod.end();
    if (!known) throw UsageError("unknown selector '" + sel + "'");
    if (a.out.format != "json" && a.out.format != "csv") throw UsageError("--format must be json or csv");

    LaguerreParams p = parse_alpha(a.alpha);
    std::map<Var, Poly> env = parse_bindings(a.set);
    nlohmann::json meta = {{"family", sel}, {"n", a.n}, {"alpha", p.alpha.str()}};
    Mat m;

    if (sel == "laguerre-coeff") {
        m = coeff_matrix_uni(p, a.n);
    } else if (sel == "first-mv") {
        EdgeWeights e = EdgeWeights::symbolic();
        if (a.route == "oracle")
            m = coeff_matrix_first_mv(p, e, a.n);
        else if (a.route == "series")
            m = coeff_matrix_first_mv_egf(p, e, a.n);
        else
            throw UsageError("--route must be series or oracle");
        meta["route"] = a.route;
    } else if (sel == "second-mv") {
        VertexWeights w = a.split ? VertexWeights::symbolic_split() : VertexWeights::symbolic();
        std::size_t rows = std::min<std::size_t>(a.n, static_cast<std::size_t>(oracle_limit()) + 1);
        m = coeff_matrix_second_mv_checked(p, w, a.n, a.flat, std::min<std::size_t>(rows, 8));
        meta["flat"] = a.flat;
        meta["split"] = a.split;
    } else if (sel.rfind("prodmat:", 0) == 0) {
        ProdVariant v = parse_prod_variant(sel.substr(8));
        bool circ = v == ProdVariant::Pcirc || v == ProdVariant::PcircFlat || v == ProdVariant::PcircY;
        m = prodmat(p, v, VertexWeights::symbolic(), circ ? Poly() : pv("x")).truncate(a.n);
    } else if (sel == "smj") {
        if (a.m < 1) throw UsageError("--m must be positive");
        if (a.j < 0 || a.j > a.m) throw UsageError("--j must lie in [0, m]");
        SRCoeffs c = SRCoeffs::symbolic(a.m);
        if (!a.family.empty()) {
            KappaFamily fam;
            try {
                fam = KappaFamily::parse(a.family);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            if (a.m != 2 || fam.j != a.j) throw UsageError("family " + a.family + " needs --m 2 --j " + std::to_string(fam.j));
            if (!a.kappa.empty()) {
                std::size_t slash = a.kappa.find('/');
                fam.kappa_num = Poly::parse(a.kappa.substr(0, slash));
                if (slash != std::string::npos) fam.kappa_den = Poly::parse(a.kappa.substr(slash + 1));
            }
            c = kappa_family_coeffs(fam, pv("x"));
            meta["cell"] = fam.id();
        }
        meta["m"] = a.m;
        meta["j"] = a.j;
        HessMatrix pm = prodmat_smj(c, a.j);
        m = a.triangle ? output_matrix(pm, a.n) : pm.truncate(a.n);
        meta["object"] = a.triangle ? "triangle" : "production";
    } else if (sel == "quad-general") {
        QuadFactorParams q = QuadFactorParams::symbolic();
        m = (a.q_part ? general_quad_q(q) : build_general_quad(q)).truncate(a.n);
        meta["object"] = a.q_part ? "Q" : "P";
    } else if (sel == "quad-variant") {
        QuadVariantParams q = QuadVariantParams::symbolic();
        m = (a.q_part ? variant_quad_q(q) : build_variant_quad(q)).truncate(a.n);
        meta["object"] = a.q_part ? "Q" : "P";
    }

    m = substitute_all(m, env);
    if (a.hankel > 0) {
        if (!a.rowgen) throw UsageError("--hankel needs --rowgen");
        if (m.rows() < 2 * a.hankel - 1) throw UsageError("--hankel K needs --n of at least 2K-1");
        meta["object"] = "hankel";
        meta["rowgen"] = a.reversed ? "reversed" : "plain";
        a.out.write(render_matrix(hankel_matrix(rowgen_polys(m, pv("x"), a.reversed), a.hankel), meta, a.out.format));
    } else if (a.rowgen) {
        meta["rowgen"] = a.reversed ? "reversed" : "plain";
        a.out.write(render_polys(rowgen_polys(m, pv("x"), a.reversed), meta, a.out.format));
    } else {
        a.out.write(render_matrix(m, meta, a.out.format));
    }
    return 0;
}

struct TpArgs {
    std::string file;
    int order = 0;
    std::string mode = "symbolic";
    std::uint64_t seed = 42;
    int samples = 100;
};

int cmd_tp_check(const TpArgs& a) {
    Mat m;
    try {
        nlohmann::json j;
        if (a.file == "-") {
            j = nlohmann::json::parse(std::cin);
        } else {
            std::ifstream f(a.file);
            if (!f) throw UsageError("cannot read '" + a.file + "'");
            j = nlohmann::json::parse(f);
        }
        m = Mat::from_json(j.is_object() && j.contains("matrix") ? j.at("matrix") : j);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("malformed matrix JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("malformed matrix JSON: ") + e.what());
    }
    int r = a.order > 0 ? a.order : static_cast<int>(std::min(m.rows(), m.cols()));
    TpReport rep;
    if (a.mode == "symbolic")
        rep = tp_check_symbolic(m, r);
    else if (a.mode == "sampled")
        rep = tp_check_sampled(m, r, a.seed, a.samples);
    else
        throw UsageError("--mode must be symbolic or sampled");
    nlohmann::json j = rep.to_json();
    j["mode"] = a.mode;
    if (a.mode == "sampled") j["seed"] = a.seed;
    std::cout << j.dump(1) << "\n";
    return rep.ok ? 0 : kExitFail;
}

struct VerifyArgs {
    std::string suite;
    SuiteOptions opt;
    bool timing = false, quiet = false;
    std::string report;
};

int cmd_verify(const VerifyArgs& a) {
    if (!is_suite(a.suite)) throw UsageError("unknown suite '" + a.suite + "'");
    auto progress = [&](const CheckResult& c) {
        if (!a.quiet) std::cerr << (c.ok ? "PASS " : "FAIL ") << c.suite << "/" << c.name << "\n";
    };
    SuiteReport rep = run_suite(a.suite, a.opt, progress);
    nlohmann::json j = rep.to_json(a.timing);
    j["suite"] = a.suite;
    j["seed"] = a.opt.seed;
    Output out{a.report};
    out.write(j.dump(1) + "\n");
    return rep.ok() ? 0 : kExitFail;
}

struct OracleArgs {
    std::string kind;
    std::string alpha = "sym";
    std::size_t n = 4;
    bool flat = false, split = false;
    std::string format = "json";
};

int cmd_oracle(const OracleArgs& a) {
    LaguerreParams p = parse_alpha(a.alpha);
    nlohmann::json meta = {{"oracle", a.kind}, {"n", a.n}, {"alpha", p.alpha.str()}};
    VertexWeights w = a.split ? VertexWeights::symbolic_split() : VertexWeights::symbolic();
    if (a.kind == "count") {
        nlohmann::json counts = nlohmann::json::array();
        for (std::size_t i = 0; i <= a.n; ++i) counts.push_back(count_digraphs(static_cast<int>(i)));
        meta["counts"] = counts;
        std::cout << meta.dump(1) << "\n";
        return 0;
    }
    if (a.kind == "first-mv") {
        std::cout << render_matrix(coeff_matrix_first_mv(p, EdgeWeights::symbolic(), a.n), meta, a.format);
        return 0;
    }
    if (a.kind == "second-mv") {
        std::cout << render_matrix(coeff_matrix_second_mv_oracle(p, w, a.n, a.flat), meta, a.format);
        return 0;
    }
    if (a.kind == "perm-cyclic" || a.kind == "perm-linear") {
        PermKind k = a.kind == "perm-cyclic" ? PermKind::cyclic : PermKind::linear00;
        std::vector<Poly> ps;
        for (std::size_t i = 0; i < a.n; ++i) ps.push_back(permutation_oracle(static_cast<int>(i), k, p.lambda(), w));
        std::cout << render_polys(ps, meta, a.format);
        return 0;
    }
    throw UsageError("unknown oracle '" + a.kind + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Laguerre total-positivity toolkit"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "generate a matrix or polynomial family");
    g->add_option("selector", gen.selector,
                  "laguerre-coeff | first-mv | second-mv | prodmat:{Pcirc,P,PcircFlat,PFlat,PcircY,PY} | smj | "
                  "quad-general | quad-variant")
        ->required();
    g->add_option("--alpha", gen.alpha, "integer, 'sym' or 'lambda'");
    g->add_option("--n", gen.n, "truncation size");
    g->add_option("--format", gen.out.format, "json or csv");
    g->add_option("-o,--out", gen.out.path, "output file");
    g->add_flag("--rowgen", gen.rowgen, "emit row-generating polynomials in x");
    g->add_flag("--reversed", gen.reversed, "with --rowgen, reverse each row");
    g->add_option("--hankel", gen.hankel, "with --rowgen, the K x K Hankel matrix of the row polynomials");
    g->add_flag("--flat", gen.flat, "second-mv: flat variant");
    g->add_flag("--split", gen.split, "second-mv: separate path weights z");
    g->add_option("--route", gen.route, "first-mv: series or oracle");
    g->add_option("--m", gen.m, "smj: branching order");
    g->add_option("--j", gen.j, "smj: type");
    g->add_option("--family", gen.family, "smj: kappa-family cell id");
    g->add_option("--kappa", gen.kappa, "smj: kappa value, p or p/q");
    g->add_flag("--triangle", gen.triangle, "smj: output matrix instead of production matrix");
    g->add_flag("--q", gen.q_part, "quad-*: the matrix Q instead of P");
    g->add_option("--set", gen.set, "substitute VAR=POLY after generation (repeatable)");

    TpArgs tp;
    auto* t = app.add_subcommand("tp-check", "check total positivity up to a given order");
    t->add_option("file", tp.file, "matrix JSON, or - for stdin")->required();
    t->add_option("--order", tp.order, "largest minor size (default: full)");
    t->add_option("--mode", tp.mode, "symbolic or sampled");
    t->add_option("--seed", tp.seed, "sampling seed");
    t->add_option("--samples", tp.samples, "number of samples");

    VerifyArgs ver;
    auto* v = app.add_subcommand("verify", "run a verification suite");
    v->add_option("suite", ver.suite, "all | univariate | multivariate | riordan | srpaths | quadtp | banded")
        ->required();
    v->add_option("--seed", ver.opt.seed, "seed for sampled checks");
    v->add_option("--max-n", ver.opt.max_n, "cap on truncation sizes");
    v->add_option("--samples", ver.opt.samples, "samples for sampled TP checks");
    v->add_flag("--timing", ver.timing, "include per-check milliseconds in the report");
    v->add_flag("--quiet", ver.quiet, "no progress lines on stderr");
    v->add_option("--report", ver.report, "write the JSON report to a file");

    OracleArgs ora;
    auto* o = app.add_subcommand("oracle", "brute-force enumerations");
    o->add_option("kind", ora.kind, "count | first-mv | second-mv | perm-cyclic | perm-linear")->required();
    o->add_option("--alpha", ora.alpha, "integer, 'sym' or 'lambda'");
    o->add_option("--n", ora.n, "number of rows");
    o->add_flag("--flat", ora.flat, "second-mv: flat variant");
    o->add_flag("--split", ora.split, "separate path weights z");
    o->add_option("--format", ora.format, "json or csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*g) return cmd_gen(gen);
        if (*t) return cmd_tp_check(tp);
        if (*v) return cmd_verify(ver);
        if (*o) return cmd_oracle(ora);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
