// pdo: command-line front end over the operator-algebra library.
//
// Exit codes: 0 = computed (including boolean "no" answers), 2 = the
// computation itself returned a verified negative (a nonzero commutator, a
// fit or search that provably finds nothing at the given horizon), 1 = error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "pdo/cmtools.hpp"
#include "pdo/glue.hpp"
#include "pdo/json_io.hpp"
#include "pdo/parser.hpp"
#include "pdo/schur.hpp"
#include "pdo/selftest.hpp"
#include "pdo/spectral.hpp"
#include "pdo/version.hpp"

namespace {

using pdo::Json;

constexpr int kUnset = std::numeric_limits<int>::min();

struct CliConfig {
    int nvars = 2;
    int precision = 10;  // 0 = exact coefficients
    int mmax = 24;
    int fit_lo = 0;  // 0 = auto
    int fit_hi = 0;
    int dmax = 8;
    int window_tmin = kUnset;
    int window_tmax = kUnset;
    int window_umax = kUnset;
    long long budget = -1;  // -1 = per-command default
    int rank_search = 4;
    int nmax = 20;
    int d = 1;
    int example_depth = 0;
    std::uint64_t seed = 12345;
    std::string out;
    std::string format = "json";
};

Json config_json(const CliConfig& c, const std::string& command) {
    Json j = Json::object();
    j["command"] = command;
    j["nvars"] = c.nvars;
    j["precision"] = c.precision;
    j["mmax"] = c.mmax;
    j["fit_window"] = Json{{"lo", c.fit_lo}, {"hi", c.fit_hi}};
    j["dmax"] = c.dmax;
    Json w = Json::object();
    w["tmin"] = c.window_tmin == kUnset ? Json(nullptr) : Json(c.window_tmin);
    w["tmax"] = c.window_tmax == kUnset ? Json(nullptr) : Json(c.window_tmax);
    w["umax"] = c.window_umax == kUnset ? Json(nullptr) : Json(c.window_umax);
    j["window"] = w;
    j["budget"] = c.budget;
    j["rank_search"] = c.rank_search;
    j["nmax"] = c.nmax;
    j["d"] = c.d;
    j["example_depth"] = c.example_depth;
    j["seed"] = c.seed;
    j["format"] = c.format;
    return j;
}

// ---- text rendering ---------------------------------------------------------

bool is_scalar(const Json& j) {
    return !(j.is_object() || j.is_array());
}

std::string scalar_text(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

bool all_scalar(const Json& arr) {
    for (const auto& v : arr)
        if (!is_scalar(v)) return false;
    return true;
}

void render_text(const Json& j, std::ostream& os, int indent) {
    std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const Json& v = it.value();
            if (is_scalar(v)) {
                os << pad << it.key() << ": " << scalar_text(v) << "\n";
            } else if (v.is_array() && all_scalar(v)) {
                os << pad << it.key() << ": [";
                bool first = true;
                for (const auto& e : v) {
                    os << (first ? "" : ", ") << scalar_text(e);
                    first = false;
                }
                os << "]\n";
            } else {
                os << pad << it.key() << ":\n";
                render_text(v, os, indent + 2);
            }
        }
    } else if (j.is_array()) {
        for (const auto& e : j) {
            if (is_scalar(e)) {
                os << pad << "- " << scalar_text(e) << "\n";
            } else {
                os << pad << "-\n";
                render_text(e, os, indent + 2);
            }
        }
    } else {
        os << pad << scalar_text(j) << "\n";
    }
}

void emit(const Json& report, const CliConfig& cfg) {
    std::ostringstream body;
    if (cfg.format == "text")
        render_text(report, body, 0);
    else
        body << report.dump(2) << "\n";
    std::cout << body.str();
    if (!cfg.out.empty()) {
        std::ofstream f(cfg.out, std::ios::binary);
        if (!f) throw pdo::Error("cannot open output file: " + cfg.out);
        f << body.str();
    }
}

Json base_report(const CliConfig& cfg, const std::string& command) {
    Json j = Json::object();
    j["version"] = pdo::kVersion;
    j["config"] = config_json(cfg, command);
    return j;
}

// ---- input plumbing ----------------------------------------------------------

std::vector<pdo::DiffOp> load_operators(const std::vector<std::string>& exprs,
                                        const std::string& file,
                                        const CliConfig& cfg) {
    pdo::OpGrammar g;
    g.nvars = cfg.nvars;
    g.precision = cfg.precision <= 0 ? pdo::kExact : cfg.precision;
    std::vector<pdo::DiffOp> ops;
    for (const std::string& e : exprs) ops.push_back(pdo::parse_op(e, g));
    if (!file.empty()) {
        std::ifstream f(file);
        if (!f) throw pdo::ParseError("cannot open operator file: " + file);
        Json j = Json::parse(f, nullptr, true, true);
        if (!j.is_array()) throw pdo::ParseError("operator file must hold a JSON array");
        for (const Json& entry : j) {
            if (entry.is_string())
                ops.push_back(pdo::parse_op(entry.get<std::string>(), g));
            else
                ops.push_back(pdo::op_from_json(entry));
        }
    }
    if (ops.empty()) throw pdo::ParseError("no operators supplied");
    return ops;
}

std::vector<std::string> xvar_names(int nvars) {
    std::vector<std::string> names;
    for (int i = 1; i <= nvars; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

std::vector<std::string> xivar_names(int nvars) {
    std::vector<std::string> names;
    for (int i = 1; i <= nvars; ++i) names.push_back("xi" + std::to_string(i));
    return names;
}

pdo::RationalFunction parse_rational(const std::string& text) {
    int depth = 0;
    std::size_t split = std::string::npos;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == '/' && depth == 0) {
            if (split != std::string::npos)
                throw pdo::ParseError("at most one top-level '/' in a rational function");
            split = i;
        }
    }
    pdo::RationalFunction f;
    if (split == std::string::npos) {
        f.num = pdo::parse_poly(text, {"x", "h"});
        f.den = pdo::Poly::constant(2, pdo::Scalar(1));
    } else {
        f.num = pdo::parse_poly(text.substr(0, split), {"x", "h"});
        f.den = pdo::parse_poly(text.substr(split + 1), {"x", "h"});
    }
    return f;
}

pdo::SubspaceUT rewindow(const pdo::SubspaceUT& s, const pdo::Window& w) {
    pdo::SubspaceUT t = s;
    t.window = w;
    t.generators.clear();
    for (const auto& g : s.generators) {
        std::vector<std::pair<pdo::UTLaurent::Key, pdo::Scalar>> terms(
            g.terms().begin(), g.terms().end());
        t.generators.push_back(pdo::UTLaurent::make(w, terms));
    }
    return t;
}

// ---- subcommands --------------------------------------------------------------

int cmd_commute(const std::vector<std::string>& exprs, const std::string& file,
                const CliConfig& cfg) {
    auto ops = load_operators(exprs, file, cfg);
    Json report = base_report(cfg, "commute");
    Json jops = Json::array();
    auto xn = xvar_names(cfg.nvars);
    for (const auto& op : ops) jops.push_back(op.str(xn));
    report["operators"] = jops;
    Json pairs = Json::array();
    bool all_zero = true;
    for (std::size_t i = 0; i < ops.size(); ++i)
        for (std::size_t j = i + 1; j < ops.size(); ++j) {
            pdo::DiffOp c = pdo::op_commutator(ops[i], ops[j]);
            Json entry = Json::object();
            entry["left"] = i + 1;
            entry["right"] = j + 1;
            entry["zero"] = c.is_zero();
            entry["certified_precision"] =
                c.precision() == pdo::kExact ? Json("exact") : Json(c.precision());
            entry["residual"] = c.is_zero() ? "0" : c.str(xn);
            if (!c.is_zero()) all_zero = false;
            pairs.push_back(entry);
        }
    report["pairs"] = pairs;
    report["all_commute"] = all_zero;
    emit(report, cfg);
    return all_zero ? 0 : 2;
}

int cmd_analyze(const std::vector<std::string>& exprs, const std::string& file,
                const std::string& rank, const CliConfig& cfg) {
    auto ops = load_operators(exprs, file, cfg);
    pdo::SpectralConfig sc;
    sc.mmax = cfg.mmax;
    sc.window_lo = cfg.fit_lo;
    sc.window_hi = cfg.fit_hi;
    sc.dmax = cfg.dmax;
    if (!rank.empty()) sc.supplied_rank = pdo::Scalar::from_string(rank);
    pdo::SpectralReport rep = pdo::analyze_ring(ops, sc);

    Json report = base_report(cfg, "analyze");
    if (!rank.empty()) report["config"]["supplied_rank"] = rank;
    auto xin = xivar_names(rep.nvars);
    report["nvars"] = rep.nvars;
    report["certified_precision"] = rep.certified_precision == pdo::kExact
                                        ? Json("exact")
                                        : Json(rep.certified_precision);
    report["orders"] = rep.orders;
    Json syms = Json::array();
    for (const auto& s : rep.symbols) syms.push_back(s.str(xin));
    report["symbols"] = syms;
    Json sc_json = Json::object();
    sc_json["constant_symbols"] = rep.symbol_check.constant_symbols;
    sc_json["no_common_zero"] = rep.symbol_check.no_common_zero;
    sc_json["exact"] = rep.symbol_check.exact;
    if (rep.symbol_check.exact)
        sc_json["resultant"] = rep.symbol_check.resultant.str();
    if (!rep.symbol_check.note.empty()) sc_json["note"] = rep.symbol_check.note;
    Json fam = Json::array();
    for (int i : rep.subfamily) fam.push_back(i + 1);
    sc_json["subfamily"] = fam;
    report["symbol_condition"] = sc_json;
    report["jacobian_nonzero"] = rep.jacobian_nonzero;
    report["transcendence_degree"] = rep.trdeg;
    report["dims"] = rep.table.dims;
    report["delta"] = rep.table.delta;
    report["veronese_degree"] = rep.veronese_d;
    report["hilbert_leading"] = rep.intersection.leading.str();
    report["fit_period"] = rep.intersection.period;
    report["self_intersection"] = rep.intersection.c2.str();
    report["rank_bound"] = rep.intersection.rank.str();
    Json gd = Json::array();
    for (const auto& [sym, deg] : rep.generator_degrees) {
        Json e = Json::object();
        e["degree"] = deg;
        e["symbol"] = sym.str(xin);
        gd.push_back(e);
    }
    report["generator_degrees"] = gd;
    if (rep.coherent) report["coherent_at_supplied_rank"] = *rep.coherent;
    emit(report, cfg);
    return 0;
}

int cmd_schur(const std::string& pair_file, const CliConfig& cfg) {
    pdo::SchurPair pair;
    if (!pair_file.empty()) {
        std::ifstream f(pair_file);
        if (!f) throw pdo::ParseError("cannot open pair file: " + pair_file);
        Json j = Json::parse(f, nullptr, true, true);
        pair = pdo::pair_from_json(j);
    } else {
        int depth = cfg.example_depth > 0 ? cfg.example_depth : 20;
        pair = pdo::example_pair(depth);
    }
    if (cfg.window_tmin != kUnset || cfg.window_tmax != kUnset ||
        cfg.window_umax != kUnset) {
        pdo::Window w = pair.w.window;
        if (cfg.window_tmin != kUnset) w.tmin = cfg.window_tmin;
        if (cfg.window_tmax != kUnset) w.tmax = cfg.window_tmax;
        if (cfg.window_umax != kUnset) w.umax = cfg.window_umax;
        pair.a = rewindow(pair.a, w);
        pair.w = rewindow(pair.w, w);
    }
    long long budget = cfg.budget < 0 ? (1 << 20) : cfg.budget;

    Json report = base_report(cfg, "schur");
    report["pair"] = pdo::pair_to_json(pair);

    auto dims_w = pdo::filtration_dims(pair.w, 1, cfg.nmax, static_cast<int>(budget));
    report["dims_w"] = dims_w;
    report["increments_w"] = pdo::graded_increments(dims_w);

    pdo::RankDetection det =
        pdo::detect_rank(pair.w, cfg.d, cfg.nmax, cfg.rank_search, static_cast<int>(budget));
    Json dj = Json::object();
    dj["r"] = det.r;
    dj["d"] = det.d;
    dj["dims"] = det.dims;
    report["rank"] = dj;

    pdo::StabilityReport stab = pdo::check_stability(
        pair.a, pair.w, cfg.nmax, det.r, static_cast<int>(budget));
    Json sj = Json::object();
    sj["stable"] = stab.stable;
    if (!stab.counterexample.empty()) sj["counterexample"] = stab.counterexample;
    report["stability"] = sj;

    auto witness = pdo::fg_witness(pair.a, pair.w, cfg.nmax, det.r,
                                   static_cast<int>(budget));
    Json wj = Json::array();
    bool finitely_generated = true;
    for (const auto& lvl : witness) {
        Json e = Json::object();
        e["level"] = lvl.level;
        Json members = Json::array();
        for (const auto& m : lvl.witnesses) members.push_back(m.str());
        e["witnesses"] = members;
        if (!lvl.witnesses.empty()) finitely_generated = false;
        wj.push_back(e);
    }
    report["fg_witnesses"] = wj;
    report["finitely_generated_to_horizon"] = finitely_generated;

    auto dims_a = pdo::filtration_dims(pair.a, 1, cfg.nmax, static_cast<int>(budget));
    report["dims_a"] = dims_a;
    auto [leading, period] = pdo::quasi_leading_auto(dims_a, cfg.nmax / 2, cfg.nmax, 2, 6);
    report["hilbert_leading_a"] = leading.str();
    report["fit_period_a"] = period;
    report["self_intersection_a"] = (pdo::Scalar(2) * leading).str();

    emit(report, cfg);
    return 0;
}

int cmd_glue(const std::string& ideal, const std::string& subring,
             const std::string& member, const CliConfig& cfg) {
    pdo::GlueInput in;
    in.ideal_gens = pdo::parse_xh_list(ideal);
    if (!subring.empty()) in.subring_gens = pdo::parse_xh_list(subring);
    in.budget = cfg.budget < 0 ? 10 : static_cast<int>(cfg.budget);
    pdo::GlueResult res = pdo::glue_affine(in);

    Json report = base_report(cfg, "glue");
    report["config"]["ideal"] = ideal;
    report["config"]["subring"] = subring;
    std::vector<std::string> xh = {"x", "h"};
    report["f1"] = res.f1.str(xh);
    Json cert = Json::object();
    cert["f2"] = res.certificate.f2.str(xh);
    cert["k"] = res.certificate.k;
    Json coeffs = Json::array();
    for (const auto& a : res.certificate.coeffs) coeffs.push_back(a.str(xh));
    cert["coeffs"] = coeffs;
    cert["b"] = res.certificate.b.str(xh);
    report["certificate"] = cert;
    Json seeds = Json::array();
    for (const auto& g : res.seed_gens) seeds.push_back(g.str(xh));
    report["seed_generators"] = seeds;
    Json adj = Json::array();
    for (const auto& g : res.adjoined) adj.push_back(g.str(xh));
    report["adjoined"] = adj;
    Json gens = Json::array();
    for (const auto& g : res.algebra.generators) gens.push_back(g.str(xh));
    report["generators"] = gens;
    report["saturated"] = res.saturated;
    report["budget"] = res.budget;
    auto cond = pdo::conductor(res.algebra, in.budget);
    Json cj = Json::array();
    for (const auto& g : cond) cj.push_back(g.str(xh));
    report["conductor"] = cj;
    if (!member.empty()) {
        pdo::Poly f = pdo::parse_poly(member, xh);
        report["member"] = member;
        report["member_in_glued_ring"] = pdo::glued_membership(f, in);
    }
    emit(report, cfg);
    return 0;
}

int cmd_cm(const std::string& algebra, const CliConfig& cfg) {
    pdo::MonomialAlgebra a;
    a.generators = pdo::parse_xh_list(algebra);
    int budget = cfg.budget < 0 ? 12 : static_cast<int>(cfg.budget);
    pdo::S2Result res = pdo::s2_closure(a, budget);

    Json report = base_report(cfg, "cm");
    report["config"]["algebra"] = algebra;
    std::vector<std::string> xh = {"x", "h"};
    Json input = Json::array();
    for (const auto& g : a.generators) input.push_back(g.str(xh));
    report["input_generators"] = input;
    report["is_cm"] = res.trace.empty();
    Json gens = Json::array();
    for (const auto& g : res.closure.generators) gens.push_back(g.str(xh));
    report["closure_generators"] = gens;
    Json cond = Json::array();
    for (const auto& g : res.conductor_gens) cond.push_back(g.str(xh));
    report["conductor"] = cond;
    Json trace = Json::array();
    for (const auto& step : res.trace) {
        Json e = Json::object();
        e["iteration"] = step.iteration;
        Json adj = Json::array();
        for (const auto& z : step.adjoined) adj.push_back(z.str(xh));
        e["adjoined"] = adj;
        trace.push_back(e);
    }
    report["trace"] = trace;
    report["budget"] = budget;
    emit(report, cfg);
    return 0;
}

int cmd_cycle(const std::string& fn, const std::string& primes, const CliConfig& cfg) {
    pdo::RationalFunction f = parse_rational(fn);
    std::vector<pdo::CurveLocalization> locs;
    for (const auto& p : pdo::parse_xh_list(primes))
        locs.emplace_back(p);
    pdo::WeilCycle z = pdo::cycle_of(f, locs);

    Json report = base_report(cfg, "cycle");
    report["config"]["fn"] = fn;
    report["config"]["primes"] = primes;
    std::vector<std::string> xh = {"x", "h"};
    Json fj = Json::object();
    fj["num"] = f.num.str(xh);
    fj["den"] = f.den.str(xh);
    report["fn"] = fj;
    Json comps = Json::array();
    for (const auto& [prime, mult] : z.components) {
        Json e = Json::object();
        e["prime"] = prime.str(xh);
        e["multiplicity"] = mult;
        comps.push_back(e);
    }
    report["cycle"] = comps;
    emit(report, cfg);
    return 0;
}

int cmd_selftest(const CliConfig& cfg) {
    auto results = pdo::run_acceptance(cfg.seed);
    Json report = base_report(cfg, "selftest");
    Json arr = Json::array();
    bool all = true;
    for (const auto& r : results) {
        Json e = Json::object();
        e["id"] = r.id;
        e["name"] = r.name;
        e["pass"] = r.pass;
        e["detail"] = r.detail;
        arr.push_back(e);
        if (!r.pass) all = false;
    }
    report["criteria"] = arr;
    report["all_pass"] = all;
    emit(report, cfg);
    return all ? 0 : 2;
}

int negative_kind_exit(const pdo::Error& e, const std::string& kind,
                       const CliConfig& cfg, const std::string& command) {
    Json report = base_report(cfg, command);
    report["verdict"] = "negative";
    Json err = Json::object();
    err["kind"] = kind;
    err["message"] = e.what();
    report["error"] = err;
    emit(report, cfg);
    return 2;
}

int error_exit(const std::string& message, const CliConfig& cfg,
               const std::string& command) {
    Json report = base_report(cfg, command);
    report["verdict"] = "error";
    report["message"] = message;
    emit(report, cfg);
    std::cerr << "error: " << message << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computer algebra for commuting partial differential operators"};
    app.require_subcommand(1);

    CliConfig cfg;
    std::vector<std::string> op_exprs;
    std::string op_file, rank, pair_file, ideal, subring, member, algebra, fn, primes;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", cfg.seed, "seed for randomized checks");
        sub->add_option("--out", cfg.out, "also write the report to this file");
        sub->add_option("--format", cfg.format, "json or text")
            ->check(CLI::IsMember({"json", "text"}));
    };

    CLI::App* commute = app.add_subcommand("commute", "pairwise commutators of a family");
    commute->add_option("--op", op_exprs, "operator expression (repeatable)");
    commute->add_option("--file", op_file, "JSON array of operators/expressions");
    commute->add_option("--nvars", cfg.nvars, "number of x variables");
    commute->add_option("--precision", cfg.precision, "x-adic precision (0 = exact)");
    add_common(commute);

    CLI::App* analyze = app.add_subcommand("analyze", "spectral data of a commuting family");
    analyze->add_option("--op", op_exprs, "operator expression (repeatable)");
    analyze->add_option("--file", op_file, "JSON array of operators/expressions");
    analyze->add_option("--nvars", cfg.nvars, "number of x variables");
    analyze->add_option("--precision", cfg.precision, "x-adic precision (0 = exact)");
    analyze->add_option("--mmax", cfg.mmax, "top filtration degree");
    analyze->add_option("--fit-lo", cfg.fit_lo, "Hilbert fit window start (0 = auto)");
    analyze->add_option("--fit-hi", cfg.fit_hi, "Hilbert fit window end (0 = auto)");
    analyze->add_option("--dmax", cfg.dmax, "largest Veronese degree tried");
    analyze->add_option("--rank", rank, "supplied sheaf rank for the coherence flag");
    add_common(analyze);

    CLI::App* schur = app.add_subcommand("schur", "diagnostics of a Schur pair");
    schur->add_option("--pair", pair_file, "pair JSON file");
    schur->add_option("--example", cfg.example_depth,
                      "use the worked pair, sized for this depth");
    schur->add_option("--nmax", cfg.nmax, "filtration horizon");
    schur->add_option("--d", cfg.d, "level step of the detection grid");
    schur->add_option("--rank-search", cfg.rank_search, "largest rank tried");
    schur->add_option("--budget", cfg.budget, "monomial search budget");
    schur->add_option("--window-tmin", cfg.window_tmin, "override window floor");
    schur->add_option("--window-tmax", cfg.window_tmax, "override window ceiling");
    schur->add_option("--window-umax", cfg.window_umax, "override window u bound");
    add_common(schur);

    CLI::App* glue = app.add_subcommand("glue", "glue a subring along an ideal");
    glue->add_option("--ideal", ideal, "ideal generators, comma-separated")->required();
    glue->add_option("--subring", subring, "subring generators, comma-separated");
    glue->add_option("--member", member, "test this polynomial for membership");
    glue->add_option("--budget", cfg.budget, "degree budget (default 10)");
    add_common(glue);

    CLI::App* cm = app.add_subcommand("cm", "S2 closure and Cohen-Macaulay test");
    cm->add_option("--algebra", algebra, "algebra generators, comma-separated")->required();
    cm->add_option("--budget", cfg.budget, "degree budget (default 12)");
    add_common(cm);

    CLI::App* cycle = app.add_subcommand("cycle", "cycle of a rational function");
    cycle->add_option("--fn", fn, "rational function, e.g. \"x^2\" or \"x/h\"")->required();
    cycle->add_option("--primes", primes, "curve primes, comma-separated")->required();
    add_common(cycle);

    CLI::App* selftest = app.add_subcommand("selftest", "run the acceptance suite");
    add_common(selftest);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    std::string command = app.get_subcommands().front()->get_name();
    try {
        if (commute->parsed()) return cmd_commute(op_exprs, op_file, cfg);
        if (analyze->parsed()) return cmd_analyze(op_exprs, op_file, rank, cfg);
        if (schur->parsed()) return cmd_schur(pair_file, cfg);
        if (glue->parsed()) return cmd_glue(ideal, subring, member, cfg);
        if (cm->parsed()) return cmd_cm(algebra, cfg);
        if (cycle->parsed()) return cmd_cycle(fn, primes, cfg);
        if (selftest->parsed()) return cmd_selftest(cfg);
    } catch (const pdo::CommutationFailed& e) {
        return negative_kind_exit(e, "commutation_failed", cfg, command);
    } catch (const pdo::NotStabilized& e) {
        return negative_kind_exit(e, "not_stabilized", cfg, command);
    } catch (const pdo::NoRankFits& e) {
        return negative_kind_exit(e, "no_rank_fits", cfg, command);
    } catch (const pdo::NoNoetherPair& e) {
        return negative_kind_exit(e, "no_noether_pair", cfg, command);
    } catch (const pdo::NoConductorFound& e) {
        return negative_kind_exit(e, "no_conductor", cfg, command);
    } catch (const pdo::Error& e) {
        return error_exit(e.what(), cfg, command);
    } catch (const std::exception& e) {
        return error_exit(e.what(), cfg, command);
    }
    return 1;
}
