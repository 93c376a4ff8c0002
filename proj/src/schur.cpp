#include "pdo/schur.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "pdo/linalg.hpp"

namespace pdo {

namespace {

// Valuation-first key order: pivots sit at the lowest (t, u) position, so an
// echelon basis splits by filtration level.
using UTKey = std::pair<int, int>;  // (t-level, u-exponent)
struct KeyGreater {
    bool operator()(const UTKey& a, const UTKey& b) const { return b < a; }
};
using UTSpan = SparseSpan<UTKey, KeyGreater>;

UTSpan::Row ut_row(const UTLaurent& f) {
    UTSpan::Row r;
    for (const auto& [k, c] : f.terms()) r.emplace(k, c);
    return r;
}

// Least stored t-level; requires a nonzero element whose support stays above
// the window floor (otherwise the valuation is not certified).
int depth_of(const UTLaurent& f) {
    if (f.is_zero()) throw ZeroInput("level of the zero element");
    int lmin = f.terms().begin()->first.first;  // t-major ascending storage
    if (lmin == f.window().tmin)
        throw WindowTooSmall("support touches the window floor");
    return -lmin;
}

int min_level_index(const UTLaurent& f, int r) {
    int v = depth_of(f);
    if (v <= 0) return 0;
    return (v + r - 1) / r;
}

std::vector<UTLaurent> rule_members(const TriangleRule& rule, const Window& w,
                                    int depth) {
    std::vector<UTLaurent> out;
    for (int i = rule.imin; i <= depth; i += std::max(rule.step, 1)) {
        if (i < 0) continue;
        if (-i <= w.tmin)  // members must sit strictly above the floor so
                           // their valuations stay certified
            throw WindowTooSmall("family member t^-" + std::to_string(i) +
                                 " is not strictly above the window floor");
        const int jmax = rule.slope * i;
        if (jmax > w.umax)
            throw WindowTooSmall("family member u^" + std::to_string(jmax) +
                                 " t^-" + std::to_string(i) +
                                 " exceeds the u ceiling");
        for (int j = 0; j <= jmax; ++j)
            out.push_back(UTLaurent::monomial(w, j, -i));
    }
    return out;
}

std::vector<UTLaurent> algebra_monomials(const SubspaceUT& s, int depth,
                                         int budget) {
    std::vector<UTLaurent> gens;
    for (const auto& g : s.generators)
        if (!g.is_zero()) gens.push_back(g);
    std::vector<int> value, ucontent;
    for (const auto& g : gens) {
        value.push_back(depth_of(g));
        int umin = g.terms().begin()->first.second;
        for (const auto& [k, c] : g.terms()) umin = std::min(umin, k.second);
        ucontent.push_back(umin);
    }
    std::vector<UTLaurent> out;
    UTLaurent one = UTLaurent::monomial(s.window, 0, 0);
    out.push_back(one);
    std::function<void(std::size_t, const UTLaurent&, int)> rec =
        [&](std::size_t pos, const UTLaurent& prod, int total) {
            if (pos == gens.size()) return;
            rec(pos + 1, prod, total);
            UTLaurent cur = prod;
            int count = total;
            while (true) {
                // Bound the exponent: by remaining t-depth for deepening
                // generators, by the u ceiling for u-raising ones; a
                // generator doing neither cannot be bounded.
                if (value[pos] >= 1) {
                    if (depth_of(cur) + value[pos] > depth) break;
                } else if (ucontent[pos] >= 1) {
                    int umin = cur.terms().begin()->first.second;
                    for (const auto& [k, c] : cur.terms())
                        umin = std::min(umin, k.second);
                    if (umin + ucontent[pos] > s.window.umax) break;
                } else {
                    throw BudgetExceeded(
                        "algebra generator neither deepens t nor raises u; "
                        "its powers cannot be enumerated");
                }
                if (count + 1 > budget)
                    throw BudgetExceeded(
                        "monomial exponent budget reached inside the level");
                cur = ut_mul_strict(cur, gens[pos]);
                count += 1;
                if (cur.is_zero()) break;
                out.push_back(cur);
                rec(pos + 1, cur, count);
            }
        };
    rec(0, one, 0);
    // Keep only members within the requested depth.
    std::vector<UTLaurent> kept;
    for (const auto& m : out)
        if (depth_of(m) <= depth) kept.push_back(m);
    return kept;
}

}  // namespace

std::vector<UTLaurent> basis_at_level(const SubspaceUT& s, int depth,
                                      int budget) {
    if (depth < 0) throw Error("negative filtration depth");
    if (s.kind == SubspaceUT::Kind::kAlgebra) {
        if (s.rule)
            throw Error("monomial rules describe module subspaces only");
        return algebra_monomials(s, depth, budget);
    }
    std::vector<UTLaurent> out;
    for (const auto& g : s.generators) {
        if (g.is_zero()) continue;
        if (depth_of(g) <= depth) out.push_back(g);
    }
    if (s.rule) {
        auto fam = rule_members(*s.rule, s.window, depth);
        out.insert(out.end(), fam.begin(), fam.end());
    }
    return out;
}

std::vector<int> filtration_dims(const SubspaceUT& s, int r, int nmax,
                                 int budget) {
    if (r < 1 || nmax < 0) throw Error("bad filtration parameters");
    auto members = basis_at_level(s, nmax * r, budget);
    std::vector<std::vector<UTLaurent>> bucket(static_cast<std::size_t>(nmax) + 1);
    for (auto& m : members) {
        int n0 = min_level_index(m, r);
        if (n0 <= nmax) bucket[static_cast<std::size_t>(n0)].push_back(std::move(m));
    }
    UTSpan span;
    std::vector<int> dims;
    for (int n = 0; n <= nmax; ++n) {
        for (const auto& m : bucket[static_cast<std::size_t>(n)])
            span.insert(ut_row(m));
        dims.push_back(static_cast<int>(span.rank()));
    }
    return dims;
}

StabilityReport check_stability(const SubspaceUT& a, const SubspaceUT& w,
                                int nmax, int r, int budget) {
    if (a.kind != SubspaceUT::Kind::kAlgebra)
        throw Error("stability check expects an algebra on the left");
    StabilityReport rep;
    const int horizon = nmax * r;
    auto wmem = basis_at_level(w, horizon, budget);
    // Cumulative level spans of W.
    std::vector<std::vector<UTLaurent>> bucket(static_cast<std::size_t>(nmax) + 1);
    for (const auto& m : wmem)
        bucket[static_cast<std::size_t>(min_level_index(m, r))].push_back(m);
    std::vector<UTSpan> spans(static_cast<std::size_t>(nmax) + 1);
    {
        UTSpan acc;
        for (int n = 0; n <= nmax; ++n) {
            for (const auto& m : bucket[static_cast<std::size_t>(n)])
                acc.insert(ut_row(m));
            spans[static_cast<std::size_t>(n)] = acc;
        }
    }
    auto amons = basis_at_level(a, horizon, budget);
    for (const auto& am : amons) {
        if (depth_of(am) <= 0 && am.terms().size() == 1 &&
            !am.coeff(0, 0).is_zero())
            continue;  // the unit: trivial products
        for (const auto& wm : wmem) {
            UTLaurent prod;
            try {
                prod = ut_mul_strict(am, wm);
            } catch (const EmptyResultWindow&) {
                throw WindowTooSmall("product window collapsed during the "
                                     "stability check");
            }
            if (prod.is_zero()) continue;
            int v = depth_of(prod);
            if (v > horizon) continue;  // beyond the checkable horizon
            int level = v <= 0 ? 0 : (v + r - 1) / r;
            if (!spans[static_cast<std::size_t>(level)].contains(ut_row(prod))) {
                rep.stable = false;
                std::ostringstream msg;
                msg << "(" << am.str() << ") * (" << wm.str()
                    << ") escapes the level-" << level << " span";
                rep.counterexample = msg.str();
                return rep;
            }
        }
    }
    rep.stable = true;
    return rep;
}

RankDetection detect_rank(const SubspaceUT& w, int d, int nmax, int rmax,
                          int budget) {
    if (d < 1 || nmax < 1 || rmax < 1) throw Error("bad rank search parameters");
    std::string window_note;
    for (int r = 1; r <= rmax; ++r) {
        std::vector<int> dims;
        try {
            dims = filtration_dims(w, 1, nmax * d * r, budget);
        } catch (const WindowTooSmall& e) {
            window_note = e.what();
            break;  // deeper candidates need an even larger window
        }
        bool ok = true;
        for (int n = 1; n <= nmax && ok; ++n) {
            const long m = static_cast<long>(n) * d * r;
            const long expect = (m + 1) * (m + 2) / 2;
            if (dims[static_cast<std::size_t>(m)] != expect) ok = false;
        }
        if (ok) {
            RankDetection out;
            out.r = r;
            out.d = d;
            out.dims = std::move(dims);
            return out;
        }
    }
    throw NoRankFits(window_note.empty()
                         ? "no rank up to " + std::to_string(rmax) +
                               " matches the filtration dimensions"
                         : "no testable rank fits (window limit: " +
                               window_note + ")");
}

std::vector<WitnessLevel> fg_witness(const SubspaceUT& a, const SubspaceUT& w,
                                     int nmax, int r, int budget) {
    if (a.kind != SubspaceUT::Kind::kAlgebra)
        throw Error("finite-generation check expects an algebra on the left");
    const int horizon = nmax * r;
    // A-monomials with a little slack beyond the horizon: they can only add
    // to the generated span, making the witness claim more conservative.
    auto amons = basis_at_level(a, horizon + 4, budget);
    auto wmem = basis_at_level(w, horizon, budget);
    std::vector<std::vector<UTLaurent>> bucket(static_cast<std::size_t>(nmax) + 1);
    for (const auto& m : wmem)
        bucket[static_cast<std::size_t>(min_level_index(m, r))].push_back(m);
    // Independent new members per level.
    std::vector<std::vector<UTLaurent>> fresh(static_cast<std::size_t>(nmax) + 1);
    {
        UTSpan acc;
        for (int n = 0; n <= nmax; ++n)
            for (const auto& m : bucket[static_cast<std::size_t>(n)])
                if (acc.insert(ut_row(m)))
                    fresh[static_cast<std::size_t>(n)].push_back(m);
    }
    std::vector<WitnessLevel> out;
    UTSpan generated;  // span of A-monomials times members of W_{n-1}
    for (int n = 1; n <= nmax; ++n) {
        for (const auto& wm : fresh[static_cast<std::size_t>(n - 1)])
            for (const auto& am : amons) {
                UTLaurent prod;
                try {
                    prod = ut_mul_strict(am, wm);
                } catch (const EmptyResultWindow&) {
                    throw WindowTooSmall(
                        "product window collapsed during the witness search");
                }
                if (!prod.is_zero()) generated.insert(ut_row(prod));
            }
        WitnessLevel lvl;
        lvl.level = n;
        for (const auto& wm : fresh[static_cast<std::size_t>(n)])
            if (!generated.contains(ut_row(wm))) lvl.witnesses.push_back(wm);
        out.push_back(std::move(lvl));
    }
    return out;
}

std::vector<int> graded_increments(const std::vector<int>& dims) {
    std::vector<int> out;
    for (std::size_t i = 0; i < dims.size(); ++i)
        out.push_back(i == 0 ? dims[0] : dims[i] - dims[i - 1]);
    return out;
}

Json subspace_to_json(const SubspaceUT& s) {
    Json j;
    j["kind"] = s.kind == SubspaceUT::Kind::kAlgebra ? "algebra" : "module";
    j["window"] = {{"tmin", s.window.tmin},
                   {"tmax", s.window.tmax},
                   {"umax", s.window.umax}};
    Json gens = Json::array();
    for (const auto& g : s.generators) gens.push_back(ut_to_json(g));
    j["generators"] = gens;
    if (s.rule) {
        j["rule"] = {{"type", "triangle"},
                     {"params",
                      {{"imin", s.rule->imin},
                       {"step", s.rule->step},
                       {"slope", s.rule->slope}}}};
    }
    return j;
}

SubspaceUT subspace_from_json(const Json& j) {
    SubspaceUT s;
    std::string kind = require(j, "kind").get<std::string>();
    if (kind == "algebra")
        s.kind = SubspaceUT::Kind::kAlgebra;
    else if (kind == "module")
        s.kind = SubspaceUT::Kind::kModule;
    else
        throw ParseError("subspace kind must be \"algebra\" or \"module\"");
    const Json& w = require(j, "window");
    s.window.tmin = require(w, "tmin").get<int>();
    s.window.tmax = require(w, "tmax").get<int>();
    s.window.umax = require(w, "umax").get<int>();
    if (j.contains("generators"))
        for (const auto& g : j["generators"]) {
            UTLaurent e = ut_from_json(g);
            // Re-anchor every element in the shared window.
            std::vector<std::pair<UTLaurent::Key, Scalar>> terms(
                e.terms().begin(), e.terms().end());
            s.generators.push_back(UTLaurent::make(s.window, terms));
        }
    if (j.contains("rule") && !j["rule"].is_null()) {
        const Json& rule = j["rule"];
        if (require(rule, "type").get<std::string>() != "triangle")
            throw ParseError("unknown family rule type");
        const Json& p = require(rule, "params");
        TriangleRule t;
        t.imin = require(p, "imin").get<int>();
        t.step = require(p, "step").get<int>();
        t.slope = require(p, "slope").get<int>();
        if (t.step < 1 || t.imin < 0 || t.slope < 0)
            throw ParseError("triangle rule parameters out of range");
        s.rule = t;
    }
    return s;
}

Json pair_to_json(const SchurPair& p) {
    Json j;
    j["A"] = subspace_to_json(p.a);
    j["W"] = subspace_to_json(p.w);
    return j;
}

SchurPair pair_from_json(const Json& j) {
    SchurPair p;
    p.a = subspace_from_json(require(j, "A"));
    p.w = subspace_from_json(require(j, "W"));
    if (p.a.kind != SubspaceUT::Kind::kAlgebra)
        throw ParseError("pair field \"A\" must be an algebra subspace");
    return p;
}

SchurPair example_pair(int depth) {
    Window w{-(4 * depth + 10), 4, 3 * depth};
    SchurPair p;
    p.a.kind = SubspaceUT::Kind::kAlgebra;
    p.a.window = w;
    p.a.generators.push_back(UTLaurent::monomial(w, 0, -2));  // t^-2
    p.a.generators.push_back(UTLaurent::monomial(w, 0, -3));  // t^-3
    p.a.generators.push_back(UTLaurent::monomial(w, 1, -2));  // u t^-2
    p.w.kind = SubspaceUT::Kind::kModule;
    p.w.window = w;
    p.w.generators.push_back(
        UTLaurent::make(w, {{{0, 0}, Scalar(1)}, {{1, 0}, Scalar(1)}}));  // 1+t
    p.w.rule = TriangleRule{1, 1, 1};
    return p;
}

}  // namespace pdo
