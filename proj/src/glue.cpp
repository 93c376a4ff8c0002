#include "pdo/glue.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <utility>

#include "pdo/parser.hpp"

namespace pdo {

namespace {

Poly make_monic(const Poly& f) {
    if (f.is_zero()) return f;
    return f.scaled(inverse(f.leading_term().second));
}

Poly row_to_poly(const SparseSpan<Exp, GradedLexLess>::Row& row, int nvars) {
    Poly p(nvars);
    for (const auto& [e, c] : row) p.add_term(e, c);
    return p;
}

// S-polynomial of two monic polynomials under graded lex.
Poly s_poly(const Poly& f, const Poly& g) {
    const Exp& a = f.leading_term().first;
    const Exp& b = g.leading_term().first;
    Exp lcm(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) lcm[i] = std::max(a[i], b[i]);
    return f.mul_monomial(exp_sub(lcm, a), Scalar(1)) -
           g.mul_monomial(exp_sub(lcm, b), Scalar(1));
}

// Ordering used when presenting generator lists: degree first, then the
// leading exponent with the earlier variable dominating (so x^2 precedes x*h
// precedes h^2), then a full term-by-term comparison as tie break.
bool display_less(const Poly& f, const Poly& g) {
    if (f.is_zero() != g.is_zero()) return g.is_zero() ? false : true;
    if (f.is_zero()) return false;
    int df = total_degree(f.leading_term().first);
    int dg = total_degree(g.leading_term().first);
    if (df != dg) return df < dg;
    if (f.leading_term().first != g.leading_term().first)
        return f.leading_term().first > g.leading_term().first;
    auto it = f.terms().rbegin();
    auto jt = g.terms().rbegin();
    for (; it != f.terms().rend() && jt != g.terms().rend(); ++it, ++jt) {
        if (it->first != jt->first) return it->first > jt->first;
        if (it->second != jt->second) return it->second < jt->second;
    }
    return f.term_count() < g.term_count();
}

// All products of the generators with total degree <= cap, memoized over
// exponent vectors and visited in a deterministic order. Includes 1.
class ProductTable {
  public:
    ProductTable(const std::vector<Poly>& gens, int nvars, int cap)
        : nvars_(nvars), cap_(cap) {
        for (const Poly& g : gens) {
            if (g.is_zero() || g.is_constant()) continue;  // constants add nothing
            gens_.push_back(g);
        }
        Exp none(gens_.size(), 0);
        cache_[none] = Poly::constant(nvars_, Scalar(1));
        std::vector<int> e(gens_.size(), 0);
        walk(e, 0, 0);
    }

    // Products in the deterministic enumeration order, paired with the raw
    // polynomial (not reduced); degree <= cap by construction.
    const std::vector<Poly>& products() const { return products_; }

  private:
    void walk(std::vector<int>& e, std::size_t pos, int deg) {
        if (pos == gens_.size()) {
            products_.push_back(product_of(e));
            return;
        }
        int gd = gens_[pos].degree();
        for (int k = 0; deg + k * gd <= cap_; ++k) {
            e[pos] = k;
            walk(e, pos + 1, deg + k * gd);
        }
        e[pos] = 0;
    }

    const Poly& product_of(const std::vector<int>& e) {
        auto it = cache_.find(e);
        if (it != cache_.end()) return it->second;
        std::vector<int> prev = e;
        std::size_t i = 0;
        while (prev[i] == 0) ++i;
        --prev[i];
        Poly p = product_of(prev) * gens_[i];
        return cache_.emplace(e, std::move(p)).first->second;
    }

    int nvars_;
    int cap_;
    std::vector<Poly> gens_;
    std::map<std::vector<int>, Poly> cache_;
    std::vector<Poly> products_;
};

// The degree-bounded slice of the ideal: monomial multiples of the reduced
// basis elements. Under graded lex these span every ideal element of degree
// <= cap.
std::vector<Poly> ideal_slice(const std::vector<Poly>& basis, int nvars, int cap) {
    std::vector<Poly> out;
    for (const Poly& g : basis) {
        int room = cap - g.degree();
        if (room < 0) continue;
        for (int a = 0; a <= room; ++a)
            for (int b = 0; a + b <= room; ++b) {
                Exp e(nvars, 0);
                e[0] = a;
                e[1] = b;
                out.push_back(g.mul_monomial(e, Scalar(1)));
            }
    }
    return out;
}

// v is integral over k[f1, f2] when some power v^k falls in the span of
// lower powers times monomials in f1, f2 (any such relation is monic in v).
bool variable_is_integral(const Poly& f1, const Poly& f2, int var, int budget) {
    int nvars = f1.nvars();
    Poly v = Poly::variable(nvars, var);
    int d1 = f1.degree(), d2 = f2.degree();
    for (int k = 1; k <= budget; ++k) {
        SparseSpan<Exp, GradedLexLess> span;
        Poly vk = Poly::constant(nvars, Scalar(1));
        for (int i = 0; i < k; ++i) vk = vk * v;
        Poly p1 = Poly::constant(nvars, Scalar(1));
        for (int s = 0; s * d1 <= budget + k; ++s) {
            Poly p12 = p1;
            for (int t = 0; s * d1 + t * d2 <= budget + k; ++t) {
                Poly term = p12;
                for (int j = 0; j < k && term.degree() <= budget + k; ++j) {
                    if (j > 0) term = term * v;
                    if (term.degree() <= budget + k) span.insert(term.terms());
                }
                p12 = p12 * f2;
            }
            p1 = p1 * f1;
        }
        if (span.contains(vk.terms())) return true;
    }
    return false;
}

std::vector<Poly> subring_monomials(const std::vector<Poly>& subring_gens,
                                    int nvars, int cap) {
    ProductTable table(subring_gens, nvars, cap);
    return table.products();
}

MonicCertificate monic_certificate(const std::vector<Poly>& ideal_basis,
                                   const std::vector<Poly>& subring_gens,
                                   const Poly& f2, int budget) {
    int nvars = f2.nvars();
    std::vector<Poly> rmons = subring_monomials(subring_gens, nvars, budget);
    int d2 = f2.degree();
    for (int k = 1; k <= budget; ++k) {
        TrackedSpan<Exp, GradedLexLess> span;
        std::vector<std::pair<int, Poly>> labels;  // (i, r): the vector r * f2^(k-i)
        std::vector<Poly> powers(k);               // f2^(k-i) for i = 1..k
        Poly pw = Poly::constant(nvars, Scalar(1));
        for (int i = k; i >= 1; --i) {
            powers[i - 1] = pw;
            if (i > 1) pw = pw * f2;
        }
        for (int i = 1; i <= k; ++i) {
            for (const Poly& r : rmons) {
                if (r.degree() + (k - i) * d2 > budget + k * d2) continue;
                Poly vec = normal_form(r * powers[i - 1], ideal_basis);
                labels.emplace_back(i, r);
                span.insert(vec.terms());
            }
        }
        Poly target = normal_form(pw * f2, ideal_basis);  // pw holds f2^(k-1) here
        auto sol = span.solve(target.terms());
        if (!sol) continue;
        MonicCertificate cert;
        cert.f2 = f2;
        cert.k = k;
        cert.coeffs.assign(k, Poly(nvars));
        for (const auto& [idx, c] : *sol) {
            const auto& [i, r] = labels[static_cast<std::size_t>(idx)];
            cert.coeffs[i - 1] += r.scaled(-c);
        }
        Poly b = pw * f2;
        for (int i = 1; i <= k; ++i) b += cert.coeffs[i - 1] * powers[i - 1];
        if (!normal_form(b, ideal_basis).is_zero())
            throw Error("monic certificate failed its own ideal check");
        cert.b = b;
        return cert;
    }
    throw BudgetExceeded("no monic relation for the Noether partner within the budget");
}

}  // namespace

std::vector<Poly> minimal_generators(std::vector<Poly> gens, int budget) {
    for (Poly& g : gens) g = make_monic(g);
    std::sort(gens.begin(), gens.end(), display_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    // Drop redundant generators, largest first, re-testing after each removal.
    for (std::size_t i = gens.size(); i-- > 0;) {
        std::vector<Poly> rest;
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (j != i) rest.push_back(gens[j]);
        auto span = algebra_span(rest, budget);
        if (span_contains(span, gens[i])) gens = std::move(rest);
    }
    return gens;
}

std::vector<Poly> groebner(std::vector<Poly> gens) {
    std::vector<Poly> basis;
    for (const Poly& g : gens)
        if (!g.is_zero()) basis.push_back(make_monic(g));
    if (basis.empty()) return basis;
    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);
    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        Poly s = reduce(s_poly(basis[i], basis[j]), basis);
        if (s.is_zero()) continue;
        s = make_monic(s);
        for (std::size_t t = 0; t < basis.size(); ++t) pairs.emplace_back(t, basis.size());
        basis.push_back(s);
    }
    // Inter-reduce to the unique reduced basis.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            std::vector<Poly> rest;
            for (std::size_t j = 0; j < basis.size(); ++j)
                if (j != i) rest.push_back(basis[j]);
            Poly r = reduce(basis[i], rest);
            if (r.is_zero()) {
                basis = std::move(rest);
                changed = true;
                break;
            }
            r = make_monic(r);
            if (r != basis[i]) {
                basis[i] = r;
                changed = true;
            }
        }
    }
    std::sort(basis.begin(), basis.end(), display_less);
    return basis;
}

Poly normal_form(const Poly& f, const std::vector<Poly>& basis) {
    return reduce(f, basis);
}

SparseSpan<Exp, GradedLexLess> algebra_span(const std::vector<Poly>& gens, int degree) {
    int nvars = gens.empty() ? 2 : gens.front().nvars();
    ProductTable table(gens, nvars, degree);
    SparseSpan<Exp, GradedLexLess> span;
    for (const Poly& p : table.products()) span.insert(p.terms());
    return span;
}

bool span_contains(const SparseSpan<Exp, GradedLexLess>& span, const Poly& f) {
    return span.contains(f.terms());
}

GlueResult glue_affine(const GlueInput& in) {
    if (in.ideal_gens.empty()) throw ZeroInput("the ideal needs at least one generator");
    int nvars = in.ideal_gens.front().nvars();
    if (nvars != 2) throw Error("glueing is implemented over two ambient variables");
    std::vector<Poly> ideal_basis = groebner(in.ideal_gens);
    if (ideal_basis.empty()) throw ZeroInput("the ideal is zero");
    for (const Poly& g : ideal_basis)
        if (g.is_constant()) throw Error("the ideal is the unit ideal");

    Poly f1;
    for (const Poly& g : in.ideal_gens)
        if (!g.is_zero()) {
            f1 = make_monic(g);
            break;
        }

    // Noether partner: the first candidate making both variables integral
    // over k[f1, f2].
    std::vector<Poly> candidates = {
        Poly::variable(nvars, 0),
        Poly::variable(nvars, 1),
        Poly::variable(nvars, 0) + Poly::variable(nvars, 1),
        Poly::variable(nvars, 0) - Poly::variable(nvars, 1),
    };
    Poly f2;
    bool found = false;
    for (const Poly& cand : candidates) {
        if (variable_is_integral(f1, cand, 0, in.budget) &&
            variable_is_integral(f1, cand, 1, in.budget)) {
            f2 = cand;
            found = true;
            break;
        }
    }
    if (!found)
        throw NoNoetherPair("no linear partner makes the plane integral over the pair");

    GlueResult out;
    out.f1 = f1;
    out.budget = in.budget;
    out.certificate = monic_certificate(ideal_basis, in.subring_gens, f2, in.budget);

    std::vector<Poly> gens;
    auto push_seed = [&](const Poly& p) {
        if (p.is_zero() || p.is_constant()) return;
        gens.push_back(p);
        out.seed_gens.push_back(p);
    };
    push_seed(f1);
    for (const Poly& a : out.certificate.coeffs) push_seed(a);
    push_seed(out.certificate.b);

    // Target: the degreewise span of R + I up to the budget.
    SparseSpan<Exp, GradedLexLess> target;
    for (const Poly& r : subring_monomials(in.subring_gens, nvars, in.budget))
        target.insert(r.terms());
    for (const Poly& p : ideal_slice(ideal_basis, nvars, in.budget))
        target.insert(p.terms());

    for (int round = 0; round <= 4 * in.budget; ++round) {
        auto span = algebra_span(gens, in.budget);
        for (const auto& row : span.basis())
            if (!target.contains(row))
                throw Error("seed algebra escaped the glued ring; ideal data inconsistent");
        // Adjoin everything missing at the lowest incomplete degree.
        std::vector<Poly> missing;
        int missing_degree = -1;
        for (const auto& row : target.basis()) {
            if (span.contains(row)) continue;
            Poly p = row_to_poly(row, nvars);
            if (missing_degree < 0) missing_degree = p.degree();
            if (p.degree() != missing_degree) continue;
            missing.push_back(p);
        }
        if (missing.empty()) {
            out.saturated = true;
            break;
        }
        for (const Poly& p : missing) {
            gens.push_back(p);
            out.adjoined.push_back(p);
        }
    }
    if (!out.saturated)
        throw BudgetExceeded("saturation did not stabilize within the round limit");

    out.algebra.generators = minimal_generators(gens, in.budget);
    return out;
}

bool glued_membership(const Poly& f, const GlueInput& in) {
    if (in.ideal_gens.empty()) throw ZeroInput("the ideal needs at least one generator");
    int nvars = in.ideal_gens.front().nvars();
    std::vector<Poly> ideal_basis = groebner(in.ideal_gens);
    int cap = std::max(f.degree(), in.budget);
    SparseSpan<Exp, GradedLexLess> image;
    for (const Poly& r : subring_monomials(in.subring_gens, nvars, cap))
        image.insert(normal_form(r, ideal_basis).terms());
    return image.contains(normal_form(f, ideal_basis).terms());
}

std::vector<Poly> conductor(const MonomialAlgebra& a, int budget) {
    if (a.generators.empty()) throw ZeroInput("the algebra needs generators");
    int nvars = a.generators.front().nvars();
    if (nvars != 2) throw Error("the conductor is implemented over two ambient variables");
    auto span = algebra_span(a.generators, budget);
    int half = budget / 2;

    std::vector<Exp> variables;  // candidate support, ascending graded lex
    for (int d = 0; d <= half; ++d)
        for (int b = d; b >= 0; --b) {
            Exp e(nvars, 0);
            e[0] = d - b;
            e[1] = b;
            variables.push_back(e);
        }
    std::vector<Exp> multipliers;
    for (int d = 0; d <= budget - half; ++d)
        for (int b = d; b >= 0; --b) {
            Exp e(nvars, 0);
            e[0] = d - b;
            e[1] = b;
            multipliers.push_back(e);
        }

    // Constraint vector of a candidate monomial: the concatenated residuals of
    // its multiples against the algebra span.
    using ConKey = std::pair<int, Exp>;
    struct ConLess {
        bool operator()(const ConKey& x, const ConKey& y) const {
            if (x.first != y.first) return x.first < y.first;
            return GradedLexLess{}(x.second, y.second);
        }
    };
    auto column_of = [&](const Exp& m) {
        std::map<ConKey, Scalar, ConLess> col;
        for (std::size_t gi = 0; gi < multipliers.size(); ++gi) {
            Poly prod = Poly::monomial(nvars, m, Scalar(1))
                            .mul_monomial(multipliers[gi], Scalar(1));
            auto residual = span.reduce(prod.terms());
            for (const auto& [e, c] : residual)
                col.emplace(ConKey(static_cast<int>(gi), e), c);
        }
        return col;
    };

    TrackedSpan<ConKey, ConLess> columns;
    std::vector<Poly> kernel;
    for (const Exp& m : variables) {
        auto col = column_of(m);
        auto comb = columns.solve(col);
        if (comb) {
            Poly f = Poly::monomial(nvars, m, Scalar(1));
            for (const auto& [idx, c] : *comb)
                f.add_term(variables[static_cast<std::size_t>(idx)], -c);
            if (!f.is_zero()) kernel.push_back(f);
        } else {
            columns.insert(std::move(col));
        }
    }
    if (kernel.empty())
        throw NoConductorFound("no nonzero conductor element within the budget");

    std::vector<Poly> kept;
    for (const Poly& f : kernel) {
        if (!kept.empty() && normal_form(f, kept).is_zero()) continue;
        kept.push_back(make_monic(f));
        kept = groebner(kept);
    }
    std::sort(kept.begin(), kept.end(), display_less);
    return kept;
}

std::vector<Poly> parse_xh_list(const std::string& text) {
    std::vector<Poly> out;
    std::size_t start = 0;
    int depth = 0;
    auto flush = [&](std::size_t end) {
        std::string piece = text.substr(start, end - start);
        if (piece.find_first_not_of(" \t\n") == std::string::npos)
            throw ParseError("empty entry in polynomial list");
        out.push_back(parse_poly(piece, {"x", "h"}));
        start = end + 1;
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) flush(i);
    }
    flush(text.size());
    return out;
}

}  // namespace pdo
