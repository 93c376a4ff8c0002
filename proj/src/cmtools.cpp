#include "pdo/cmtools.hpp"

#include <algorithm>
#include <map>

namespace pdo {

namespace {

// p-adic valuation of a nonzero polynomial by repeated exact division.
long valuation(Poly f, const Poly& p) {
    long v = 0;
    while (true) {
        auto q = try_divide_exact(f, p);
        if (!q) return v;
        f = std::move(*q);
        ++v;
    }
}

Poly row_poly(const SparseSpan<Exp, GradedLexLess>::Row& row, int nvars) {
    Poly p(nvars);
    for (const auto& [e, c] : row) p.add_term(e, c);
    return p;
}

}  // namespace

CurveLocalization::CurveLocalization(Poly p) : prime(std::move(p)) {
    if (prime.is_zero() || prime.is_constant())
        throw ZeroInput("a prime must be a nonconstant polynomial");
    // Linear forms are irreducible; higher-degree primes are the caller's
    // assertion and are taken at face value.
}

long ord_along(const RationalFunction& g, const CurveLocalization& loc) {
    if (g.num.is_zero() || g.den.is_zero())
        throw ZeroInput("rational function must have nonzero numerator and denominator");
    return valuation(g.num, loc.prime) - valuation(g.den, loc.prime);
}

WeilCycle cycle_of(const RationalFunction& f, const std::vector<CurveLocalization>& primes) {
    WeilCycle z;
    for (const CurveLocalization& loc : primes) {
        long m = ord_along(f, loc);
        if (m != 0) z.components.emplace_back(loc.prime, m);
    }
    return z;
}

S2Result s2_closure(const MonomialAlgebra& a, int budget) {
    if (a.generators.empty()) throw ZeroInput("the algebra needs generators");
    int nvars = a.generators.front().nvars();
    if (nvars != 2) throw Error("the closure is implemented over two ambient variables");

    S2Result out;
    out.budget = budget;
    out.conductor_gens = conductor(a, budget);  // also certifies finite index

    std::vector<Poly> gens = a.generators;
    int max_rounds = 4 * budget + 8;
    for (int round = 1; round <= max_rounds; ++round) {
        auto span = algebra_span(gens, budget);
        std::vector<Poly> basis_polys;
        for (const auto& row : span.basis()) basis_polys.push_back(row_poly(row, nvars));

        std::vector<Poly> adjoined;
        for (int d = 1; d <= budget; ++d)
            for (int b = d; b >= 0; --b) {
                Exp e(nvars, 0);
                e[0] = d - b;
                e[1] = b;
                Poly z = Poly::monomial(nvars, e, Scalar(1));
                if (span_contains(span, z)) continue;

                // Basis of the degree-bounded quotient ideal {s in A : s*z in A}.
                TrackedSpan<Exp, GradedLexLess> image;
                std::vector<std::size_t> usable;
                std::vector<Poly> kernel;
                for (std::size_t i = 0; i < basis_polys.size(); ++i) {
                    const Poly& s = basis_polys[i];
                    if (s.degree() + d > budget) continue;
                    auto residual = span.reduce((s * z).terms());
                    auto comb = image.solve(residual);
                    if (comb) {
                        Poly f = s;
                        for (const auto& [idx, c] : *comb) f -= basis_polys[usable[idx]].scaled(c);
                        if (!f.is_zero()) kernel.push_back(f);
                    } else {
                        image.insert(std::move(residual));
                        usable.push_back(i);
                    }
                }
                if (kernel.empty()) continue;

                // z joins the closure when the quotient ideal avoids every
                // height-one prime, i.e. its elements share no irreducible
                // factor: the gcd of a spanning set is constant.
                Poly g = kernel.front();
                for (std::size_t i = 1; i < kernel.size() && !g.is_constant(); ++i)
                    g = poly_gcd(g, kernel[i]);
                if (g.is_constant() && !g.is_zero()) adjoined.push_back(z);
            }

        if (adjoined.empty()) {
            out.closure.generators = minimal_generators(gens, budget);
            return out;
        }
        S2Trace step;
        step.iteration = round;
        step.adjoined = adjoined;
        out.trace.push_back(std::move(step));
        for (const Poly& z : adjoined) gens.push_back(z);
    }
    throw BudgetExceeded("closure did not stabilize within the round limit");
}

bool is_cm(const MonomialAlgebra& a, int budget) {
    return s2_closure(a, budget).trace.empty();
}

}  // namespace pdo
