#pragma once

// Valuations along height-one primes of the plane, cycles of rational
// functions, and the S2-closure (Cohen-Macaulaysation) of finite-index
// subalgebras of k[x,h].

#include <string>
#include <utility>
#include <vector>

#include "pdo/glue.hpp"
#include "pdo/poly.hpp"

namespace pdo {

// A height-one prime of k[x,h] cut out by an irreducible polynomial. Linear
// forms are certifiably irreducible; anything of higher degree is accepted as
// asserted by the caller.
struct CurveLocalization {
    Poly prime;
    explicit CurveLocalization(Poly p);
};

struct RationalFunction {
    Poly num;
    Poly den;
};

// Vanishing order of num minus vanishing order of den along the prime,
// computed in the normalization by exact division.
long ord_along(const RationalFunction& g, const CurveLocalization& loc);

struct WeilCycle {
    // (prime, multiplicity), zero multiplicities dropped.
    std::vector<std::pair<Poly, long>> components;
};

WeilCycle cycle_of(const RationalFunction& f, const std::vector<CurveLocalization>& primes);

struct S2Trace {
    int iteration = 0;
    std::vector<Poly> adjoined;
};

struct S2Result {
    MonomialAlgebra closure;
    std::vector<Poly> conductor_gens;  // of the input algebra
    std::vector<S2Trace> trace;
    int budget = 12;
};

// Iteratively adjoins every monomial z whose quotient ideal {s in A : s*z in A}
// is contained in no height-one prime of the normalization (certified by the
// gcd of a basis of the ideal being constant), until nothing qualifies. All
// claims are degreewise up to the budget.
S2Result s2_closure(const MonomialAlgebra& a, int budget = 12);

// True when the closure adjoins nothing.
bool is_cm(const MonomialAlgebra& a, int budget = 12);

}  // namespace pdo
