#pragma once

// Affine glueing inside the polynomial plane k[x,h]: given a proper ideal I
// and a subring R, produce finite generators for A = R + I together with the
// monic certificate making k[x,h] module-finite over the output, plus exact
// membership tests and the conductor ideal.  The ambient is fixed to two
// variables: membership there is decidable by elementary normal forms, which
// is all the worked cases need; the variable names are x (index 0) and h
// (index 1).

#include <string>
#include <vector>

#include "pdo/linalg.hpp"
#include "pdo/poly.hpp"

namespace pdo {

struct MonomialAlgebra {
  std::vector<Poly> generators;  // nonconstant elements of k[x,h]
};

struct GlueInput {
  std::vector<Poly> ideal_gens;    // generators of I (proper, nonzero)
  std::vector<Poly> subring_gens;  // lifts of R-generators (possibly empty: R = k)
  int budget = 10;                 // degree horizon for all certifications
};

// Reduced graded-lex basis of the ideal the generators span.
std::vector<Poly> groebner(std::vector<Poly> gens);
Poly normal_form(const Poly& f, const std::vector<Poly>& basis);

// Echelon span of all generator monomials of total degree <= degree.
SparseSpan<Exp, GradedLexLess> algebra_span(const std::vector<Poly>& gens,
                                            int degree);
bool span_contains(const SparseSpan<Exp, GradedLexLess>& span, const Poly& f);

struct MonicCertificate {
  Poly f2;                   // the Noether partner
  int k = 0;                 // degree of the monic relation
  std::vector<Poly> coeffs;  // a_1..a_k, lifted R-elements
  Poly b;                    // f2^k + a_1 f2^{k-1} + ... + a_k, an element of I
};

struct GlueResult {
  MonomialAlgebra algebra;       // saturated generators of R + I (to budget)
  Poly f1;                       // ideal element of the Noether pair
  MonicCertificate certificate;
  std::vector<Poly> seed_gens;   // f1, the a_i and b before saturation
  std::vector<Poly> adjoined;    // elements added by the saturation loop
  int budget = 10;
  bool saturated = false;        // degreewise equality with R + I reached
};

// Lemma-style construction: choose a Noether pair (f1 in I, f2), extract the
// monic certificate over R mod I, then saturate the seed algebra degreewise
// inside R + I.  Throws NoNoetherPair / BudgetExceeded.
GlueResult glue_affine(const GlueInput& in);

// f mod I lies in the image of R (normal forms against the ideal basis).
bool glued_membership(const Poly& f, const GlueInput& in);

// Generators of { f : f * k[x,h] subset of the algebra }, certified against
// multipliers up to half the budget; throws NoConductorFound when the space
// is zero at the budget.
std::vector<Poly> conductor(const MonomialAlgebra& a, int budget);

// Drops generators lying in the algebra span of the others (checked to the
// budget), normalizes the survivors monic and sorts them degree-first.
std::vector<Poly> minimal_generators(std::vector<Poly> gens, int budget);

// Parses a comma-separated list of polynomials in x and h ("x^2, x*h, h^2").
std::vector<Poly> parse_xh_list(const std::string& text);

}  // namespace pdo
