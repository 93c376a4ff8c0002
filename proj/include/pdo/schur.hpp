#pragma once

// Pairs (A, W) of subspaces of k[[u]]((t)) with A a unital algebra and W an
// A-module: level filtrations by t-valuation, data-rank detection, stability
// and finite-generation diagnostics, and graded increments.  W may be given
// by finitely many elements or by an infinite triangle family of monomials
// (t^{-i} u^j with i running over an arithmetic progression and 0 <= j <=
// slope * i), which some examples require since they are not finitely
// generated as modules.

#include <optional>
#include <string>
#include <vector>

#include "pdo/json_io.hpp"
#include "pdo/ut_laurent.hpp"

namespace pdo {

struct TriangleRule {
  int imin = 1;   // least t-depth in the family
  int step = 1;   // arithmetic step of the t-depth
  int slope = 1;  // u-exponent bound: 0 <= j <= slope * i
};

struct SubspaceUT {
  enum class Kind { kAlgebra, kModule };
  Kind kind = Kind::kModule;
  Window window;
  std::vector<UTLaurent> generators;  // algebra generators / module elements
  std::optional<TriangleRule> rule;   // extra monomial family (module form)
};

struct SchurPair {
  SubspaceUT a;
  SubspaceUT w;
};

// Spanning elements of the level-`depth` piece S cap t^{-depth} k[[u]][[t]]:
// every listed member has t-valuation >= -depth.  Algebra subspaces
// enumerate generator monomials (total exponent <= budget, else
// BudgetExceeded when the cap bites inside the level); module subspaces list
// stored elements plus rule monomials.  Throws WindowTooSmall when a needed
// member is not representable in the window.
std::vector<UTLaurent> basis_at_level(const SubspaceUT& s, int depth,
                                      int budget);

// dim_k (S cap t^{-nr} k[[u]][[t]]) for n = 0..nmax.
std::vector<int> filtration_dims(const SubspaceUT& s, int r, int nmax,
                                 int budget);

struct StabilityReport {
  bool stable = false;
  std::string counterexample;  // set when a product escaped the module span
};

// Verifies A * W subset W on products of A-monomials and W-members whose
// result stays within the checkable horizon (depth nmax * r).
StabilityReport check_stability(const SubspaceUT& a, const SubspaceUT& w,
                                int nmax, int r, int budget);

struct RankDetection {
  int r = 0;
  int d = 1;
  std::vector<int> dims;  // dim at depth m = 0..nmax*d*r_found
};

// Least r in 1..rmax with dim W_{nd} = (ndr+1)(ndr+2)/2 for all 1 <= n <=
// nmax (levels taken at rank r); throws NoRankFits when none fits.
RankDetection detect_rank(const SubspaceUT& w, int d, int nmax, int rmax,
                          int budget);

struct WitnessLevel {
  int level = 0;
  std::vector<UTLaurent> witnesses;  // level members outside span(A * W_{n-1})
};

// Finite-generation diagnostic: per level n = 1..nmax, the W-members at level
// n that are not in the span of products of A-monomials with W_{n-1}.  Empty
// lists through the horizon certify finite generation up to it.
std::vector<WitnessLevel> fg_witness(const SubspaceUT& a, const SubspaceUT& w,
                                     int nmax, int r, int budget);

// Successive differences dims[n] - dims[n-1] (entry 0 is dims[0]).
std::vector<int> graded_increments(const std::vector<int>& dims);

// JSON round-trip for subspaces and pairs:
// {"kind":"algebra"|"module","window":{"tmin":..,"tmax":..,"umax":..},
//  "generators":[<element>...],
//  "rule":{"type":"triangle","params":{"imin":..,"step":..,"slope":..}}}
Json subspace_to_json(const SubspaceUT& s);
SubspaceUT subspace_from_json(const Json& j);
Json pair_to_json(const SchurPair& p);
SchurPair pair_from_json(const Json& j);

// The worked pair: A = k[t^-2, t^-3, u t^-2], W spanned by 1 + t and the
// triangle family {t^-i u^j : i >= 1, 0 <= j <= i}, in a window sized for
// diagnostics through level `depth`.
SchurPair example_pair(int depth);

}  // namespace pdo
