#pragma once

// Spectral data of a commutative ring of operators: principal symbols,
// graded dimension counts, Hilbert leading coefficient, self-intersection
// number and rank bound, minimal generator degrees of the associated graded
// algebra, and the module filtration used for rank-one sanity checks.

#include <optional>
#include <utility>
#include <vector>

#include "pdo/diffop.hpp"
#include "pdo/hilbert.hpp"

namespace pdo {

struct RingPresentation {
  std::vector<DiffOp> generators;
  int nvars = 0;
  int certified_precision = kExact;
};

// Checks pairwise commutation of the generators at their stored precision;
// throws CommutationFailed naming the offending pair otherwise.
RingPresentation make_ring(std::vector<DiffOp> gens);

// Order used throughout the spectral pipeline: largest |alpha| carrying a
// unit coefficient when one exists (robust for normal-ordered exponential
// truncations), plain top order otherwise.
int spectral_order(const DiffOp& op);

// Constant-coefficient principal symbol at the spectral order, as a
// polynomial in the xi variables.  Requires every term of weight equal to the
// spectral order to be a plain derivative term with coefficient constant in
// x, and no term of larger weight; throws NonConstantSymbol otherwise.
// (The weight of c * d^alpha is |alpha| minus the x-order of c.)
Poly reduced_symbol(const DiffOp& op);

struct SymbolCheck {
  bool constant_symbols = false;
  bool no_common_zero = false;
  bool exact = false;  // resultant certificate (two variables)
  Scalar resultant;    // two-variable case only
  std::string note;
};

// For a family of exactly nvars operators: constancy of principal symbols and
// absence of a common projective zero.  With two variables the latter is
// decided exactly by a Sylvester resultant of the two symbol forms; with more
// variables it is sampled over projective space modulo several primes and the
// verdict is probabilistic (note says so).
SymbolCheck check_symbol_condition(const std::vector<DiffOp>& family);

// det(d sigma_i / d xi_j) for a family of exactly nvars operators.
Poly symbol_jacobian(const std::vector<DiffOp>& family);

// Rank of an arbitrary polynomial matrix over the rational function field.
int poly_matrix_rank(std::vector<std::vector<Poly>> m);

struct FiltrationTable {
  std::vector<int> dims;  // dims[m] = dim of the order-<= m slice, m = 0..mmax
  int delta = 1;          // gcd of the degrees where new content appears
};

// Dimension table of the filtered algebra generated by the operators,
// computed on constant principal symbols (throws NonConstantSymbol when a
// generator has none).
FiltrationTable graded_dims(const std::vector<DiffOp>& gens, int mmax);

// Smallest d <= dmax such that, through degree mmax, the degree-d slice
// generates the associated graded algebra in the Veronese sense (every graded
// piece is spanned by products of pieces of degree <= d).  Returns 0 when no
// d <= dmax works.  `symbols` are the reduced symbols of the generators.
int veronese_degree(const std::vector<Poly>& symbols,
                    const std::vector<int>& orders, int mmax, int dmax);

struct SelfIntersection {
  Scalar leading;  // Hilbert leading coefficient of the dimension count
  Scalar c2;       // self-intersection of the section class: 2 * leading
  Scalar rank;     // upper bound 1 / c2 for the rank of the spectral sheaf
  int period = 1;  // quasi-polynomial period used by the fit
};

// Fits dims on [mlo, mhi] (degree-2 quasi-polynomial, period preferring
// delta * veronese_d when positive, otherwise searched); throws NotStabilized.
SelfIntersection self_intersection(const FiltrationTable& table, int mlo,
                                   int mhi, int preferred_period);

// Minimal generators of the associated graded algebra through degree mmax,
// as (symbol, degree) pairs sorted by degree.
std::vector<std::pair<Poly, int>> rees_generator_degrees(
    const std::vector<DiffOp>& gens, int mmax);

// The rank-one comparison module: polynomials in xi with the right action of
// operators.  l_project sends an operator to its class (coefficients
// evaluated at x = 0); l_act is the induced right action, satisfying
// l_project(P * Q) == l_act(l_project(P), Q).
Poly l_project(const DiffOp& op);
Poly l_act(const Poly& v, const DiffOp& op, int nvars);

// dim of the span of all l_act words of length <= m applied to 1, using the
// 2n generators d_1..d_n, x_1..x_n; entry m of the result, m = 0..mmax.
std::vector<int> l_filtration_dims(int nvars, int mmax);

struct SpectralConfig {
  int mmax = 24;
  int window_lo = 0;  // 0 = auto: mmax / 2
  int window_hi = 0;  // 0 = auto: mmax
  int dmax = 8;
  std::optional<Scalar> supplied_rank;
};

struct SpectralReport {
  int nvars = 0;
  int certified_precision = kExact;
  std::vector<int> orders;
  std::vector<Poly> symbols;
  SymbolCheck symbol_check;
  std::vector<int> subfamily;  // indices of the certifying size-n subfamily
  bool jacobian_nonzero = false;
  int trdeg = 0;
  FiltrationTable table;
  int veronese_d = 0;
  SelfIntersection intersection;
  std::vector<std::pair<Poly, int>> generator_degrees;
  // Set when a rank was supplied: whether the computed self-intersection is
  // consistent with a coherent spectral sheaf of that rank (c2 == 1/rank).
  std::optional<bool> coherent;
};

SpectralReport analyze_ring(const std::vector<DiffOp>& gens,
                            const SpectralConfig& cfg);

}  // namespace pdo
