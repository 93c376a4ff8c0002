#pragma once

// Partial differential operators with truncated power-series coefficients:
// P = sum_alpha c_alpha(x) d^alpha, every coefficient held at one shared
// x-adic precision. dhat marks truncations of completed-ring elements (their
// stored term list grows with precision; plain operators are exact finite
// sums). Products follow the Leibniz rule; precision bookkeeping charges a
// term c_alpha d^alpha only |alpha| - ord_M(c_alpha) digits, which reduces
// to the usual "min precision minus left order" for unit coefficients and is
// what makes normal-ordered exponentials usable at full precision.

#include "pdo/series.hpp"

#include <map>
#include <optional>
#include <string>

namespace pdo {

// Homogeneous-in-xi symbol data: a polynomial in xi_1..xi_n whose
// coefficients are truncated series in x_1..x_n.
class SymbolPoly {
  public:
    using TermMap = std::map<Exp, TruncatedSeries, GradedLexLess>;

    explicit SymbolPoly(int nvars = 0, int precision = kExact)
        : nvars_(nvars), precision_(precision) {}

    int nvars() const { return nvars_; }
    int precision() const { return precision_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const { return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first); }
    bool is_homogeneous() const {
        return terms_.empty() ||
               total_degree(terms_.begin()->first) == total_degree(terms_.rbegin()->first);
    }

    void add_term(const Exp& xi, const TruncatedSeries& coef);

    TruncatedSeries coeff(const Exp& xi) const {
        auto it = terms_.find(xi);
        return it == terms_.end() ? TruncatedSeries(nvars_, precision_) : it->second;
    }

    SymbolPoly operator-() const;
    friend SymbolPoly operator+(const SymbolPoly& a, const SymbolPoly& b);
    friend SymbolPoly operator-(const SymbolPoly& a, const SymbolPoly& b);
    friend SymbolPoly operator*(const SymbolPoly& a, const SymbolPoly& b);

    SymbolPoly derivative_xi(int v) const;  // d/d xi_v
    SymbolPoly derivative_x(int v) const;   // coefficientwise d/d x_v

    // Substitute x := 0 in every coefficient; needs precision >= 1.
    Poly image_at_x_zero() const;

    // True when the symbol has no x-dependence at the stored precision.
    bool is_constant_in_x() const;

    bool agrees_with(const SymbolPoly& o) const;

    std::string str(const std::vector<std::string>& xi_names,
                    const std::vector<std::string>& x_names) const;

  private:
    int nvars_;
    int precision_;
    TermMap terms_;
};

// {s, r} = sum_v ds/dxi_v * dr/dx_v - sum_v dr/dxi_v * ds/dx_v.
SymbolPoly poisson_bracket(const SymbolPoly& s, const SymbolPoly& r);

enum class OrderKind {
    kRaw,          // max |alpha| among stored terms
    kSymbolStable  // max |alpha| among terms whose coefficient has ord_M 0
};

class DiffOp {
  public:
    using TermMap = std::map<Exp, TruncatedSeries, GradedLexLess>;

    explicit DiffOp(int nvars = 0, int precision = kExact, bool dhat = false)
        : nvars_(nvars), precision_(precision), dhat_(dhat) {}

    static DiffOp zero(int nvars, int precision = kExact, bool dhat = false) {
        return DiffOp(nvars, precision, dhat);
    }
    static DiffOp constant(int nvars, const Scalar& c, int precision = kExact);
    // d_v as an operator (v is 0-based).
    static DiffOp partial(int nvars, int v, int precision = kExact);
    // Multiplication operator by a coefficient series.
    static DiffOp mult(const TruncatedSeries& f, bool dhat = false);

    int nvars() const { return nvars_; }
    int precision() const { return precision_; }
    bool dhat() const { return dhat_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }  // zero at stored precision

    // Inserts (adds) a term; the coefficient is cut to the shared precision.
    void add_term(const Exp& dop, const TruncatedSeries& coef);

    TruncatedSeries coeff(const Exp& dop) const {
        auto it = terms_.find(dop);
        return it == terms_.end() ? TruncatedSeries(nvars_, precision_) : it->second;
    }

    DiffOp operator-() const;
    DiffOp scaled(const Scalar& c) const;
    friend DiffOp operator+(const DiffOp& a, const DiffOp& b);
    friend DiffOp operator-(const DiffOp& a, const DiffOp& b);

    // Same operator at the smaller of the two precisions.
    bool agrees_with(const DiffOp& o) const;

    std::string str(const std::vector<std::string>& x_names) const;

  private:
    int nvars_;
    int precision_;
    bool dhat_;
    TermMap terms_;
};

// Leibniz product. Throws PrecisionExhausted when the certified result
// precision would be <= 0.
DiffOp op_mul(const DiffOp& p, const DiffOp& q);

// [P,Q] = PQ - QP; the top symbols cancel, so ord <= ord P + ord Q - 1
// (asserted on the raw orders).
DiffOp op_commutator(const DiffOp& p, const DiffOp& q);

// Order of the operator. Raw: largest stored |alpha|. SymbolStable: largest
// |alpha| whose coefficient is a unit at x=0 (the order whose principal
// symbol does not move when a dhat truncation is refined); falls back to the
// raw order when no coefficient is a unit. Errors: ZeroOperator for an exact
// zero, PrecisionZero for zero-at-precision.
int order_of(const DiffOp& p, OrderKind kind = OrderKind::kRaw);

// sigma_m(P) for m = order_of(p, kind): the |alpha| = m part.
SymbolPoly principal_symbol(const DiffOp& p, OrderKind kind = OrderKind::kRaw);

// The |alpha| = grade part of P, viewed in gr(D) (0 when absent).
SymbolPoly grade_component(const DiffOp& p, int grade);

// sigma'(s): substitute x := 0, landing in k[xi].
Poly symbol_image(const SymbolPoly& s);

// P(f); same per-term precision accounting as op_mul.
TruncatedSeries apply(const DiffOp& p, const TruncatedSeries& f);

// sum_{k<N} (-1)^k x_1^k d_1^k / k!, the normal-ordered exponential
// truncation of exp(-x_1 d_1); acts as evaluation at x_1 = 0.
DiffOp normal_ordered_exp(int nvars, int precision);

}  // namespace pdo
