#pragma once

// Elements of k[[u]]((t)) held through an explicit window. A value stores an
// exact finite list of terms c * u^m * t^l (m >= 0), all inside its window
// (tmin <= l <= tmax, 0 <= m <= umax). The window is the certification
// horizon: coefficients inside the window are exactly the stored ones, the
// floor tmin is additionally a support bound (nothing lives below it), and
// nothing is claimed beyond tmax or umax. Operations compute the result
// window conservatively and drop any term that falls outside it rather than
// guessing.

#include "pdo/scalar.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace pdo {

struct Window {
    int tmin = 0;
    int tmax = 0;
    int umax = 0;

    bool contains(int uexp, int texp) const {
        return texp >= tmin && texp <= tmax && uexp >= 0 && uexp <= umax;
    }
    friend bool operator==(const Window& a, const Window& b) {
        return a.tmin == b.tmin && a.tmax == b.tmax && a.umax == b.umax;
    }
};

// Valuation of a nonzero element: l = least t-level carrying a nonzero
// coefficient, m = least u-exponent at that level.
struct UTValuation {
    int m = 0;
    int l = 0;
    friend bool operator==(const UTValuation& a, const UTValuation& b) {
        return a.m == b.m && a.l == b.l;
    }
};

class UTLaurent {
  public:
    // Keys are (t-level, u-exponent), so map order is t-major ascending.
    using Key = std::pair<int, int>;
    using TermMap = std::map<Key, Scalar>;

    explicit UTLaurent(const Window& w = Window{}) : window_(w) {}

    // Builds a value from explicit terms; throws WindowTooSmall if any term
    // falls outside the declared window (explicit construction is honest).
    static UTLaurent make(const Window& w, const std::vector<std::pair<Key, Scalar>>& terms);
    static UTLaurent monomial(const Window& w, int uexp, int texp, const Scalar& c = Scalar(1));

    const Window& window() const { return window_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Scalar coeff(int uexp, int texp) const {
        auto it = terms_.find({texp, uexp});
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    UTLaurent operator-() const;
    UTLaurent scaled(const Scalar& c) const;
    friend UTLaurent operator+(const UTLaurent& a, const UTLaurent& b);
    friend UTLaurent operator-(const UTLaurent& a, const UTLaurent& b);

    friend bool operator==(const UTLaurent& a, const UTLaurent& b) {
        return a.window_ == b.window_ && a.terms_ == b.terms_;
    }
    bool same_terms(const UTLaurent& o) const { return terms_ == o.terms_; }

    std::string str() const;  // e.g. "u^2*t^-4 + t^-2"

  private:
    friend UTLaurent ut_mul(const UTLaurent&, const UTLaurent&);
    friend UTLaurent psi_map(const UTLaurent&);
    friend UTLaurent psi1_map(const UTLaurent&);

    void add_term(int uexp, int texp, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(Key{texp, uexp}, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    // Drops stored terms outside the window (used after window shrink).
    void clip();

    Window window_;
    TermMap terms_;
};

// nu(f): throws ZeroInput when no coefficient is stored, WindowTooSmall when
// the lowest nonzero level touches the window floor (then levels below the
// floor were never certified empty by an interior margin).
UTValuation ut_valuation(const UTLaurent& f);

// Exact product; result window floor = sum of floors, ceiling = min of each
// ceiling shifted by the partner's t-valuation, u-ceiling analogous with
// minimal u-exponents. Throws EmptyResultWindow when nothing is certifiable.
UTLaurent ut_mul(const UTLaurent& a, const UTLaurent& b);

// As ut_mul, but refuses to silently drop: throws WindowTooSmall when a term
// of the exact product falls outside the certified result window.  Span
// computations use this so membership verdicts never rest on lost terms.
UTLaurent ut_mul_strict(const UTLaurent& a, const UTLaurent& b);

// Coordinate change u^m t^l -> z1^{-m} z2^{l+m}; the result is expressed in
// the same representation with u standing for z1^{-1} and t for z2. The
// window rectangle is preserved; image terms beyond the t-ceiling are
// outside the certified region and are dropped.
UTLaurent psi_map(const UTLaurent& f);

// Inverse change z2 -> t, z1^{-1} -> u t^{-1}, i.e. (m,l) -> (m, l-m). The
// certified t-ceiling drops by umax (worst case of the shift); the floor
// drops likewise.
UTLaurent psi1_map(const UTLaurent& f);

}  // namespace pdo
