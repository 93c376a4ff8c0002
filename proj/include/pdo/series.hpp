#pragma once

// Power series in x_1..x_n truncated M-adically: a value of precision N is
// known modulo M^N, M = (x_1,..,x_n), and stores only terms of total degree
// < N. Precision kExact marks values that are exact polynomials (arithmetic
// saturates there). Multiplication uses the sharp sound rule
//     prec(f*g) = min(prec(f) + ord(g), prec(g) + ord(f)),
// where ord is the M-adic order of the stored part (ord >= prec when nothing
// is stored); for order-0 inputs this is the usual min of precisions, and it
// is what lets x^k * d^k(f) keep full precision.

#include "pdo/poly.hpp"

#include <limits>

namespace pdo {

inline constexpr int kExact = std::numeric_limits<int>::max();

inline int sat_add(int a, int b) {
    if (a == kExact || b == kExact) return kExact;
    long s = static_cast<long>(a) + b;
    return s >= kExact ? kExact : static_cast<int>(s);
}
inline int sat_sub(int a, int b) {
    return a == kExact ? kExact : a - b;
}

class TruncatedSeries {
  public:
    explicit TruncatedSeries(int nvars = 0, int precision = kExact)
        : body_(nvars), precision_(precision) {}
    TruncatedSeries(const Poly& body, int precision) : body_(body.nvars()), precision_(precision) {
        for (const auto& [e, c] : body.terms())
            if (total_degree(e) < precision) body_.add_term(e, c);
    }

    static TruncatedSeries constant(int nvars, const Scalar& c, int precision = kExact) {
        return TruncatedSeries(Poly::constant(nvars, c), precision);
    }

    int nvars() const { return body_.nvars(); }
    int precision() const { return precision_; }
    const Poly& body() const { return body_; }
    bool is_zero() const { return body_.is_zero(); }  // zero at stored precision

    // M-adic order of the known part: the least total degree of a stored
    // term, or the precision itself when nothing is stored (f lies in M^N).
    int ord_lower_bound() const { return body_.is_zero() ? precision_ : body_.order(); }

    // True M-adic order when it is certain (a term exists below precision).
    // Throws PrecisionZero when the series is indistinguishable from zero.
    int ord() const {
        if (body_.is_zero()) throw PrecisionZero();
        return body_.order();
    }

    TruncatedSeries truncated(int precision) const {
        if (precision >= precision_) return *this;
        return TruncatedSeries(body_, precision);
    }

    TruncatedSeries operator-() const {
        TruncatedSeries r(nvars(), precision_);
        r.body_ = -body_;
        return r;
    }
    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        int p = std::min(a.precision_, b.precision_);
        return TruncatedSeries(a.body_ + b.body_, p);
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        int p = std::min(a.precision_, b.precision_);
        return TruncatedSeries(a.body_ - b.body_, p);
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        int p = std::min(sat_add(a.precision_, b.ord_lower_bound()),
                         sat_add(b.precision_, a.ord_lower_bound()));
        return TruncatedSeries(a.body_ * b.body_, p);
    }

    TruncatedSeries scaled(const Scalar& c) const {
        TruncatedSeries r(nvars(), precision_);
        r.body_ = body_.scaled(c);
        return r;
    }

    TruncatedSeries derivative(int var) const {
        return TruncatedSeries(body_.derivative(var), sat_sub(precision_, 1));
    }

    // Equal as approximations: same stored terms below the smaller precision.
    bool agrees_with(const TruncatedSeries& o) const {
        int p = std::min(precision_, o.precision_);
        return (body_ - o.body_).is_zero() ||
               (body_ - o.body_).order() >= p;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.precision_ == b.precision_ && a.body_ == b.body_;
    }

    std::string str(const std::vector<std::string>& names) const;

  private:
    Poly body_;
    int precision_;
};

// Multiplicative inverse of a series with nonzero constant term, to the
// input's precision. Throws ZeroConstantTerm otherwise.
TruncatedSeries series_invert(const TruncatedSeries& f);

}  // namespace pdo
