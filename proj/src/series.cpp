#include "pdo/series.hpp"

#include <sstream>

namespace pdo {

std::string TruncatedSeries::str(const std::vector<std::string>& names) const {
    std::ostringstream out;
    out << body_.str(names);
    if (precision_ != kExact) out << " + O(M^" << precision_ << ")";
    return out.str();
}

TruncatedSeries series_invert(const TruncatedSeries& f) {
    Scalar c0 = f.body().constant_term();
    if (c0.is_zero()) throw ZeroConstantTerm();
    if (f.precision() == kExact && f.body().is_constant())
        return TruncatedSeries::constant(f.nvars(), inverse(c0), kExact);
    if (f.precision() == kExact)
        throw Error("series_invert needs a finite precision for non-constant input");

    int n = f.precision();
    // f = c0 (1 - h) with ord(h) >= 1; 1/f = (1/c0) sum h^k, k < N.
    Poly one = Poly::constant(f.nvars(), Scalar(1));
    TruncatedSeries h =
        TruncatedSeries(one, n) - f.scaled(inverse(c0));
    TruncatedSeries acc = TruncatedSeries(one, n);
    TruncatedSeries pow = TruncatedSeries(one, n);
    for (int k = 1; k < n; ++k) {
        pow = pow * h;
        pow = pow.truncated(n);  // powers of h cannot see past N anyway
        if (pow.is_zero()) break;
        acc = acc + pow;
    }
    return acc.scaled(inverse(c0));
}

}  // namespace pdo
