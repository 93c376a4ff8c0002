#include "pdo/hilbert.hpp"

#include <string>

namespace pdo {

Scalar quasi_leading(const std::vector<int>& dims, int mlo, int mhi, int deg,
                     int period) {
  if (period < 1 || deg < 0) throw NotStabilized("bad fit parameters");
  if (mlo < 0 || mhi >= static_cast<int>(dims.size()) || mlo > mhi)
    throw NotStabilized("fit window out of range");
  bool have = false;
  Scalar lead;
  for (int res = 0; res < period; ++res) {
    std::vector<Scalar> vals;
    for (int m = mlo; m <= mhi; ++m)
      if (m % period == res) vals.push_back(Scalar(dims[m]));
    if (static_cast<int>(vals.size()) < deg + 2)
      throw NotStabilized("window too short for period " +
                          std::to_string(period));
    // deg-th finite differences along the arithmetic progression (step =
    // period) must be constant; their value is deg! * c * period^deg.
    for (int k = 0; k < deg; ++k)
      for (std::size_t i = 0; i + 1 < vals.size(); ++i)
        vals[i] = vals[i + 1] - vals[i];
    vals.resize(vals.size() - deg);
    for (std::size_t i = 1; i < vals.size(); ++i)
      if (!(vals[i] == vals[0]))
        throw NotStabilized("differences not constant in class " +
                            std::to_string(res));
    Scalar denom = factorial(static_cast<unsigned>(deg));
    for (int k = 0; k < deg; ++k) denom = denom * Scalar(period);
    Scalar c = vals[0] / denom;
    if (!have) {
      lead = c;
      have = true;
    } else if (!(c == lead)) {
      throw NotStabilized("leading coefficient differs between classes");
    }
  }
  if (!have) throw NotStabilized("empty window");
  return lead;
}

std::pair<Scalar, int> quasi_leading_auto(const std::vector<int>& dims,
                                          int mlo, int mhi, int deg,
                                          int max_period) {
  std::string last = "no period attempted";
  for (int q = 1; q <= max_period; ++q) {
    try {
      return {quasi_leading(dims, mlo, mhi, deg, q), q};
    } catch (const NotStabilized& e) {
      last = e.what();
    }
  }
  throw NotStabilized("no period up to " + std::to_string(max_period) +
                      " fits: " + last);
}

}  // namespace pdo
