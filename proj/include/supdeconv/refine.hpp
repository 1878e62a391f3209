#ifndef SUPDECONV_REFINE_HPP
#define SUPDECONV_REFINE_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "supdeconv/errors.hpp"

namespace supdeconv {

struct RefinedSup {
  double value = 0.0;
  double arg = 0.0;
};

/// Maximum of |v| over the grid, sharpened by fitting a parabola through the
/// three points around the discrete argmax.  The fit never lowers the
/// reported value: if the parabola peaks below the grid max (or the argmax
/// sits on the boundary) the grid max stands.
inline RefinedSup refined_sup_abs(const std::vector<double>& x,
                                  const std::vector<double>& v) {
  if (x.size() != v.size() || x.empty())
    throw ConfigError("refined_sup_abs: grid and values must match and be nonempty");
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (std::fabs(v[i]) > std::fabs(v[best])) best = i;
  RefinedSup out{std::fabs(v[best]), x[best]};
  if (best == 0 || best + 1 == v.size()) return out;
  const double y0 = std::fabs(v[best - 1]);
  const double y1 = std::fabs(v[best]);
  const double y2 = std::fabs(v[best + 1]);
  const double denom = y0 - 2.0 * y1 + y2;
  if (denom >= 0.0) return out;  // not concave at the peak
  const double delta = 0.5 * (y0 - y2) / denom;  // offset in grid units, |delta| <= 1/2
  const double peak = y1 - 0.25 * (y0 - y2) * delta;
  if (peak > out.value) {
    out.value = peak;
    out.arg = x[best] + delta * (x[best + 1] - x[best]);
  }
  return out;
}

}  // namespace supdeconv

#endif  // SUPDECONV_REFINE_HPP
