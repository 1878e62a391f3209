#ifndef SUPDECONV_QUADRATURE_HPP
#define SUPDECONV_QUADRATURE_HPP

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "supdeconv/errors.hpp"

namespace supdeconv {

enum class QuadratureRule { trapezoid, simpson };

struct QuadratureSpec {
  int nodes_per_unit = 512;  // frequency-domain node density per unit t-length
  QuadratureRule rule = QuadratureRule::simpson;

  void validate() const {
    if (nodes_per_unit < 64)
      throw ConfigError("quadrature: nodes_per_unit must be >= 64");
  }
};

/// Composite-rule weights for n_sub equal subintervals of [a, b]; the node at
/// index i is a + i (b-a)/n_sub, i = 0..n_sub.
inline std::vector<double> quadrature_weights(QuadratureRule rule, double a,
                                              double b, std::size_t n_sub) {
  if (n_sub == 0) throw QuadratureError("quadrature: zero subintervals");
  const double dx = (b - a) / static_cast<double>(n_sub);
  std::vector<double> w(n_sub + 1);
  if (rule == QuadratureRule::trapezoid) {
    for (std::size_t i = 1; i < n_sub; ++i) w[i] = dx;
    w[0] = w[n_sub] = 0.5 * dx;
  } else {
    if (n_sub % 2 != 0)
      throw QuadratureError("Simpson rule needs an even subinterval count, got " +
                            std::to_string(n_sub));
    for (std::size_t i = 1; i < n_sub; i += 2) w[i] = 4.0 * dx / 3.0;
    for (std::size_t i = 2; i < n_sub; i += 2) w[i] = 2.0 * dx / 3.0;
    w[0] = w[n_sub] = dx / 3.0;
  }
  return w;
}

template <class F>
double integrate(QuadratureRule rule, F&& f, double a, double b,
                 std::size_t n_sub) {
  const auto w = quadrature_weights(rule, a, b, n_sub);
  const double dx = (b - a) / static_cast<double>(n_sub);
  double acc = 0.0;
  for (std::size_t i = 0; i <= n_sub; ++i) acc += w[i] * f(a + dx * static_cast<double>(i));
  return acc;
}

/// Subinterval count of the master frequency grid for bandwidth h: the
/// integration range [0, 1/h] at nodes_per_unit density, rounded up to a
/// multiple of 4 so that a split at the midpoint of [0,1] in kernel-scale
/// units lands on a Simpson panel boundary.  The decomposition reuses this
/// grid, which makes the reconstruction identity exact up to rounding.
inline std::size_t master_subintervals(const QuadratureSpec& q, double h) {
  q.validate();
  if (!(h > 0.0)) throw DomainError("bandwidth must be positive");
  auto n = static_cast<std::size_t>(std::ceil(q.nodes_per_unit / h));
  return (n + 3) / 4 * 4;
}

}  // namespace supdeconv

#endif  // SUPDECONV_QUADRATURE_HPP
