#ifndef SUPDECONV_SUP_STATISTIC_HPP
#define SUPDECONV_SUP_STATISTIC_HPP

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "supdeconv/errors.hpp"
#include "supdeconv/estimator.hpp"
#include "supdeconv/limit_law.hpp"
#include "supdeconv/models.hpp"
#include "supdeconv/refine.hpp"
#include "supdeconv/special.hpp"

namespace supdeconv {

struct SupResult {
  double m_n = 0.0;       // sup over [0,1] of |f_nh - E f_nh|
  double argmax_x = 0.0;
  double a_n = 1.0;       // normalizing sequence
  double c_limit = 1.0;   // limiting constant multiplying the Rayleigh V
  double scaled = 0.0;    // a_n m_n / c_limit
};

struct BandResult {
  EstimateGrid center;     // kind = estimate
  double half_width = 0.0; // constant over x
  double level = 0.0;
  // The band covers E[f_nh] with asymptotic simultaneous probability
  // `level`; it is not a band around f itself (no bias correction).
};

inline void require_theorem_applicable(const ErrorModel& error) {
  if (!error.theorem_applicable())
    throw TheoremInapplicableError(
        "the limit law requires lambda = 2; model '" + error.name +
        "' has lambda = " + std::to_string(error.lambda));
}

/// Normalizing sequence a_n = sqrt(n) h^{-(lambda(1+alpha)+lambda0-1)} / zeta(h),
/// assembled in log space.
inline double normalizer_a_n(std::size_t n, double h, const ErrorModel& error,
                             const KernelModel& kernel) {
  require_theorem_applicable(error);
  if (n == 0) throw DomainError("normalizer_a_n: n must be positive");
  check_overflow_guard(h, error.mu, error.lambda);
  const double exponent = error.lambda * (1.0 + kernel.alpha) + error.lambda0 - 1.0;
  const double log_a = 0.5 * std::log(static_cast<double>(n)) -
                       exponent * std::log(h) -
                       zeta_exponent(h, error.mu, error.lambda);
  return std::exp(log_a);
}

/// The constant in front of V in the limit law:
/// (sqrt(2)/2) (A / (pi C)) (mu/lambda)^{1+alpha} Gamma(alpha + 1).
inline double limit_constant(const ErrorModel& error, const KernelModel& kernel) {
  require_theorem_applicable(error);
  return 0.5 * std::sqrt(2.0) * kernel.A / (std::numbers::pi * error.C) *
         std::pow(error.mu / error.lambda, 1.0 + kernel.alpha) *
         gamma_fn(kernel.alpha + 1.0);
}

namespace detail {

inline void require_grid_fine_enough(const EstimateGrid& grid, double h) {
  if (grid.x.size() != grid.values.size() || grid.x.empty())
    throw ConfigError("sup_distance: grid and values must match and be nonempty");
  for (std::size_t i = 1; i < grid.x.size(); ++i)
    if (grid.x[i] - grid.x[i - 1] > h / 10.0 + 1e-12)
      throw GridTooCoarseError("sup_distance: grid spacing exceeds h/10");
}

}  // namespace detail

/// M_n from a centered grid: discrete max of |values| plus one parabolic
/// refinement around the argmax.  The centered process oscillates on scale
/// h, hence the h/10 spacing requirement.
inline SupResult sup_distance(const EstimateGrid& centered, double h) {
  if (centered.kind != GridKind::centered)
    throw ConfigError("sup_distance: grid kind must be 'centered'");
  detail::require_grid_fine_enough(centered, h);
  const auto peak = refined_sup_abs(centered.x, centered.values);
  SupResult r;
  r.m_n = peak.value;
  r.argmax_x = peak.arg;
  r.scaled = r.m_n;
  return r;
}

/// M_n together with its Theorem-1 normalization a_n M_n / c_limit.
inline SupResult sup_distance(const EstimateGrid& centered, double h, std::size_t n,
                              const ErrorModel& error, const KernelModel& kernel) {
  SupResult r = sup_distance(centered, h);
  r.a_n = normalizer_a_n(n, h, error, kernel);
  r.c_limit = limit_constant(error, kernel);
  r.scaled = r.a_n * r.m_n / r.c_limit;
  return r;
}

/// Uniform confidence band for E[f_nh] at the given level:
/// f_nh(x) +- c_limit rayleigh_quantile(level) / a_n.
inline BandResult confidence_band(const SampleSet& samples, const ErrorModel& error,
                                  const KernelModel& kernel, const EstimatorConfig& cfg,
                                  double level, const std::vector<double>& grid_x) {
  if (!(level > 0.0) || !(level < 1.0))
    throw DomainError("confidence_band: level must lie in (0,1)");
  require_theorem_applicable(error);
  BandResult band;
  band.center = deconv_estimate(samples, error, kernel, cfg, grid_x);
  const double a_n = normalizer_a_n(samples.n(), cfg.h, error, kernel);
  band.half_width = limit_constant(error, kernel) * rayleigh::quantile(level) / a_n;
  band.level = level;
  return band;
}

}  // namespace supdeconv

#endif  // SUPDECONV_SUP_STATISTIC_HPP
