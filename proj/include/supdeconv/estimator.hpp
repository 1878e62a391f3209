#ifndef SUPDECONV_ESTIMATOR_HPP
#define SUPDECONV_ESTIMATOR_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <vector>

#include "supdeconv/errors.hpp"
#include "supdeconv/models.hpp"
#include "supdeconv/quadrature.hpp"
#include "supdeconv/special.hpp"

namespace supdeconv {

struct SampleSet {
  std::vector<double> values;

  std::size_t n() const { return values.size(); }

  void validate() const {
    if (values.empty()) throw ConfigError("sample set is empty");
    for (double v : values)
      if (!std::isfinite(v)) throw ConfigError("sample set contains a non-finite value");
  }
};

enum class GridKind { estimate, expectation, centered };

struct EstimateGrid {
  std::vector<double> x;
  std::vector<double> values;
  GridKind kind = GridKind::estimate;
};

/// Evenly spaced points 0, 1/n_sub, ..., 1 on [0,1].
inline std::vector<double> unit_grid(std::size_t n_sub) {
  std::vector<double> x(n_sub + 1);
  for (std::size_t i = 0; i <= n_sub; ++i)
    x[i] = static_cast<double>(i) / static_cast<double>(n_sub);
  return x;
}

struct EstimatorConfig {
  double h = 0.5;
  QuadratureSpec quadrature;

  void validate(const ErrorModel& error) const {
    if (!(h > 0.0) || h > 1.0) throw ConfigError("bandwidth h must lie in (0, 1]");
    quadrature.validate();
    check_overflow_guard(h, error.mu, error.lambda);
  }
};

/// Empirical characteristic function (1/n) sum_j exp(i t X_j).
inline std::complex<double> phi_emp(const SampleSet& samples, double t) {
  double re = 0.0, im = 0.0;
  for (double x : samples.values) {
    re += std::cos(t * x);
    im += std::sin(t * x);
  }
  const double n = static_cast<double>(samples.n());
  return {re / n, im / n};
}

/// phi_emp on the uniform grid t_k = k dt, k = 0..k_max.  Each sample
/// contributes the geometric sequence exp(i dt X_j)^k, advanced by one
/// complex multiply per node; the phase drift over k_max steps is O(k_max
/// eps), far below quadrature error.  Samples are processed four at a time
/// to break the multiply dependency chain.
inline std::vector<std::complex<double>> phi_emp_uniform(const SampleSet& samples,
                                                         double dt,
                                                         std::size_t k_max) {
  const std::size_t n = samples.n();
  std::vector<double> re(k_max + 1, 0.0), im(k_max + 1, 0.0);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    double wr[4], wi[4], zr[4], zi[4];
    for (int l = 0; l < 4; ++l) {
      wr[l] = std::cos(dt * samples.values[j + l]);
      wi[l] = std::sin(dt * samples.values[j + l]);
      zr[l] = 1.0;
      zi[l] = 0.0;
    }
    for (std::size_t k = 0; k <= k_max; ++k) {
      re[k] += zr[0] + zr[1] + zr[2] + zr[3];
      im[k] += zi[0] + zi[1] + zi[2] + zi[3];
      for (int l = 0; l < 4; ++l) {
        const double t = zr[l] * wr[l] - zi[l] * wi[l];
        zi[l] = zr[l] * wi[l] + zi[l] * wr[l];
        zr[l] = t;
      }
    }
  }
  for (; j < n; ++j) {
    const double wr = std::cos(dt * samples.values[j]);
    const double wi = std::sin(dt * samples.values[j]);
    double zr = 1.0, zi = 0.0;
    for (std::size_t k = 0; k <= k_max; ++k) {
      re[k] += zr;
      im[k] += zi;
      const double t = zr * wr - zi * wi;
      zi = zr * wi + zi * wr;
      zr = t;
    }
  }
  std::vector<std::complex<double>> out(k_max + 1);
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t k = 0; k <= k_max; ++k) out[k] = {re[k] * inv_n, im[k] * inv_n};
  return out;
}

namespace detail {

// log phi_w, for combining with -log phi_k in a single exp per node
inline double log_phi_w(const KernelModel& kernel, double s) {
  const double a = std::fabs(s);
  if (a > 1.0) return -std::numeric_limits<double>::infinity();
  if (kernel.family == KernelFamily::sinc_flat) return 0.0;
  return kernel.m * std::log1p(-s * s);
}

// Evaluates (1/pi) sum_k Re[exp(-i t_k x) c_k] for each grid point, with
// t_k = k dt; the unit-modulus phase is advanced by recurrence.
inline std::vector<double> inverse_transform(const std::vector<std::complex<double>>& c,
                                             double dt,
                                             const std::vector<double>& grid_x) {
  std::vector<double> out(grid_x.size());
  for (std::size_t i = 0; i < grid_x.size(); ++i) {
    const double wr = std::cos(dt * grid_x[i]);
    const double wi = -std::sin(dt * grid_x[i]);
    double zr = 1.0, zi = 0.0, acc = 0.0;
    for (const auto& ck : c) {
      acc += zr * ck.real() - zi * ck.imag();
      const double t = zr * wr - zi * wi;
      zi = zr * wi + zi * wr;
      zr = t;
    }
    out[i] = acc / std::numbers::pi;
  }
  return out;
}

// Quadrature coefficients w_k phi_w(h t_k) / phi_k(t_k) on the master grid
// over [0, 1/h]; exponential factors are combined in log space.
inline std::vector<double> frequency_weights(const ErrorModel& error,
                                             const KernelModel& kernel,
                                             const EstimatorConfig& cfg) {
  const std::size_t n_sub = master_subintervals(cfg.quadrature, cfg.h);
  const double t_max = 1.0 / cfg.h;
  auto w = quadrature_weights(cfg.quadrature.rule, 0.0, t_max, n_sub);
  const double dt = t_max / static_cast<double>(n_sub);
  for (std::size_t k = 0; k <= n_sub; ++k) {
    const double t = dt * static_cast<double>(k);
    const double log_factor = log_phi_w(kernel, cfg.h * t) - error.log_phi(t);
    w[k] *= std::isinf(log_factor) ? 0.0 : std::exp(log_factor);
  }
  return w;
}

}  // namespace detail

/// Deconvolution kernel density estimate on grid_x:
///   (1/pi) int_0^{1/h} Re[ e^{-itx} phi_w(ht) phi_emp(t) / phi_k(t) ] dt,
/// real by conjugate symmetry.  phi_emp is evaluated once per quadrature
/// node and reused across grid points.
inline EstimateGrid deconv_estimate(const SampleSet& samples, const ErrorModel& error,
                                    const KernelModel& kernel,
                                    const EstimatorConfig& cfg,
                                    const std::vector<double>& grid_x) {
  samples.validate();
  cfg.validate(error);
  const std::size_t n_sub = master_subintervals(cfg.quadrature, cfg.h);
  const double dt = (1.0 / cfg.h) / static_cast<double>(n_sub);
  const auto w = detail::frequency_weights(error, kernel, cfg);
  auto c = phi_emp_uniform(samples, dt, n_sub);
  for (std::size_t k = 0; k <= n_sub; ++k) c[k] *= w[k];
  return {grid_x, detail::inverse_transform(c, dt, grid_x), GridKind::estimate};
}

/// The bandwidth-dependent kernel v_h(u) = (1/pi) int_0^1 phi_w(s)
/// cos(s u) / phi_k(s/h) ds, by quadrature on the same master grid.
inline double v_h_kernel(const ErrorModel& error, const KernelModel& kernel,
                         const EstimatorConfig& cfg, double u) {
  const std::size_t n_sub = master_subintervals(cfg.quadrature, cfg.h);
  const auto w = quadrature_weights(cfg.quadrature.rule, 0.0, 1.0, n_sub);
  const double ds = 1.0 / static_cast<double>(n_sub);
  double acc = 0.0;
  for (std::size_t k = 0; k <= n_sub; ++k) {
    const double s = ds * static_cast<double>(k);
    const double log_factor = detail::log_phi_w(kernel, s) - error.log_phi(s / cfg.h);
    if (!std::isinf(log_factor))
      acc += w[k] * std::exp(log_factor) * std::cos(s * u);
  }
  return acc / std::numbers::pi;
}

/// Kernel-sum form of the same estimator, (1/(nh)) sum_j v_h((x - X_j)/h).
/// Serves as an independent oracle for deconv_estimate: the two are
/// quadratures of the same Fourier integral accumulated in different orders.
inline double kernel_sum_estimate(const SampleSet& samples, const ErrorModel& error,
                                  const KernelModel& kernel,
                                  const EstimatorConfig& cfg, double x) {
  samples.validate();
  cfg.validate(error);
  double acc = 0.0;
  for (double xj : samples.values)
    acc += v_h_kernel(error, kernel, cfg, (x - xj) / cfg.h);
  return acc / (static_cast<double>(samples.n()) * cfg.h);
}

/// Oracle expectation E[f_nh] on grid_x:
///   (1/pi) int_0^{1/h} Re[ e^{-itx} phi_w(ht) phi_f(t) ] dt,
/// using phi_g / phi_k = phi_f for the closed-form signal.
inline EstimateGrid expected_estimate(const SignalModel& signal,
                                      const KernelModel& kernel,
                                      const EstimatorConfig& cfg,
                                      const std::vector<double>& grid_x) {
  cfg.quadrature.validate();
  if (!(cfg.h > 0.0) || cfg.h > 1.0) throw ConfigError("bandwidth h must lie in (0, 1]");
  const std::size_t n_sub = master_subintervals(cfg.quadrature, cfg.h);
  const double t_max = 1.0 / cfg.h;
  const double dt = t_max / static_cast<double>(n_sub);
  const auto w = quadrature_weights(cfg.quadrature.rule, 0.0, t_max, n_sub);
  std::vector<std::complex<double>> c(n_sub + 1);
  for (std::size_t k = 0; k <= n_sub; ++k) {
    const double t = dt * static_cast<double>(k);
    c[k] = w[k] * kernel.phi(cfg.h * t) * signal.phi(t);
  }
  return {grid_x, detail::inverse_transform(c, dt, grid_x), GridKind::expectation};
}

/// f_nh - E[f_nh] in a single pass over the shared quadrature grid.
inline EstimateGrid centered_estimate(const SampleSet& samples, const ErrorModel& error,
                                      const SignalModel& signal,
                                      const KernelModel& kernel,
                                      const EstimatorConfig& cfg,
                                      const std::vector<double>& grid_x) {
  samples.validate();
  cfg.validate(error);
  const std::size_t n_sub = master_subintervals(cfg.quadrature, cfg.h);
  const double t_max = 1.0 / cfg.h;
  const double dt = t_max / static_cast<double>(n_sub);
  const auto w = quadrature_weights(cfg.quadrature.rule, 0.0, t_max, n_sub);
  auto c = phi_emp_uniform(samples, dt, n_sub);
  for (std::size_t k = 0; k <= n_sub; ++k) {
    const double t = dt * static_cast<double>(k);
    const double log_factor = detail::log_phi_w(kernel, cfg.h * t) - error.log_phi(t);
    const double wk = std::isinf(log_factor) ? 0.0 : std::exp(log_factor);
    // (phi_emp / phi_k - phi_f) phi_w, with the division folded into wk
    c[k] = w[k] * (wk * c[k] - kernel.phi(cfg.h * t) * signal.phi(t));
  }
  return {grid_x, detail::inverse_transform(c, dt, grid_x), GridKind::centered};
}

}  // namespace supdeconv

#endif  // SUPDECONV_ESTIMATOR_HPP
