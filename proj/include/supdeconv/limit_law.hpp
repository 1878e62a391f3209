#ifndef SUPDECONV_LIMIT_LAW_HPP
#define SUPDECONV_LIMIT_LAW_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <vector>

#include "supdeconv/errors.hpp"
#include "supdeconv/estimator.hpp"
#include "supdeconv/models.hpp"
#include "supdeconv/refine.hpp"
#include "supdeconv/rng.hpp"

namespace supdeconv {

/// Standard Rayleigh law, density x exp(-x^2/2) on x >= 0.
namespace rayleigh {

inline double pdf(double x) { return x <= 0.0 ? 0.0 : x * std::exp(-0.5 * x * x); }

inline double cdf(double x) { return x <= 0.0 ? 0.0 : -std::expm1(-0.5 * x * x); }

inline double quantile(double p) {
  if (!(p >= 0.0) || p >= 1.0) throw DomainError("rayleigh quantile: p must lie in [0,1)");
  return std::sqrt(-2.0 * std::log1p(-p));
}

inline double mean() { return std::sqrt(std::numbers::pi / 2.0); }

}  // namespace rayleigh

struct ProcessSample {
  std::vector<double> grid;
  std::vector<double> path;
};

/// Draws paths of the zero-mean Gaussian process with covariance
/// (1/2) cos(x1 - x2) on a fixed grid via the symmetric square root of the
/// covariance matrix.  The covariance has rank 2, so the eigendecomposition
/// clamps the (numerically zero) remaining eigenvalues at 0; Cholesky would
/// fail here.  Deliberately independent of the cos/sin representation used
/// by sup_abs_w_exact_sample, which this sampler is tested against.
class WProcessSampler {
 public:
  explicit WProcessSampler(std::vector<double> grid) : grid_(std::move(grid)) {
    if (grid_.empty()) throw ConfigError("WProcessSampler: grid is empty");
    const auto m = static_cast<Eigen::Index>(grid_.size());
    Eigen::MatrixXd cov(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
      for (Eigen::Index j = 0; j < m; ++j)
        cov(i, j) = 0.5 * std::cos(grid_[static_cast<std::size_t>(i)] -
                                   grid_[static_cast<std::size_t>(j)]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov);
    eigenvalues_.assign(es.eigenvalues().data(), es.eigenvalues().data() + m);
    sqrt_cov_ = es.eigenvectors() *
                es.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal() *
                es.eigenvectors().transpose();
  }

  ProcessSample sample(Rng& rng) const {
    const auto m = static_cast<Eigen::Index>(grid_.size());
    Eigen::VectorXd z(m);
    for (Eigen::Index i = 0; i < m; ++i) z(i) = rng.normal();
    Eigen::VectorXd path = sqrt_cov_ * z;
    return {grid_, std::vector<double>(path.data(), path.data() + m)};
  }

  const std::vector<double>& grid() const { return grid_; }

  /// Ascending eigenvalues of the covariance matrix (rank-2 in exact
  /// arithmetic).
  const std::vector<double>& eigenvalues() const { return eigenvalues_; }

 private:
  std::vector<double> grid_;
  Eigen::MatrixXd sqrt_cov_;
  std::vector<double> eigenvalues_;
};

inline ProcessSample sample_w_process(const std::vector<double>& grid,
                                      std::uint64_t seed) {
  WProcessSampler sampler(grid);
  Rng rng(seed);
  return sampler.sample(rng);
}

/// Exact law of sup |W| over [0, 2pi]: (sqrt(2)/2) sqrt(N1^2 + N2^2), which
/// is (sqrt(2)/2) times a standard Rayleigh variable.
inline double sup_abs_w_exact(double n1, double n2) {
  return 0.5 * std::sqrt(2.0) * std::hypot(n1, n2);
}

inline double sup_abs_w_exact_sample(Rng& rng) {
  auto [n1, n2] = rng.normal_pair();
  return sup_abs_w_exact(n1, n2);
}

inline double sup_abs_w_exact_sample(std::uint64_t seed) {
  Rng rng(seed);
  return sup_abs_w_exact_sample(rng);
}

/// CDF of sup |W| = (sqrt(2)/2) V with V standard Rayleigh.
inline double sup_abs_w_cdf(double x) {
  return rayleigh::cdf(x * std::sqrt(2.0));
}

inline constexpr std::size_t kCosineSupGridSize = 2048;

/// S_n with externally supplied centering: the sup over y in [0, 2pi] of
/// |n^{-1/2} sum_j (cos(Y_j - y) - Re[e^{-iy} phi_g(1/h)])| with
/// Y_j = (X_j/h) mod 2pi.  The sum collapses to a single shifted cosine, so
/// each grid point costs O(1) after one pass over the sample.
inline double cosine_process_sup_centered(const SampleSet& samples, double h,
                                          std::complex<double> phi_g_at_inv_h,
                                          std::size_t grid_size = kCosineSupGridSize) {
  samples.validate();
  if (!(h > 0.0)) throw DomainError("cosine_process_sup: h must be positive");
  if (grid_size < kCosineSupGridSize)
    throw GridTooCoarseError("cosine_process_sup: grid spacing above 2pi/2048");
  const double two_pi = 2.0 * std::numbers::pi;
  double sum_cos = 0.0, sum_sin = 0.0;
  for (double xj : samples.values) {
    const double y = std::fmod(xj / h, two_pi);
    sum_cos += std::cos(y);
    sum_sin += std::sin(y);
  }
  const double n = static_cast<double>(samples.n());
  // sum_j cos(Y_j - y) = cos(y) sum cos Y + sin(y) sum sin Y
  const double a = (sum_cos - n * phi_g_at_inv_h.real()) / std::sqrt(n);
  const double b = (sum_sin - n * phi_g_at_inv_h.imag()) / std::sqrt(n);
  std::vector<double> ys(grid_size + 1), vals(grid_size + 1);
  for (std::size_t i = 0; i <= grid_size; ++i) {
    ys[i] = two_pi * static_cast<double>(i) / static_cast<double>(grid_size);
    vals[i] = a * std::cos(ys[i]) + b * std::sin(ys[i]);
  }
  return refined_sup_abs(ys, vals).value;
}

/// S_n with the exact centering E cos((X_j - x)/h) = Re[e^{-ix/h} phi_g(1/h)]
/// derived from the closed-form phi_g = phi_f phi_k.
inline double cosine_process_sup(const SampleSet& samples, double h,
                                 const SignalModel& signal, const ErrorModel& error,
                                 std::size_t grid_size = kCosineSupGridSize) {
  return cosine_process_sup_centered(samples, h,
                                     signal.phi_observed(error, 1.0 / h), grid_size);
}

/// One-sample Kolmogorov-Smirnov distance, evaluated exactly at the jumps of
/// the empirical CDF.
inline double ks_one_sample(std::vector<double> values,
                            const std::function<double(double)>& cdf) {
  if (values.empty()) throw ConfigError("ks_one_sample: empty sample");
  std::sort(values.begin(), values.end());
  const double m = static_cast<double>(values.size());
  double d = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double f = cdf(values[i]);
    d = std::max(d, std::max(f - static_cast<double>(i) / m,
                             static_cast<double>(i + 1) / m - f));
  }
  return d;
}

/// Two-sample Kolmogorov-Smirnov distance.
inline double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw ConfigError("ks_two_sample: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::fabs(static_cast<double>(i) / na -
                              static_cast<double>(j) / nb));
  }
  return d;
}

}  // namespace supdeconv

#endif  // SUPDECONV_LIMIT_LAW_HPP
