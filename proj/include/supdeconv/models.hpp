#ifndef SUPDECONV_MODELS_HPP
#define SUPDECONV_MODELS_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "supdeconv/errors.hpp"
#include "supdeconv/rng.hpp"
#include "supdeconv/special.hpp"

namespace supdeconv {

enum class ErrorFamily { gaussian, gaussian_laplace_mix, custom };

/// Error (noise) distribution with an exactly known characteristic function
/// phi and supersmooth tail parameters (C, lambda0, lambda, mu):
///   phi(t) ~ C |t|^{lambda0} exp(-|t|^lambda / mu)  as |t| -> infinity.
/// log_phi is the exact log of phi, kept separate so that tail ratios and the
/// u-function can be formed in log space where phi itself underflows.
struct ErrorModel {
  ErrorFamily family = ErrorFamily::custom;
  std::string name = "custom";
  double C = 1.0;
  double lambda0 = 0.0;
  double lambda = 2.0;
  double mu = 2.0;
  std::function<double(double)> phi;
  std::function<double(double)> log_phi;
  std::function<double(Rng&)> sample;

  bool theorem_applicable() const { return lambda == 2.0; }

  // log of the tail form C |t|^{lambda0} exp(-|t|^lambda/mu), t != 0
  double log_tail(double t) const {
    const double a = std::fabs(t);
    return std::log(C) + lambda0 * std::log(a) - std::pow(a, lambda) / mu;
  }

  double tail_ratio(double t) const { return std::exp(log_phi(t) - log_tail(t)); }

  static ErrorModel gaussian() {
    ErrorModel m;
    m.family = ErrorFamily::gaussian;
    m.name = "gaussian";
    m.C = 1.0;
    m.lambda0 = 0.0;
    m.lambda = 2.0;
    m.mu = 2.0;
    m.phi = [](double t) { return std::exp(-0.5 * t * t); };
    m.log_phi = [](double t) { return -0.5 * t * t; };
    m.sample = [](Rng& rng) { return rng.normal(); };
    return m;
  }

  // Gaussian convolved with standard Laplace: phi(t) = exp(-t^2/2)/(1+t^2),
  // so lambda0 = -2 and the u-function is 1/t^2 rather than identically zero.
  static ErrorModel gaussian_laplace_mix() {
    ErrorModel m;
    m.family = ErrorFamily::gaussian_laplace_mix;
    m.name = "gaussian_laplace_mix";
    m.C = 1.0;
    m.lambda0 = -2.0;
    m.lambda = 2.0;
    m.mu = 2.0;
    m.phi = [](double t) { return std::exp(-0.5 * t * t) / (1.0 + t * t); };
    m.log_phi = [](double t) { return -0.5 * t * t - std::log1p(t * t); };
    m.sample = [](Rng& rng) { return rng.normal() + rng.laplace(); };
    return m;
  }

  /// Degenerate error-free model, phi == 1.  Not supersmooth; used to
  /// exercise closed-form checks of the estimator.
  static ErrorModel identity() {
    ErrorModel m;
    m.name = "identity";
    m.lambda = 2.0;
    m.phi = [](double) { return 1.0; };
    m.log_phi = [](double) { return 0.0; };
    m.sample = [](Rng&) { return 0.0; };
    return m;
  }
};

inline std::complex<double> phi_k_eval(const ErrorModel& model, double t) {
  return {model.phi(t), 0.0};
}

enum class KernelFamily { sinc_flat, polynomial_m };

/// Fourier-domain kernel phi_w: even, supported on [-1,1], phi_w(0) = 1, with
/// edge expansion phi_w(1-t) = A t^alpha + o(t^alpha) as t -> 0.
struct KernelModel {
  KernelFamily family = KernelFamily::sinc_flat;
  std::string name = "sinc_flat";
  int m = 0;
  double A = 1.0;
  double alpha = 0.0;

  double phi(double s) const {
    const double a = std::fabs(s);
    if (a > 1.0) return 0.0;
    if (family == KernelFamily::sinc_flat) return 1.0;
    const double b = 1.0 - s * s;
    double p = 1.0;
    for (int i = 0; i < m; ++i) p *= b;
    return p;
  }

  double edge_ratio(double t) const { return phi(1.0 - t) / (A * std::pow(t, alpha)); }

  static KernelModel sinc_flat() { return {}; }

  static KernelModel polynomial(int order) {
    if (order < 1) throw ConfigError("polynomial kernel order must be >= 1");
    KernelModel k;
    k.family = KernelFamily::polynomial_m;
    k.name = "polynomial_" + std::to_string(order);
    k.m = order;
    k.A = std::ldexp(1.0, order);  // (1-(1-t)^2)^m = (2t)^m (1 + o(1))
    k.alpha = static_cast<double>(order);
    return k;
  }
};

/// Signal (target) density with closed-form characteristic function, used
/// for data generation and as the oracle for E[f_nh].
struct SignalModel {
  enum class Family { gaussian, gaussian_mixture };

  Family family = Family::gaussian;
  std::string name = "gaussian";
  std::vector<double> weights{1.0};
  std::vector<double> means{0.0};
  std::vector<double> sds{1.0};

  double pdf(double x) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      const double z = (x - means[i]) / sds[i];
      acc += weights[i] * std::exp(-0.5 * z * z) /
             (sds[i] * std::sqrt(2.0 * std::numbers::pi));
    }
    return acc;
  }

  std::complex<double> phi(double t) const {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < weights.size(); ++i) {
      const double mag = std::exp(-0.5 * sds[i] * sds[i] * t * t);
      acc += weights[i] * std::complex<double>{mag * std::cos(means[i] * t),
                                               mag * std::sin(means[i] * t)};
    }
    return acc;
  }

  double sample(Rng& rng) const {
    std::size_t idx = 0;
    if (weights.size() > 1) {
      double u = rng.uniform();
      for (; idx + 1 < weights.size(); ++idx) {
        if (u < weights[idx]) break;
        u -= weights[idx];
      }
    }
    return means[idx] + sds[idx] * rng.normal();
  }

  static SignalModel gaussian(double mean, double sd) {
    if (!(sd > 0.0)) throw ConfigError("signal sd must be positive");
    SignalModel s;
    s.means = {mean};
    s.sds = {sd};
    return s;
  }

  static SignalModel mixture(std::vector<double> weights, std::vector<double> means,
                             std::vector<double> sds) {
    if (weights.size() != means.size() || weights.size() != sds.size() ||
        weights.empty())
      throw ConfigError("signal mixture: component lists must match and be nonempty");
    double total = 0.0;
    for (double w : weights) {
      if (!(w > 0.0)) throw ConfigError("signal mixture: weights must be positive");
      total += w;
    }
    for (double& w : weights) w /= total;
    for (double sd : sds)
      if (!(sd > 0.0)) throw ConfigError("signal mixture: sds must be positive");
    SignalModel s;
    s.family = Family::gaussian_mixture;
    s.name = "gaussian_mixture";
    s.weights = std::move(weights);
    s.means = std::move(means);
    s.sds = std::move(sds);
    return s;
  }

  /// Characteristic function of the observed X = Y + Z.
  std::complex<double> phi_observed(const ErrorModel& error, double t) const {
    return phi(t) * error.phi(t);
  }
};

struct ConditionCheck {
  std::string name;
  bool pass = false;
  double measured = 0.0;  // the quantity the check thresholds, model-dependent
};

struct ValidationReport {
  std::vector<ConditionCheck> checks;
  bool theorem_applicable = false;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Measures the Condition-1/Condition-2 invariants on both models and
/// reports pass/fail per check; failures are carried in the report, not
/// thrown.
inline ValidationReport validate_conditions(const ErrorModel& error,
                                            const KernelModel& kernel) {
  ValidationReport rep;
  rep.theorem_applicable = error.theorem_applicable();

  rep.checks.push_back({"phi_k(0) = 1", std::fabs(error.phi(0.0) - 1.0) <= 1e-12,
                        error.phi(0.0)});

  // Nonvanishing: direct values on a moderate grid, log form further out
  // (a finite log is a nonzero phi).
  {
    bool ok = true;
    double worst = 1.0;
    for (int i = -200; i <= 200; ++i) {
      const double t = 0.05 * i;
      const double v = std::fabs(error.phi(t));
      worst = std::min(worst, v);
      if (v == 0.0) ok = false;
    }
    for (double t : {20.0, 50.0, 100.0})
      if (!std::isfinite(error.log_phi(t))) ok = false;
    rep.checks.push_back({"phi_k nonvanishing on validation grid", ok, worst});
  }

  {
    double worst = 0.0;
    for (double t : {20.0, 50.0, 100.0})
      worst = std::max(worst, std::fabs(error.tail_ratio(t) - 1.0));
    rep.checks.push_back({"phi_k tail ratio within 1% at t in {20,50,100}",
                          worst <= 0.01, worst});
  }

  rep.checks.push_back({"phi_w(0) = 1", std::fabs(kernel.phi(0.0) - 1.0) <= 1e-12,
                        kernel.phi(0.0)});

  {
    bool ok = true;
    for (int i = 0; i <= 100; ++i) {
      const double s = 0.01 * i;
      if (std::fabs(kernel.phi(s) - kernel.phi(-s)) > 1e-12) ok = false;
    }
    for (double s : {1.0 + 1e-9, 1.5, 3.0})
      if (kernel.phi(s) != 0.0 || kernel.phi(-s) != 0.0) ok = false;
    rep.checks.push_back({"phi_w even, zero outside [-1,1]", ok, 0.0});
  }

  {
    double worst = 0.0;
    for (double t : {1e-2, 1e-3})
      worst = std::max(worst, std::fabs(kernel.edge_ratio(t) - 1.0));
    rep.checks.push_back({"phi_w edge ratio within 2% at t in {1e-2,1e-3}",
                          worst <= 0.02, worst});
  }

  rep.checks.push_back({"lambda in (0,2]",
                        error.lambda > 0.0 && error.lambda <= 2.0, error.lambda});

  return rep;
}

}  // namespace supdeconv

#endif  // SUPDECONV_MODELS_HPP
