#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rangequant/features.hpp"

namespace rangequant {

// Modified Bessel function of the second kind, order 1, as K1(x) * exp(x).
double bessel_k1_scaled(double x);

// Log-density of the NIG law standardised to mean 0 and variance 1.
double nig_logpdf(double z, double alpha, double beta);

class NigDistribution {
 public:
  NigDistribution(double alpha, double beta);
  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double logpdf(double z) const;
  double pdf(double z) const;
  double cdf(double z) const;
  double quantile(double p) const;

 private:
  double integrate(double a, double b) const;
  double alpha_;
  double beta_;
  double gamma_;
  double delta_;
  double mu_;
  std::vector<double> grid_;  // knots of the cached CDF
  std::vector<double> cum_;   // CDF at each knot
};

enum class Innovation { gaussian, nig };

struct GarchParams {
  double omega = 0.0;
  double alpha = 0.0;
  double gamma = 0.0;
  double beta = 0.0;
  double persistence() const noexcept { return alpha + 0.5 * gamma + beta; }
};

struct HarxGjrParams {
  std::vector<std::string> names;  // mean columns
  Eigen::VectorXd mean_coefs;
  GarchParams garch;
  Innovation innovation = Innovation::gaussian;
  double nig_alpha = 0.0;
  double nig_beta = 0.0;
  double loglik = 0.0;
  std::size_t n_obs = 0;
  // Standard errors from the inverse numerical Hessian, in the order
  // mean_coefs, omega, alpha, gamma, beta[, nig_alpha, nig_beta].
  Eigen::VectorXd se;
  bool near_boundary = false;  // persistence above 0.99
  bool converged = false;

  Eigen::VectorXd vector() const;  // same order as se
  std::vector<std::string> labels() const;
};

struct VariancePath {
  Eigen::VectorXd residuals;
  Eigen::VectorXd h;  // length n + 1; h[n] is the one-step-ahead variance
};

// GJR recursion; h_0 is the mean squared residual over the first
// `backcast_rows` rows (all rows when 0).
VariancePath variance_path(const HarxGjrParams& p, const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                           std::size_t backcast_rows = 0);

double harx_gjr_loglik(const HarxGjrParams& p, const Eigen::MatrixXd& X, const Eigen::VectorXd& y);

struct GjrFitOptions {
  std::size_t max_iterations = 500;
};

HarxGjrParams fit_harx_gjr(const QuantDesign& design, Innovation innovation, const GjrFitOptions& options = {});
HarxGjrParams fit_harx_gjr(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, Innovation innovation,
                           const GjrFitOptions& options = {});

class DensityHandle {
 public:
  DensityHandle(double location, double scale, Innovation innovation, double nig_alpha = 0.0, double nig_beta = 0.0);
  double location() const noexcept { return location_; }
  double scale() const noexcept { return scale_; }
  Innovation innovation() const noexcept { return innovation_; }
  double nig_alpha() const noexcept { return nig_ ? nig_->alpha() : 0.0; }
  double nig_beta() const noexcept { return nig_ ? nig_->beta() : 0.0; }
  double log_density(double v) const;
  double cdf(double v) const;
  double quantile(double tau) const;

 private:
  double location_;
  double scale_;
  Innovation innovation_;
  std::shared_ptr<const NigDistribution> nig_;
};

DensityHandle forecast_density(const HarxGjrParams& params, const Eigen::VectorXd& x_next, double h_next);

QuantDesign log_response_variant(const QuantDesign& design);
// Level-scale log-density from the log-scale one (change of variables).
double level_log_density(double log_scale_log_density, double v);

// `name,value,se`
void write_params(const std::filesystem::path& path, const HarxGjrParams& params);

}  // namespace rangequant
