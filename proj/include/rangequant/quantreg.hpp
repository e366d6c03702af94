#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rangequant/features.hpp"

namespace rangequant {

double pinball(double u, double tau);
double pinball_sum(const Eigen::VectorXd& residuals, double tau);

// Empirical tau-quantile, lower convention: the ceil(n*tau)-th order statistic.
double empirical_quantile(std::vector<double> values, double tau);

struct QrFit {
  double tau = 0.5;
  Eigen::VectorXd beta;
  double objective = 0.0;
  std::size_t n_obs = 0;
  std::vector<std::string> column_names;
  std::size_t iterations = 0;  // interior-point plus vertex steps
  bool degenerate = false;     // some non-basic residual is zero at the optimum
};

struct SolverOptions {
  std::size_t max_ip_iterations = 100;
  std::size_t max_vertex_steps = 0;  // 0: 20*n + 1000
};

// Minimizes sum rho_tau(y - X beta): interior point to get close, then exact
// vertex descent to a basic optimal solution.
QrFit fit(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, double tau,
          const SolverOptions& options = {});
QrFit fit(const QuantDesign& design, double tau, const SolverOptions& options = {});

enum class Resampling { xy_pairs, moving_block };

struct BootOptions {
  std::size_t B = 1000;
  std::uint64_t seed = 1;
  Resampling scheme = Resampling::xy_pairs;
  std::size_t block_length = 20;
};

struct BootReport {
  Eigen::VectorXd se;
  Eigen::VectorXd p_values;  // 2(1 - Phi(|beta| / se))
  std::size_t B = 0;
  std::uint64_t seed = 0;
  std::size_t failures = 0;
  Eigen::MatrixXd draws;  // successful replicates x coefficients
};

BootReport bootstrap(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, const QrFit& fit,
                     const BootOptions& options);
BootReport bootstrap(const QuantDesign& design, const QrFit& fit, const BootOptions& options);

// One resample per replicate shared by all taus; draws[k] belongs to taus[k].
struct JointBootReport {
  std::vector<double> taus;
  std::vector<Eigen::MatrixXd> draws;
  std::size_t B = 0;
  std::uint64_t seed = 0;
  std::size_t failures = 0;
};

JointBootReport joint_bootstrap(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                                const std::vector<double>& taus, const BootOptions& options);

// 1 - RASW / TASW against the unconditional empirical quantile of y.
double pseudo_r1(const QrFit& fit, const Eigen::VectorXd& y);

struct WaldResult {
  double stat = 0.0;
  double df = 0.0;
  double df2 = 0.0;  // denominator df for F-referenced tests, else 0
  double p_value = 1.0;
};

// Chi-square Wald test that the listed coefficients are jointly zero.
WaldResult xi_w_test(const QrFit& fit, const BootReport& boot, const std::vector<std::size_t>& restricted);
WaldResult xi_w_test(const QrFit& fit, const BootReport& boot, const std::vector<std::string>& restricted);

struct SlopeEqualityResult {
  WaldResult joint;
  std::vector<std::string> names;  // non-intercept coefficients
  std::vector<WaldResult> per_coefficient;
};

// Equality of all non-intercept slopes across taus (column 0 is the intercept).
SlopeEqualityResult slope_equality_test(const std::vector<QrFit>& fits, const JointBootReport& boot);

struct WindowFailure {
  std::size_t window = 0;
  Date window_end;
  std::string message;
};

struct RollResult {
  std::vector<double> taus;
  std::size_t window = 0;
  std::size_t step = 0;
  std::vector<std::string> column_names;
  std::vector<Date> window_ends;
  std::vector<std::size_t> first_rows;
  // coefs[w][k]: window w, taus[k]; empty vector when the window failed.
  std::vector<std::vector<Eigen::VectorXd>> coefs;
  std::vector<WindowFailure> failures;
};

std::size_t window_count(std::size_t n_obs, std::size_t window, std::size_t step);
RollResult roll(const QuantDesign& design, const std::vector<double>& taus, std::size_t window,
                std::size_t step, const SolverOptions& options = {});

// `window_end,tau,coef_name,estimate,se,p_value`
struct CoefficientRow {
  Date window_end;
  double tau = 0.0;
  std::string coef_name;
  double estimate = 0.0;
  double se = 0.0;
  double p_value = 0.0;
};
void write_coefficients(const std::filesystem::path& path, const std::vector<CoefficientRow>& rows);
std::vector<CoefficientRow> read_coefficients(const std::filesystem::path& path);
std::vector<CoefficientRow> coefficient_rows(const RollResult& roll);

// `test,stat,df,p_value`
struct TestRow {
  std::string test;
  double stat = 0.0;
  double df = 0.0;
  double p_value = 0.0;
};
void write_tests(const std::filesystem::path& path, const std::vector<TestRow>& rows);

}  // namespace rangequant
