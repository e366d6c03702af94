#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

namespace rangequant {

struct BerkowitzResult {
  double lr = 0.0;
  double df = 3.0;
  double p_value = 1.0;
  double mu_hat = 0.0;
  double sigma_hat = 1.0;
  double rho_hat = 0.0;
  std::size_t n = 0;
};

// LR of a Gaussian AR(1) (exact likelihood, stationary first term) against
// iid N(0,1). The statistic depends on the order of z.
BerkowitzResult berkowitz(const std::vector<double>& z);

// Inverse normal after clipping to [1e-9, 1 - 1e-9].
std::vector<double> pit_to_z(const std::vector<double>& pit);
double pit_to_z(double pit);

enum class AgWeight { NW, CE, TL, RT, LT };
std::string to_string(AgWeight w);
const std::vector<AgWeight>& all_ag_weights();
double ag_weight(AgWeight w, double y_std);

struct PredictiveTest {
  double stat = 0.0;
  double p_value = 1.0;
  double mean = 0.0;  // mean weighted log-ratio or mean loss differential
  std::size_t n = 0;
  std::size_t lags = 0;
};

inline constexpr std::size_t kAutoLags = static_cast<std::size_t>(-1);
std::size_t default_hac_lags(std::size_t n);

// Positive stat favours f (first argument).
PredictiveTest ag_test(const std::vector<double>& logf, const std::vector<double>& logg,
                       const std::vector<double>& y_std, AgWeight weight, std::size_t lags = kAutoLags);
// d = loss_i - loss_j; negative stat favours i.
PredictiveTest dm_test(const std::vector<double>& loss_i, const std::vector<double>& loss_j,
                       std::size_t lags = kAutoLags);

// Bartlett-kernel long-run variance with population autocovariances.
double newey_west(const std::vector<double>& series, std::size_t lags);

struct KsResult {
  double d = 0.0;
  double p_value = 1.0;
};
// One-sample Kolmogorov-Smirnov test against U(0,1).
KsResult ks_uniform(std::vector<double> u);
double kolmogorov_sf(double lambda);

// `model,test,variant,stat,p_value,n`
struct EvalRow {
  std::string model;
  std::string test;
  std::string variant;
  double stat = 0.0;
  double p_value = 1.0;
  std::size_t n = 0;
};
void write_eval_report(const std::filesystem::path& path, const std::vector<EvalRow>& rows);
std::vector<EvalRow> read_eval_report(const std::filesystem::path& path);

}  // namespace rangequant
