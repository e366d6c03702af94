#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "rangequant/ingest.hpp"
#include "rangequant/rangevol.hpp"

namespace rangequant {

enum class VolModel {
  constant,     // sigma2 per day
  square_root,  // CIR variance, carried across days
  daily_path,   // caller-supplied per-day variance levels
};

struct SquareRootParams {
  double kappa = 5.0;    // mean reversion per day
  double theta = 1e-4;   // long-run daily variance
  double xi = 0.0;       // vol of vol; 0 selects 0.9*sqrt(2*kappa*theta) (Feller holds)
  double v0 = 0.0;       // 0 starts at theta
};

struct SimSpec {
  std::size_t n = 78;
  std::size_t m = 5;
  std::size_t days = 1;
  VolModel vol_model = VolModel::constant;
  double sigma2 = 1e-4;
  SquareRootParams square_root;
  std::vector<double> daily_variance;
  double jump_intensity = 0.0;  // expected jumps per day
  double jump_sd = 0.0;         // Gaussian jump size sd, log-return units
  double noise_omega = 0.0;     // iid Gaussian noise sd on every observed log-price
  double drift = 0.0;           // per day
  double initial_price = 100.0;
  Date start{std::chrono::year{2003}, std::chrono::January, std::chrono::day{2}};
  std::uint64_t seed = 1;
};

struct SimDay {
  IntradayDay day;
  double iv_true = 0.0;
  double iq_true = 0.0;  // discrete sum of sigma^4 * delta
  double jumps_sq_sum = 0.0;
  std::size_t n_jumps = 0;
};

// Euler scheme on the N = n*m grid; each day draws from its own split stream.
std::vector<SimDay> simulate(const SimSpec& spec);

void write_truth(const std::filesystem::path& path, const std::vector<SimDay>& days);

// `rv` samples the subinterval endpoints so it sees the same n as the range
// estimators.
enum class Estimator { rv, rrv, rbv, rrv_bvbc };
std::string to_string(Estimator e);

struct EstimatorStats {
  Estimator estimator;
  std::size_t days = 0;
  double bias = 0.0;
  double rmse = 0.0;
  double mean_rel_error = 0.0;  // mean |est - iv| / iv
  // Share of days inside the feasible 95% asymptotic interval (RQQ as the
  // quarticity estimate). NaN for estimators without a stated limit law.
  double coverage = 0.0;
};

std::vector<EstimatorStats> estimator_mc(const std::vector<SimDay>& days, const LambdaTable& lt,
                                         const std::vector<Estimator>& estimators);
std::vector<EstimatorStats> estimator_mc(const SimSpec& spec, const LambdaTable& lt,
                                         const std::vector<Estimator>& estimators);

}  // namespace rangequant
