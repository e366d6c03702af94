#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "rangequant/ingest.hpp"

namespace rangequant {

// One point of the noise-adjusted moment grid. `omega_ratio` is the noise
// standard deviation in units of the subinterval diffusion scale sigma*sqrt(delta).
struct TildePoint {
  double omega_ratio = 0.0;
  std::array<double, 2> moments{};  // E|range - 2*omega_ratio|^r, r = 1, 2
};

// Moments of the range of a standard Brownian motion observed on an m-step
// grid over the unit interval, plus their noise-adjusted counterparts.
struct LambdaTable {
  std::size_t m = 0;
  std::array<double, 4> lambda{};       // lambda[r-1] = E[range^r]
  std::array<double, 2> lambda_tilde{}; // at `omega_ratio`
  std::size_t n_paths = 0;
  std::uint64_t seed = 0;
  double omega_ratio = 0.0;
  // When it holds more than one point, rrv_bvbc re-estimates the ratio per day
  // and interpolates along it instead of using `lambda_tilde`.
  std::vector<TildePoint> tilde_grid;

  double lambda_r(int r) const { return lambda.at(static_cast<std::size_t>(r - 1)); }
  // (lambda_4 - lambda_2^2) / lambda_2^2, the RRV efficiency constant.
  double efficiency_constant() const;
  // Linear in omega_ratio between grid points, linear extrapolation past the ends.
  std::array<double, 2> tilde_at(double omega_ratio) const;
  // Variance constant of sqrt(n)(1 - RBV/RRV) under the no-jump null.
  double jump_test_variance() const;
  bool adaptive() const noexcept { return tilde_grid.size() > 1; }
};

inline constexpr std::size_t kDefaultLambdaPaths = 1'000'000;

// Omega ratios {0, 0.05, ..., 1.0}.
std::vector<double> default_omega_grid();

// Monte Carlo moments; deterministic for a given (m, n_paths, seed, ratios),
// independent of the worker count. `omega_grid` empty means no adaptive grid.
LambdaTable lambda_table(std::size_t m, std::size_t n_paths, std::uint64_t seed,
                         double omega_ratio = 0.0, const std::vector<double>& omega_grid = {});

// Cache CSV `m,r,kind,value,n_paths,seed,omega_ratio`. Looks the table up by
// (m, n_paths, seed, omega_ratio, grid); computes and appends it when absent.
LambdaTable cached_lambda_table(const std::filesystem::path& cache, std::size_t m,
                                std::size_t n_paths, std::uint64_t seed, double omega_ratio = 0.0,
                                const std::vector<double>& omega_grid = {});
std::vector<LambdaTable> read_lambda_cache(const std::filesystem::path& cache);
void write_lambda_cache(const std::filesystem::path& cache, const std::vector<LambdaTable>& tables);

// High-low range of the log-price over each subinterval's m+1 grid points.
std::vector<double> subinterval_ranges(const IntradayDay& day);

double realized_variance(const IntradayDay& day);
// Realized variance from the n subinterval endpoint returns only.
double sparse_realized_variance(const IntradayDay& day);
double realized_range_variance(const IntradayDay& day, const LambdaTable& lt);
double range_bipower(const IntradayDay& day, const LambdaTable& lt);
double range_quadpower(const IntradayDay& day, const LambdaTable& lt);
double noise_variance(const IntradayDay& day);
// Per-day omega ratio solving ratio = omega * tilde_1(ratio) / mean|s_i - 2 omega|.
double estimate_omega_ratio(const std::vector<double>& ranges, const LambdaTable& lt, double omega);
double rrv_bvbc(const IntradayDay& day, const LambdaTable& lt, double omega2);
// Ratio jump statistic; +inf when RBV = 0 < RRV. Throws UndefinedStatisticError when RRV = 0.
double jump_stat(const IntradayDay& day, const LambdaTable& lt);

struct DayEstimates {
  double rv = 0.0;
  double rrv = 0.0;
  double rbv = 0.0;
  double rqq = 0.0;
  double omega2 = 0.0;
  double rrv_bvbc = 0.0;
  double z_tp = 0.0;     // NaN when undefined
  bool z_tp_defined = true;
  double jump = 0.0;     // rrv - rrv_bvbc, may be negative
};

DayEstimates day_estimates(const IntradayDay& day, const LambdaTable& lt);

struct AssetDayEstimates {
  Date date;
  DayEstimates est;
};

void write_estimates(const std::filesystem::path& path, const std::string& asset,
                     const std::vector<AssetDayEstimates>& rows);
std::vector<AssetDayEstimates> read_estimates(const std::filesystem::path& path);

}  // namespace rangequant
