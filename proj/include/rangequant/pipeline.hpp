#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rangequant/benchmark.hpp"
#include "rangequant/density.hpp"
#include "rangequant/evaluate.hpp"
#include "rangequant/features.hpp"
#include "rangequant/ingest.hpp"
#include "rangequant/quantreg.hpp"
#include "rangequant/simulate.hpp"

namespace rangequant {

// Multi-asset panel driven by a common AR(1) log-variance factor.
struct PanelSpec {
  std::size_t assets = 4;
  std::size_t days = 600;
  std::size_t n = 78;
  std::size_t m = 5;
  double sigma2 = 1e-4;             // mean daily variance level
  double factor_persistence = 0.95;
  double factor_sd = 0.2;
  double idio_sd = 0.1;
  double jump_intensity = 0.1;
  double jump_sd = 0.005;
  double noise_omega = 0.0;
  Date start{std::chrono::year{2003}, std::chrono::January, std::chrono::day{2}};
  std::uint64_t seed = 1;
};

struct SimPanel {
  std::vector<std::string> assets;
  std::vector<std::vector<SimDay>> days;  // per asset
  NamedSeries vix;
  NamedSeries sp500;  // index close levels
};

SimPanel simulate_panel(const PanelSpec& spec);

// Rolling windows [w*step, w*step + window) each forecast the following
// `step` rows one step ahead.
std::size_t forecast_window_count(std::size_t n_obs, std::size_t window, std::size_t step);

struct QuantileForecasts {
  std::vector<Date> dates;
  std::vector<double> realized;
  std::vector<QuantileCurve> curves;
  std::vector<WindowFailure> failures;
};

QuantileForecasts quantile_forecasts(const QuantDesign& design, const std::vector<double>& taus, std::size_t window,
                                     std::size_t step, std::size_t tail_band = kDefaultTailBand);

// Density of the benchmark on the level scale of the response; when
// `log_scale` is set the handle describes log y.
struct BenchmarkDensity {
  DensityHandle handle;
  bool log_scale = false;

  double log_density(double v) const;
  double cdf(double v) const;
  double quantile(double tau) const;
};

struct BenchmarkForecasts {
  Innovation innovation = Innovation::gaussian;
  bool log_scale = false;
  std::vector<Date> dates;
  std::vector<double> realized;
  std::vector<BenchmarkDensity> densities;
  std::vector<WindowFailure> failures;
};

BenchmarkForecasts benchmark_forecasts(const QuantDesign& design, Innovation innovation, std::size_t window,
                                       std::size_t step, bool log_response = false);

struct ForecastScores {
  std::vector<Date> dates;
  std::vector<double> realized;
  std::vector<double> log_density;
  std::vector<double> pit;
  std::vector<double> taus;
  std::vector<std::vector<double>> quantiles;  // [tau index][date]
};

ForecastScores score(const QuantileForecasts& f, const std::vector<double>& taus);
ForecastScores score(const BenchmarkForecasts& f, const std::vector<double>& taus);
// Keeps only dates present in both, in ascending order.
void intersect(ForecastScores& a, ForecastScores& b);

struct EvalSettings {
  std::vector<double> dm_taus{0.1, 0.5, 0.9};
  std::size_t hac_lags = kAutoLags;
  double y_mean = 0.0;  // standardisation for the AG weights
  double y_sd = 1.0;
  std::optional<Date> split;
};

// Berkowitz (and KS) per model, AG for all five weights and DM per tau for
// the pair; f is the first model in every comparison.
std::vector<EvalRow> evaluate_pair(const std::string& name_f, const ForecastScores& f, const std::string& name_g,
                                   const ForecastScores& g, const EvalSettings& settings);

}  // namespace rangequant
