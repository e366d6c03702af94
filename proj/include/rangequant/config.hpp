#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rangequant/benchmark.hpp"
#include "rangequant/features.hpp"
#include "rangequant/pipeline.hpp"
#include "rangequant/quantreg.hpp"

namespace rangequant {

struct DataConfig {
  std::string source = "simulate";  // or "files"
  std::map<std::string, std::filesystem::path> intraday;  // asset -> file
  std::filesystem::path vix;
  std::filesystem::path sp500;  // daily closes
  std::size_t expected_bars = 0;
};

struct EstimatorConfig {
  std::size_t m = 5;
  std::size_t lambda_paths = 1'000'000;
  std::uint64_t lambda_seed = 0;
  std::filesystem::path lambda_cache;  // empty: no cache
  bool adaptive_noise = true;
};

struct ModelConfig {
  std::string response = "market";  // or "asset"
  std::string asset;
  std::vector<std::string> columns{"const", "lag1", "mean5", "vix", "sp500", "jump"};
  std::vector<std::string> restricted{"const", "lag1", "sp500"};
  PcaScaling pca = PcaScaling::covariance;
  bool monthly = false;
};

struct FitConfig {
  std::vector<double> taus{0.1, 0.5, 0.9};
  BootOptions bootstrap;
};

struct RollConfig {
  std::vector<double> taus;
  std::size_t window = 500;
  std::size_t step = 1;
};

struct ForecastConfig {
  std::vector<double> taus;
  std::size_t window = 100;
  std::size_t step = 10;
  Innovation benchmark = Innovation::gaussian;
  bool benchmark_log_response = false;
  std::size_t tail_band = kDefaultTailBand;
};

struct EvaluateConfig {
  std::size_t hac_lags = kAutoLags;
  std::vector<double> dm_taus{0.1, 0.5, 0.9};
  std::optional<Date> split;
};

struct RunConfig {
  std::filesystem::path source_file;
  std::filesystem::path output_dir = "out";
  DataConfig data;
  PanelSpec simulation;
  EstimatorConfig estimator;
  ModelConfig model;
  FitConfig fit;
  RollConfig roll;
  ForecastConfig forecast;
  EvaluateConfig evaluate;
};

// Throws ConfigurationError naming the offending key. Relative paths resolve
// against the configuration file's directory.
RunConfig load_config(const std::filesystem::path& path);
RunConfig parse_config(const std::string& json_text, const std::filesystem::path& base_dir = ".");

}  // namespace rangequant
