#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rangequant/date.hpp"

namespace rangequant {

enum class PcaScaling { covariance, correlation };

struct PcaResult {
  Eigen::VectorXd loadings;  // unit norm, sum >= 0
  std::vector<double> scores;
  double explained_fraction = 0.0;
};

// Rows are dates, columns assets. Columns are centered (and standardized
// under PcaScaling::correlation) before the eigen decomposition.
PcaResult first_pc(const Eigen::MatrixXd& panel, PcaScaling scaling = PcaScaling::covariance);
PcaResult first_pc(const std::vector<std::vector<double>>& columns,
                   PcaScaling scaling = PcaScaling::covariance);

// Mean of y_t, ..., y_{t-m+1} with t counted from 1.
double har_mean(const std::vector<double>& y, std::size_t t, std::size_t m);

struct QuantDesign {
  std::vector<Date> dates;
  std::vector<std::string> names;
  Eigen::MatrixXd X;
  Eigen::VectorXd y;

  std::size_t rows() const noexcept { return static_cast<std::size_t>(X.rows()); }
  std::size_t cols() const noexcept { return static_cast<std::size_t>(X.cols()); }
  std::size_t index_of(const std::string& name) const;
  QuantDesign select(const std::vector<std::string>& columns) const;
  QuantDesign slice(std::size_t first, std::size_t count) const;
};

struct DesignOptions {
  bool monthly = false;  // adds mean21 after mean5 and drops 21 leading dates
};

// Row t regresses y_t on information dated t-1 or earlier:
// [const, lag1, mean5, vix, sp500, jump]. Dates must be strictly ascending.
QuantDesign build_design(const std::vector<Date>& dates, const std::vector<double>& y,
                         const std::vector<double>& vix, const std::vector<double>& sp500,
                         const std::vector<double>& jump, const DesignOptions& options = {});

// `date,<names...>,y`
void write_design(const std::filesystem::path& path, const QuantDesign& design);
QuantDesign read_design(const std::filesystem::path& path);

}  // namespace rangequant
