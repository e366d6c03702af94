#pragma once

#include <filesystem>
#include <vector>

#include "rangequant/date.hpp"

namespace rangequant {

// first, first+step, ..., last (inclusive, rounded to the step).
std::vector<double> tau_grid(double first, double last, double step);
std::vector<double> density_taus();     // 0.02..0.98, 49 points
std::vector<double> estimation_taus();  // 0.05..0.95, 19 points

struct Rearranged {
  std::vector<double> q;
  std::size_t crossings = 0;  // inversions removed by the sort
};
Rearranged rearrange(std::vector<double> q_raw);

inline constexpr std::size_t kDefaultTailBand = 5;

// Piecewise-linear CDF through (q_j, tau_j) with exponential tails carrying
// the outer masses tau_0 and 1 - tau_K. The tail rate uses the mean density
// over the outer `tail_band` intervals; 1 uses the boundary interval alone,
// which explodes when rearrangement leaves tied outer knots.
class QuantileCurve {
 public:
  QuantileCurve(std::vector<double> taus, const std::vector<double>& q_raw,
                std::size_t tail_band = kDefaultTailBand);

  const std::vector<double>& taus() const noexcept { return taus_; }
  const std::vector<double>& q() const noexcept { return q_; }
  std::size_t crossings() const noexcept { return crossings_; }
  double lower_rate() const noexcept { return lower_rate_; }
  double upper_rate() const noexcept { return upper_rate_; }

  double cdf(double v) const;
  double pit(double v) const { return cdf(v); }
  double log_density(double v) const;
  double quantile(double tau) const;

 private:
  std::vector<double> taus_;
  std::vector<double> q_;
  std::size_t crossings_ = 0;
  double lower_rate_ = 0.0;
  double upper_rate_ = 0.0;
};

// `date,tau,quantile`, one row per (date, knot).
void write_curves(const std::filesystem::path& path, const std::vector<Date>& dates,
                  const std::vector<QuantileCurve>& curves);
struct DatedCurves {
  std::vector<Date> dates;
  std::vector<QuantileCurve> curves;
};
DatedCurves read_curves(const std::filesystem::path& path);

// `date,pit,z`
void write_pits(const std::filesystem::path& path, const std::vector<Date>& dates,
                const std::vector<double>& pit, const std::vector<double>& z);

}  // namespace rangequant
