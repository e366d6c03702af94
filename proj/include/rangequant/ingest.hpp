#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rangequant/date.hpp"

namespace rangequant {

// One trading day of one asset on a regular grid: n subintervals of m
// returns each, stored as N = n*m + 1 log-prices (the first is the open).
struct IntradayDay {
  Date date;
  std::vector<double> log_prices;
  std::size_t n = 0;
  std::size_t m = 0;

  std::size_t returns() const noexcept { return log_prices.empty() ? 0 : log_prices.size() - 1; }
  double open_price() const;
  double close_price() const;
};

// Validates the grid invariant. Throws LengthError if N-1 is not a positive
// multiple of m, DomainError on non-finite prices.
IntradayDay make_day(Date date, std::vector<double> log_prices, std::size_t m);

struct DayDiagnostic {
  Date date;
  std::string reason;
};

struct IntradayLoad {
  std::vector<IntradayDay> days;
  std::vector<DayDiagnostic> rejected;
};

// Loads a `date,time,price` file. Days whose bar count does not satisfy the
// grid invariant (or differs from `expected_bars` when non-zero) are rejected
// with a diagnostic rather than repaired.
IntradayLoad load_intraday(const std::filesystem::path& path, std::size_t m,
                           std::size_t expected_bars = 0);

// Writes the same format load_intraday reads; prices are exp(log_prices).
// Bars are stamped one minute apart starting at `first_bar` (HH:MM).
void write_intraday(const std::filesystem::path& path, const std::vector<IntradayDay>& days,
                    const std::string& first_bar = "09:30");

double daily_return(double close_t, double close_t1);

struct Descriptive {
  double mean = 0.0;
  double sd = 0.0;
  double median = 0.0;
  double iqr = 0.0;
  double skewness = 0.0;
  double kurtosis = 0.0;  // raw fourth standardised moment, 3 for a Gaussian
};

// sd uses the n-1 divisor; quantiles use linear interpolation between order
// statistics. Skewness and kurtosis are NaN for a constant series.
Descriptive describe(const std::vector<double>& series);

struct NamedSeries {
  std::string name;
  std::vector<Date> dates;
  std::vector<double> values;
};

NamedSeries load_daily_series(const std::filesystem::path& path, const std::string& name,
                              bool take_log = false);
void write_daily_series(const std::filesystem::path& path, const NamedSeries& series);

// Close-to-close log returns; the first day has no return and is omitted.
NamedSeries daily_returns(const std::vector<IntradayDay>& days, const std::string& name);

struct DailyPanel {
  std::vector<Date> dates;
  std::vector<std::string> names;
  std::vector<std::vector<double>> columns;

  std::size_t rows() const noexcept { return dates.size(); }
  const std::vector<double>& column(const std::string& name) const;
  bool has(const std::string& name) const;
  bool operator==(const DailyPanel&) const = default;
};

struct AlignResult {
  DailyPanel panel;
  std::vector<std::pair<std::string, std::vector<Date>>> dropped;
};

// Inner join on dates, ascending. Non-finite values count as gaps.
// Throws AlignmentError on duplicate dates or an empty intersection.
AlignResult align(const std::vector<NamedSeries>& series);

// Splits a panel back into named series (inverse of align for aligned input).
std::vector<NamedSeries> to_series(const DailyPanel& panel);

}  // namespace rangequant
