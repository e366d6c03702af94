#pragma once

#include <chrono>
#include <string>
#include <string_view>
#include <vector>

namespace rangequant {

// Exchange-local calendar date; no time zone arithmetic anywhere.
using Date = std::chrono::year_month_day;

// Parses YYYY-MM-DD. Throws DomainError on anything else.
Date parse_date(std::string_view text);
std::string format_date(const Date& d);

// `count` consecutive weekdays starting at `first` (or the next weekday).
std::vector<Date> business_days(Date first, std::size_t count);

}  // namespace rangequant
