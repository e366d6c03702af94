#pragma once

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace rangequant::csv {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> lines;  // 1-based source line of each row

  std::size_t column(std::string_view name) const;  // throws ParseError if absent
};

// Reads a comma-separated file with a header row. Blank lines are skipped.
// When `expected_header` is non-empty the header must match it exactly.
Table read(const std::filesystem::path& path,
           const std::vector<std::string>& expected_header = {});

double parse_double(std::string_view field, std::size_t line);
std::vector<std::string> split(std::string_view line);

// Shortest representation that round-trips ("%.17g"); nan/inf spelled out.
std::string format(double v);

class Writer {
 public:
  Writer(const std::filesystem::path& path, const std::vector<std::string>& header);
  void row(const std::vector<std::string>& fields);
  void row(std::initializer_list<std::string> fields) {
    row(std::vector<std::string>(fields));
  }

 private:
  std::ofstream out_;
  std::filesystem::path path_;
  std::size_t width_;
};

}  // namespace rangequant::csv
