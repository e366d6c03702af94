#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "rangequant/config.hpp"
#include "rangequant/errors.hpp"

namespace rangequant::cli {

inline constexpr const char* kVersion = "0.1.0";

// Wraps whatever a stage threw so the driver can report the stage by name.
class StageError : public Error {
 public:
  StageError(std::string stage, const std::string& what)
      : Error("stage '" + stage + "' failed: " + what), stage_(std::move(stage)) {}
  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

// simulate, estimate, fit, roll, forecast, evaluate, report; `run` chains
// them in that order (skipping simulate for file input).
const std::vector<std::string>& stage_names();

// Runs one stage (or `run`) and records it in <output_dir>/manifest.json.
// ConfigurationError passes through untouched; anything else becomes a
// StageError after the manifest entry is written.
void run_stage(const std::string& stage, const RunConfig& config);

// Entry point behind the executable: 0 success, 2 validation error,
// 1 stage failure.
int main(int argc, char** argv);

}  // namespace rangequant::cli
