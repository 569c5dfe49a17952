#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cli/json_io.hpp"

namespace bsurf::cli {

/// Schema violation in a run specification, with the 1-based line it points at.
class SpecError : public std::runtime_error {
 public:
  SpecError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

struct RunSpec {
  std::string command;
  json params = json::object();
  std::uint64_t seed = 0;
  std::string output;
};

/// Parses and validates a JSON run specification. Unknown keys and wrongly typed
/// values raise `SpecError`.
RunSpec parse_run_spec(const std::string& text);

struct CurveRow {
  std::string series;
  double t = 0.0;
  double re = 0.0;
  double im = 0.0;
};

struct RunResult {
  /// 0 on success, 1 on input error, 2 on a failed verification.
  int exit_code = 0;
  json result;
  std::vector<CurveRow> curves;
};

RunResult run(const RunSpec& spec);

/// Writes <prefix>.result.json and, if there are curves, <prefix>.curves.csv.
void write_artifacts(const RunResult& result, const std::string& prefix);

std::string curves_csv(const std::vector<CurveRow>& rows);

}  // namespace bsurf::cli
