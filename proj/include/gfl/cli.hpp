#pragma once

// Command-line front end: argument parsing, parameter sweeps and the JSON
// sweep report. Every verify/order subcommand is a thin loop over one of the
// library checkers.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "gfl/exact_arith.hpp"
#include "gfl/report.hpp"

namespace gfl::cli {

/// "lo..hi" (inclusive), "a,b,c", or a mix such as "1..3,7".
std::vector<std::int64_t> parse_int_list(const std::string& text);
/// Comma-separated rationals; integer ranges "lo..hi" are accepted too.
std::vector<Rational> parse_rational_list(const std::string& text);
/// Comma-separated polynomials in x.
std::vector<Polynomial> parse_polynomial_list(const std::string& text);

/// One unit of sweep work. Its reports are kept in task order.
struct Task {
  std::string label;
  std::function<std::vector<IdentityReport>()> run;
};

struct Erratum {
  std::string note;
  std::size_t count = 0;
  /// Parameters of the first report carrying this note.
  std::vector<std::pair<std::string, std::string>> first;
};

struct SweepReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::size_t total_checks = 0;
  std::vector<IdentityReport> failures;
  std::vector<Erratum> errata;
  double wall_time_seconds = 0;
};

/// Worker count: GFL_THREADS when set to a positive integer, otherwise the
/// hardware concurrency.
unsigned sweep_threads();

/// Runs the tasks on `threads` workers. When `failures_are_errata` is set, a
/// failing report only contributes its errata.
SweepReport run_sweep(std::string command, std::vector<std::pair<std::string, std::string>> parameters,
                      std::vector<Task> tasks, unsigned threads, bool failures_are_errata = false);

nlohmann::ordered_json to_json(const SweepReport& report);

/// Exit codes: 0 success, 1 verification failure or corrupt input, 2 usage.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gfl::cli
