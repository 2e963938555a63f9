#pragma once

// Subcommands of the bellmatch tool, callable in-process.
//
// Every command writes human-readable results to `out`, diagnostics to `err`,
// and returns the process exit status. Exceptions never escape.

#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "bellmatch/lists.hpp"
#include "bellmatch/quantum.hpp"
#include "bellmatch/rng.hpp"
#include "bellmatch/scan.hpp"

namespace bellmatch::cli {

enum class ExitStatus : int {
  ok = 0,
  /// An inequality failed on actual lists. Impossible for correct code.
  identity_violated = 1,
  invalid_input = 2,
  io_error = 3,
};

constexpr int to_int(ExitStatus s) noexcept { return static_cast<int>(s); }

/// Added to one computed empirical correlation before the inequality is
/// evaluated. Zero in normal operation; tests use it to prove that the
/// identity_violated path is reachable.
struct FaultInjection {
  Ratio correlation_offset{0};
};

struct RunSummary {
  Ratio correlation;
  Ratio fraction_positive_a;
  Ratio fraction_positive_b;
  friend bool operator==(const RunSummary&, const RunSummary&) = default;
};

RunSummary summarize_run(ListView a, ListView b);

struct GenerateOptions {
  double theta_a = 0.0;
  double theta_b = 0.0;
  std::size_t n = 0;
  Seed seed = kDefaultSeed;
  std::filesystem::path out;
};

ExitStatus cmd_generate(const GenerateOptions& opts, std::ostream& out, std::ostream& err);

struct Match3Options {
  std::filesystem::path file_ab;
  std::filesystem::path file_apb;
  std::filesystem::path out;
  FaultInjection fault;  ///< applied to <AA'>
};

ExitStatus cmd_match3(const Match3Options& opts, std::ostream& out, std::ostream& err);

struct Match4Options {
  std::filesystem::path file_ab;
  std::filesystem::path file_apb;
  std::filesystem::path file_abp;
  std::filesystem::path out;
  FaultInjection fault;  ///< applied to <A'B'>
};

ExitStatus cmd_match4(const Match4Options& opts, std::ostream& out, std::ostream& err);

enum class ScanKind { fig2, bell3, chsh4 };

struct ScanOptions {
  ScanKind kind = ScanKind::fig2;
  GridSpec fig2;
  InequalityGrid grid;
  Mode mode = Mode::matched;
  unsigned workers = 1;
  std::filesystem::path out;
};

/// Defaults used by the command line for the inequality scans.
InequalityGrid default_inequality_grid(Inequality which);

ExitStatus cmd_scan(const ScanOptions& opts, std::ostream& out, std::ostream& err);

struct CheckOptions {
  std::vector<std::filesystem::path> files;  ///< 3 (a, b, b') or 4 (a, b, a', b')
  FaultInjection fault;                      ///< applied to the first correlation
};

ExitStatus cmd_check(const CheckOptions& opts, std::ostream& out, std::ostream& err);

void write_fig2_csv(std::ostream& os, const Fig2Table& table);
/// Streams the grid straight to `os`; returns the scan summary.
ScanSummary write_inequality_csv(std::ostream& os, const InequalityGrid& grid, Inequality which,
                                 Mode mode);

/// Full argument parsing and dispatch; returns the exit status as int.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Parses an angle such as "0.5", "-pi/4", "3pi/4", "2*pi". With `degrees`
/// plain numbers are degrees and "pi" is rejected.
double parse_angle(std::string_view text, bool degrees);

/// "value" (fixed axis) or "start:stop:steps".
AxisRange parse_axis(std::string_view text, bool degrees);

}  // namespace bellmatch::cli
