#pragma once

// Angle-grid experiments: the simulated conditional-correlation surface
// against its closed form, theoretical inequality sweeps in matched and
// unmatched-stationary modes, and single-configuration violation reports.

#include <cstddef>
#include <functional>
#include <numbers>
#include <string_view>
#include <vector>

#include "bellmatch/error.hpp"
#include "bellmatch/lists.hpp"
#include "bellmatch/matching.hpp"
#include "bellmatch/quantum.hpp"
#include "bellmatch/rng.hpp"

namespace bellmatch {

inline constexpr Seed kDefaultSeed{0x5eedULL};
/// Slack allowed on theoretical (floating point) inequality evaluations.
inline constexpr double kBoundTolerance = 1e-9;

/// Inclusive linear grid on [start, stop]; steps == 1 pins the axis at start.
struct AxisRange {
  double start = 0.0;
  double stop = 0.0;
  std::size_t steps = 1;

  static AxisRange fixed(double v) { return AxisRange{v, v, 1}; }
  double at(std::size_t i) const;
  bool is_fixed() const { return steps == 1; }
};

/// Throws InvalidInput for non-finite bounds, steps == 0, or a ranged axis
/// with start >= stop.
void validate(const AxisRange& axis, std::string_view name);

enum class Fig2Source { gedanken, matched_runs };
std::string_view to_string(Fig2Source s) noexcept;
Fig2Source parse_fig2_source(std::string_view s);

struct GridSpec {
  double beta = 0.0;
  AxisRange alpha{0.0, std::numbers::pi, 17};
  AxisRange alpha_prime{0.0, std::numbers::pi, 17};
  std::size_t n_per_cell = 10000;
  Seed seed = kDefaultSeed;
  Fig2Source source = Fig2Source::gedanken;
};

void validate(const GridSpec& grid);

struct Fig2Row {
  std::size_t row = 0;  ///< alpha index
  std::size_t col = 0;  ///< alpha' index
  double alpha = 0.0;
  double alpha_prime = 0.0;
  double beta = 0.0;
  std::size_t n = 0;  ///< aligned trials used by the estimator
  double empirical = 0.0;
  double theoretical = 0.0;
  double abs_error = 0.0;

  friend bool operator==(const Fig2Row&, const Fig2Row&) = default;
};

struct ScanSummary {
  double max_abs_error = 0.0;
  double rms_error = 0.0;
  double max_lhs = 0.0;
  std::size_t violations = 0;
};

struct Fig2Table {
  GridSpec spec;
  std::vector<Fig2Row> rows;
  ScanSummary summary;
};

ScanSummary summarize(const std::vector<Fig2Row>& rows);

/// Seed used for cell (row, col) of a grid.
Seed cell_seed(Seed master, std::size_t row, std::size_t col) noexcept;

/// Estimated <AA'> per (alpha, alpha') cell against cos(a - b) cos(a' - b).
/// Each cell has its own derived stream, so the table does not depend on
/// `workers`. A failing cell aborts the scan with a CellError.
Fig2Table fig2_scan(const GridSpec& grid, unsigned workers = 1);

class CellError : public InvalidInput {
 public:
  CellError(std::size_t row, std::size_t col, const std::string& what);
  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

enum class Inequality { bell3, chsh4 };
std::string_view to_string(Inequality w) noexcept;

/// One axis per detector setting; theta_bp is ignored for bell3.
struct InequalityGrid {
  AxisRange theta_a = AxisRange::fixed(0.0);
  AxisRange theta_ap = AxisRange::fixed(0.0);
  AxisRange theta_b = AxisRange::fixed(0.0);
  AxisRange theta_bp = AxisRange::fixed(0.0);
};

void validate(const InequalityGrid& grid, Inequality which);

struct InequalityRow {
  AngleConfig4 angles;
  double lhs = 0.0;
  double bound = 0.0;
  bool violated = false;
};

struct InequalityTable {
  InequalityGrid grid;
  Inequality which = Inequality::bell3;
  Mode mode = Mode::matched;
  std::vector<InequalityRow> rows;
  ScanSummary summary;
};

/// Streams every grid point to `sink` (theta_a outermost, theta_bp innermost)
/// and returns max_lhs and the number of rows with lhs > bound + kBoundTolerance.
ScanSummary inequality_scan_each(const InequalityGrid& grid, Inequality which, Mode mode,
                                 const std::function<void(const InequalityRow&)>& sink);

InequalityTable inequality_scan(const InequalityGrid& grid, Inequality which, Mode mode);

/// Side-by-side theoretical matched / unmatched-stationary values plus the
/// same quantity computed exactly on simulated matched runs.
struct ViolationReport {
  Inequality which = Inequality::bell3;
  double bound = 0.0;
  double matched_lhs = 0.0;
  double unmatched_lhs = 0.0;
  bool unmatched_violates = false;
  std::size_t n = 0;            ///< trials per simulated run
  std::size_t aligned = 0;      ///< positions left after matching
  Ratio empirical_lhs;          ///< exact, from matched lists
  bool empirical_holds = false;
};

ViolationReport violation_report(const AngleConfig3& cfg, std::size_t n = 1000,
                                 Seed seed = kDefaultSeed);
ViolationReport violation_report(const AngleConfig4& cfg, std::size_t n = 1000,
                                 Seed seed = kDefaultSeed);

/// Left-hand side of the three-setting form on matched lists:
/// |<ab> - <a'b>| + <aa'>, exact.
Ratio bell3_empirical_lhs(ListView a, ListView b, ListView ap);

}  // namespace bellmatch
