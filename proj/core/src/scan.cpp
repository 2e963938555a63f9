#include "bellmatch/scan.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <cmath>
#include <exception>
#include <string>
#include <thread>

#include "bellmatch/sampler.hpp"

namespace bellmatch {

double AxisRange::at(std::size_t i) const {
  if (steps <= 1) return start;
  if (i + 1 == steps) return stop;
  return start + (stop - start) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

void validate(const AxisRange& axis, std::string_view name) {
  const std::string label(name);
  if (!std::isfinite(axis.start) || !std::isfinite(axis.stop)) {
    throw InvalidInput("axis " + label + " has a non-finite bound");
  }
  if (axis.steps == 0) throw InvalidInput("axis " + label + " needs at least one step");
  if (axis.steps >= 2 && !(axis.start < axis.stop)) {
    throw InvalidInput("axis " + label + " needs start < stop");
  }
}

std::string_view to_string(Fig2Source s) noexcept {
  return s == Fig2Source::gedanken ? "gedanken" : "matched";
}

Fig2Source parse_fig2_source(std::string_view s) {
  if (s == "gedanken") return Fig2Source::gedanken;
  if (s == "matched" || s == "matched-runs") return Fig2Source::matched_runs;
  throw InvalidInput("unknown source '" + std::string(s) + "' (expected gedanken|matched)");
}

void validate(const GridSpec& grid) {
  if (!std::isfinite(grid.beta)) throw InvalidInput("beta is not finite");
  validate(grid.alpha, "alpha");
  validate(grid.alpha_prime, "alpha_prime");
  if (grid.alpha.steps < 2 || grid.alpha_prime.steps < 2) {
    throw InvalidInput("fig2 grid needs at least 2 steps on each axis");
  }
  if (grid.n_per_cell == 0) throw InvalidInput("n per cell must be >= 1");
}

Seed cell_seed(Seed master, std::size_t row, std::size_t col) noexcept {
  return derive_seed(master, {static_cast<std::uint64_t>(row), static_cast<std::uint64_t>(col)});
}

CellError::CellError(std::size_t row, std::size_t col, const std::string& what)
    : InvalidInput("cell (" + std::to_string(row) + ", " + std::to_string(col) + "): " + what),
      row_(row),
      col_(col) {}

ScanSummary summarize(const std::vector<Fig2Row>& rows) {
  ScanSummary s;
  if (rows.empty()) return s;
  double sq = 0.0;
  for (const Fig2Row& r : rows) {
    s.max_abs_error = std::max(s.max_abs_error, r.abs_error);
    sq += r.abs_error * r.abs_error;
  }
  s.rms_error = std::sqrt(sq / static_cast<double>(rows.size()));
  return s;
}

namespace {

Fig2Row evaluate_cell(const GridSpec& grid, std::size_t row, std::size_t col) {
  Fig2Row out;
  out.row = row;
  out.col = col;
  out.alpha = grid.alpha.at(row);
  out.alpha_prime = grid.alpha_prime.at(col);
  out.beta = grid.beta;
  const AngleConfig3 cfg{out.alpha, out.alpha_prime, grid.beta};
  const Seed seed = cell_seed(grid.seed, row, col);

  if (grid.source == Fig2Source::gedanken) {
    const Gedanken3 g = sample_gedanken3(cfg, grid.n_per_cell, seed);
    out.n = grid.n_per_cell;
    out.empirical = conditional_corr_estimate(g.a, g.ap, g.b);
  } else {
    const PairedRun ab =
        sample_pair_run(RunSpec{cfg.theta_a, cfg.theta_b, grid.n_per_cell, derive_seed(seed, 0)});
    const PairedRun apb =
        sample_pair_run(RunSpec{cfg.theta_ap, cfg.theta_b, grid.n_per_cell, derive_seed(seed, 1)});
    const MatchedTriple m = match_three(ab, apb);
    out.n = m.report.matched;
    out.empirical = conditional_corr_estimate(m.a, m.ap, m.b);
  }
  out.theoretical = corr_aa_matched(cfg);
  out.abs_error = std::abs(out.empirical - out.theoretical);
  return out;
}

}  // namespace

Fig2Table fig2_scan(const GridSpec& grid, unsigned workers) {
  validate(grid);
  const std::size_t cols = grid.alpha_prime.steps;
  const std::size_t cells = grid.alpha.steps * cols;

  Fig2Table table;
  table.spec = grid;
  table.rows.resize(cells);
  std::vector<std::exception_ptr> errors(cells);
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    for (std::size_t k = next++; k < cells; k = next++) {
      try {
        table.rows[k] = evaluate_cell(grid, k / cols, k % cols);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };

  workers = std::max(1u, workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  }

  for (std::size_t k = 0; k < cells; ++k) {
    if (!errors[k]) continue;
    try {
      std::rethrow_exception(errors[k]);
    } catch (const std::exception& e) {
      throw CellError(k / cols, k % cols, e.what());
    }
  }
  table.summary = summarize(table.rows);
  return table;
}

std::string_view to_string(Inequality w) noexcept {
  return w == Inequality::bell3 ? "bell3" : "chsh4";
}

void validate(const InequalityGrid& grid, Inequality which) {
  validate(grid.theta_a, "theta_a");
  validate(grid.theta_ap, "theta_ap");
  validate(grid.theta_b, "theta_b");
  if (which == Inequality::chsh4) validate(grid.theta_bp, "theta_bp");
}

ScanSummary inequality_scan_each(const InequalityGrid& grid, Inequality which, Mode mode,
                                 const std::function<void(const InequalityRow&)>& sink) {
  validate(grid, which);
  const double bound = which == Inequality::bell3 ? kBell3Bound : kChsh4Bound;
  const std::size_t bp_steps = which == Inequality::chsh4 ? grid.theta_bp.steps : 1;

  ScanSummary summary;
  summary.max_lhs = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid.theta_a.steps; ++i) {
    for (std::size_t j = 0; j < grid.theta_ap.steps; ++j) {
      for (std::size_t k = 0; k < grid.theta_b.steps; ++k) {
        for (std::size_t l = 0; l < bp_steps; ++l) {
          InequalityRow row;
          row.angles.theta_a = grid.theta_a.at(i);
          row.angles.theta_ap = grid.theta_ap.at(j);
          row.angles.theta_b = grid.theta_b.at(k);
          row.bound = bound;
          if (which == Inequality::bell3) {
            row.lhs = bell3_lhs_theory(
                AngleConfig3{row.angles.theta_a, row.angles.theta_ap, row.angles.theta_b}, mode);
          } else {
            row.angles.theta_bp = grid.theta_bp.at(l);
            row.lhs = chsh4_lhs_theory(row.angles, mode);
          }
          row.violated = row.lhs > bound + kBoundTolerance;
          summary.max_lhs = std::max(summary.max_lhs, row.lhs);
          if (row.violated) ++summary.violations;
          if (sink) sink(row);
        }
      }
    }
  }
  return summary;
}

InequalityTable inequality_scan(const InequalityGrid& grid, Inequality which, Mode mode) {
  InequalityTable table;
  table.grid = grid;
  table.which = which;
  table.mode = mode;
  table.summary = inequality_scan_each(grid, which, mode,
                                       [&](const InequalityRow& r) { table.rows.push_back(r); });
  return table;
}

Ratio bell3_empirical_lhs(ListView a, ListView b, ListView ap) {
  // |<ba> - <ba'>| <= 1 - <aa'> rearranged.
  const Bell3Sides sides = bell3_sides(b, a, ap);
  return sides.lhs + (Ratio(1) - sides.rhs);
}

ViolationReport violation_report(const AngleConfig3& cfg, std::size_t n, Seed seed) {
  validate(cfg);
  ViolationReport out;
  out.which = Inequality::bell3;
  out.bound = kBell3Bound;
  out.matched_lhs = bell3_lhs_theory(cfg, Mode::matched);
  out.unmatched_lhs = bell3_lhs_theory(cfg, Mode::unmatched_stationary);
  out.unmatched_violates = out.unmatched_lhs > out.bound + kBoundTolerance;
  out.n = n;

  const PairedRun ab = sample_pair_run(RunSpec{cfg.theta_a, cfg.theta_b, n, derive_seed(seed, 0)});
  const PairedRun apb =
      sample_pair_run(RunSpec{cfg.theta_ap, cfg.theta_b, n, derive_seed(seed, 1)});
  const MatchedTriple m = match_three(ab, apb);
  out.aligned = m.report.matched;
  out.empirical_lhs = bell3_empirical_lhs(m.a, m.b, m.ap);
  out.empirical_holds = out.empirical_lhs <= Ratio(1);
  return out;
}

ViolationReport violation_report(const AngleConfig4& cfg, std::size_t n, Seed seed) {
  validate(cfg);
  ViolationReport out;
  out.which = Inequality::chsh4;
  out.bound = kChsh4Bound;
  out.matched_lhs = chsh4_lhs_theory(cfg, Mode::matched);
  out.unmatched_lhs = chsh4_lhs_theory(cfg, Mode::unmatched_stationary);
  out.unmatched_violates = out.unmatched_lhs > out.bound + kBoundTolerance;
  out.n = n;

  const PairedRun ab = sample_pair_run(RunSpec{cfg.theta_a, cfg.theta_b, n, derive_seed(seed, 0)});
  const PairedRun apb =
      sample_pair_run(RunSpec{cfg.theta_ap, cfg.theta_b, n, derive_seed(seed, 1)});
  const PairedRun abp =
      sample_pair_run(RunSpec{cfg.theta_a, cfg.theta_bp, n, derive_seed(seed, 2)});
  const MatchedQuad m = match_four(ab, apb, abp);
  out.aligned = m.a.size();
  const Chsh4Sides sides = chsh4_sides(m.a, m.b, m.ap, m.bp);
  out.empirical_lhs = sides.lhs;
  out.empirical_holds = sides.holds;
  return out;
}

}  // namespace bellmatch
