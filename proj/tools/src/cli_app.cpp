#include <cmath>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "bellmatch/cli/commands.hpp"
#include "bellmatch/cli/io.hpp"

namespace bellmatch::cli {

namespace {

double parse_number(std::string_view text, std::string_view whole) {
  const std::string s(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
    throw InvalidInput("cannot parse angle '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

double parse_angle(std::string_view text, bool degrees) {
  const std::string_view whole = text;
  double sign = 1.0;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    if (text.front() == '-') sign = -1.0;
    text.remove_prefix(1);
  }
  const auto pi_at = text.find("pi");
  if (pi_at == std::string_view::npos) {
    const double v = sign * parse_number(text, whole);
    return degrees ? v * std::numbers::pi / 180.0 : v;
  }
  if (degrees) throw InvalidInput("'pi' is not allowed together with --degrees");

  std::string_view coeff = text.substr(0, pi_at);
  if (!coeff.empty() && coeff.back() == '*') coeff.remove_suffix(1);
  double v = coeff.empty() ? 1.0 : parse_number(coeff, whole);
  std::string_view rest = text.substr(pi_at + 2);
  if (!rest.empty()) {
    if (rest.front() != '/') throw InvalidInput("cannot parse angle '" + std::string(whole) + "'");
    const double den = parse_number(rest.substr(1), whole);
    if (den == 0.0) throw InvalidInput("division by zero in angle '" + std::string(whole) + "'");
    v /= den;
  }
  return sign * v * std::numbers::pi;
}

AxisRange parse_axis(std::string_view text, bool degrees) {
  const auto first = text.find(':');
  if (first == std::string_view::npos) return AxisRange::fixed(parse_angle(text, degrees));
  const auto second = text.find(':', first + 1);
  if (second == std::string_view::npos) {
    throw InvalidInput("axis '" + std::string(text) + "' must be value or start:stop:steps");
  }
  AxisRange axis;
  axis.start = parse_angle(text.substr(0, first), degrees);
  axis.stop = parse_angle(text.substr(first + 1, second - first - 1), degrees);
  const std::string steps(text.substr(second + 1));
  char* end = nullptr;
  const long long n = std::strtoll(steps.c_str(), &end, 10);
  if (steps.empty() || end != steps.c_str() + steps.size() || n < 1) {
    throw InvalidInput("axis '" + std::string(text) + "' needs a positive integer step count");
  }
  axis.steps = static_cast<std::size_t>(n);
  return axis;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bell-inequality run simulation, matching and verification"};
  app.require_subcommand(1);

  // generate
  GenerateOptions gen;
  std::string gen_theta_a;
  std::string gen_theta_b;
  std::uint64_t gen_seed = kDefaultSeed.value;
  bool gen_degrees = false;
  auto* generate = app.add_subcommand("generate", "Sample one A-B run and write a run record");
  generate->add_option("--theta-a", gen_theta_a, "Angle of detector A (radians)")->required();
  generate->add_option("--theta-b", gen_theta_b, "Angle of detector B (radians)")->required();
  generate->add_option("--n", gen.n, "Number of trials")->required();
  generate->add_option("--seed", gen_seed, "Seed");
  generate->add_option("--out", gen.out, "Output run record (JSON)")->required();
  generate->add_flag("--degrees", gen_degrees, "Angles are given in degrees");

  // match3
  Match3Options m3;
  auto* match3 = app.add_subcommand("match3", "Align an A'-B run onto an A-B run by B");
  match3->add_option("file_ab", m3.file_ab, "A-B run record")->required();
  match3->add_option("file_apb", m3.file_apb, "A'-B run record")->required();
  match3->add_option("--out", m3.out, "Output matched-triple JSON")->required();

  // match4
  Match4Options m4;
  auto* match4 = app.add_subcommand("match4", "Align A'-B and A-B' runs onto an A-B run");
  match4->add_option("file_ab", m4.file_ab, "A-B run record")->required();
  match4->add_option("file_apb", m4.file_apb, "A'-B run record")->required();
  match4->add_option("file_abp", m4.file_abp, "A-B' run record")->required();
  match4->add_option("--out", m4.out, "Output matched-quad JSON")->required();

  // scan
  ScanOptions sc;
  sc.workers = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t scan_seed = kDefaultSeed.value;
  std::size_t scan_n = sc.fig2.n_per_cell;
  std::string scan_mode = "matched";
  std::string scan_source = "gedanken";
  bool scan_degrees = false;
  std::optional<std::string> beta, alpha, alpha_prime, theta_a, theta_ap, theta_b, theta_bp;
  auto* scan = app.add_subcommand("scan", "Angle-grid scans written as CSV");
  scan->require_subcommand(1);
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", sc.out, "Output CSV")->required();
    sub->add_flag("--degrees", scan_degrees, "Angles are given in degrees");
  };
  auto* fig2 = scan->add_subcommand("fig2", "Simulated <AA'> surface against its closed form");
  add_common(fig2);
  fig2->add_option("--beta", beta, "Fixed angle of detector B");
  fig2->add_option("--alpha", alpha, "Axis start:stop:steps for A");
  fig2->add_option("--alpha-prime", alpha_prime, "Axis start:stop:steps for A'");
  fig2->add_option("--n", scan_n, "Trials per cell");
  fig2->add_option("--seed", scan_seed, "Master seed");
  fig2->add_option("--source", scan_source, "gedanken|matched");
  fig2->add_option("--workers", sc.workers, "Worker threads (does not change output)");
  auto add_axes = [&](CLI::App* sub, bool four) {
    add_common(sub);
    sub->add_option("--mode", scan_mode, "matched|unmatched");
    sub->add_option("--theta-a", theta_a, "Axis for A: value or start:stop:steps");
    sub->add_option("--theta-ap", theta_ap, "Axis for A'");
    sub->add_option("--theta-b", theta_b, "Axis for B");
    if (four) sub->add_option("--theta-bp", theta_bp, "Axis for B'");
  };
  auto* bell3 = scan->add_subcommand("bell3", "Three-correlation inequality over a grid");
  add_axes(bell3, false);
  auto* chsh4 = scan->add_subcommand("chsh4", "Four-correlation inequality over a grid");
  add_axes(chsh4, true);

  // check
  CheckOptions chk;
  auto* check = app.add_subcommand("check", "Evaluate the inequality on raw +1/-1 list files");
  check->add_option("files", chk.files, "3 files (a b b') or 4 files (a b a' b')")
      ->required()
      ->expected(3, 4);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : to_int(ExitStatus::invalid_input);
  }

  try {
    if (generate->parsed()) {
      gen.theta_a = parse_angle(gen_theta_a, gen_degrees);
      gen.theta_b = parse_angle(gen_theta_b, gen_degrees);
      gen.seed = Seed{gen_seed};
      return to_int(cmd_generate(gen, out, err));
    }
    if (match3->parsed()) return to_int(cmd_match3(m3, out, err));
    if (match4->parsed()) return to_int(cmd_match4(m4, out, err));
    if (check->parsed()) return to_int(cmd_check(chk, out, err));

    if (fig2->parsed()) {
      sc.kind = ScanKind::fig2;
      if (beta) sc.fig2.beta = parse_angle(*beta, scan_degrees);
      if (alpha) sc.fig2.alpha = parse_axis(*alpha, scan_degrees);
      if (alpha_prime) sc.fig2.alpha_prime = parse_axis(*alpha_prime, scan_degrees);
      sc.fig2.n_per_cell = scan_n;
      sc.fig2.seed = Seed{scan_seed};
      sc.fig2.source = parse_fig2_source(scan_source);
    } else {
      const bool four = chsh4->parsed();
      sc.kind = four ? ScanKind::chsh4 : ScanKind::bell3;
      sc.mode = parse_mode(scan_mode);
      sc.grid = default_inequality_grid(four ? Inequality::chsh4 : Inequality::bell3);
      if (theta_a) sc.grid.theta_a = parse_axis(*theta_a, scan_degrees);
      if (theta_ap) sc.grid.theta_ap = parse_axis(*theta_ap, scan_degrees);
      if (theta_b) sc.grid.theta_b = parse_axis(*theta_b, scan_degrees);
      if (theta_bp) sc.grid.theta_bp = parse_axis(*theta_bp, scan_degrees);
    }
    return to_int(cmd_scan(sc, out, err));
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return to_int(ExitStatus::invalid_input);
  }
}

}  // namespace bellmatch::cli
