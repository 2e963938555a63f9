#include "bellmatch/cli/commands.hpp"

#include <fstream>
#include <numbers>
#include <sstream>
#include <ostream>
#include <utility>

#include "bellmatch/cli/io.hpp"
#include "bellmatch/matching.hpp"
#include "bellmatch/sampler.hpp"
#include "json.hpp"

namespace bellmatch::cli {

using nlohmann::ordered_json;

namespace {

template <class F>
ExitStatus guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return ExitStatus::io_error;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return ExitStatus::io_error;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return ExitStatus::invalid_input;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return ExitStatus::invalid_input;
  }
}

ordered_json ratio_json(const Ratio& r) {
  return ordered_json{{"exact", format_ratio(r)}, {"value", to_double(r)}};
}

ordered_json report_json(const MatchReport& r) {
  return ordered_json{{"requested", r.requested},
                      {"matched", r.matched},
                      {"dropped_reference", r.dropped_reference},
                      {"dropped_candidate", r.dropped_candidate},
                      {"permutation", r.permutation}};
}

void print_report(std::ostream& out, std::string_view label, const MatchReport& r) {
  out << label << ".requested: " << r.requested << '\n'
      << label << ".matched: " << r.matched << '\n'
      << label << ".dropped_reference: " << r.dropped_reference << '\n'
      << label << ".dropped_candidate: " << r.dropped_candidate << '\n';
}

void print_ratio(std::ostream& out, std::string_view label, const Ratio& r) {
  out << label << ": " << format_real(to_double(r)) << " (" << format_ratio(r) << ")\n";
}

Ratio abs(const Ratio& r) { return r < Ratio(0) ? -r : r; }

PairedRun load_run(const std::filesystem::path& path) { return read_run_record(path).to_run(); }

}  // namespace

RunSummary summarize_run(ListView a, ListView b) {
  return RunSummary{correlation(a, b), fraction_positive(a), fraction_positive(b)};
}

ExitStatus cmd_generate(const GenerateOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const PairedRun run = sample_pair_run(RunSpec{opts.theta_a, opts.theta_b, opts.n, opts.seed});
    write_run_record(opts.out, RunRecord::from_run(run));
    const RunSummary s = summarize_run(run.a_list, run.b_list);
    out << "wrote: " << opts.out.string() << '\n'
        << "theta_a: " << format_real(opts.theta_a) << '\n'
        << "theta_b: " << format_real(opts.theta_b) << '\n'
        << "n: " << opts.n << '\n'
        << "seed: " << opts.seed.value << '\n';
    print_ratio(out, "correlation", s.correlation);
    out << "theory: " << format_real(corr_pair(opts.theta_a - opts.theta_b)) << '\n';
    print_ratio(out, "fraction_positive_a", s.fraction_positive_a);
    print_ratio(out, "fraction_positive_b", s.fraction_positive_b);
    return ExitStatus::ok;
  });
}

ExitStatus cmd_match3(const Match3Options& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const PairedRun ab = load_run(opts.file_ab);
    const PairedRun apb = load_run(opts.file_apb);
    const MatchedTriple m = match_three(ab, apb);

    const Ratio c_ab = correlation(m.a, m.b);
    const Ratio c_apb = correlation(m.ap, m.b);
    const Ratio c_aap = correlation(m.a, m.ap) + opts.fault.correlation_offset;
    const Ratio c_apb_pre = correlation(apb.a_list, apb.b_list);
    const Ratio lhs = abs(c_ab - c_apb) + c_aap;
    const bool holds = lhs <= Ratio(1);

    const AngleConfig3& cfg = m.angles;
    const double t_ab = corr_pair(cfg.theta_a - cfg.theta_b);
    const double t_apb = corr_pair(cfg.theta_ap - cfg.theta_b);
    const double t_aap = corr_aa_matched(cfg);
    const double t_lhs_matched = bell3_lhs_theory(cfg, Mode::matched);
    const double t_lhs_unmatched = bell3_lhs_theory(cfg, Mode::unmatched_stationary);

    if (!opts.out.empty()) {
      ordered_json j;
      j["format_version"] = kFormatVersion;
      j["kind"] = "matched-triple";
      j["angles"] = {{"theta_a", cfg.theta_a}, {"theta_ap", cfg.theta_ap}, {"theta_b", cfg.theta_b}};
      j["report"] = report_json(m.report);
      j["correlations"] = {{"ab", ratio_json(c_ab)},
                           {"apb", ratio_json(c_apb)},
                           {"aap", ratio_json(c_aap)},
                           {"apb_pre_trim", ratio_json(c_apb_pre)}};
      j["bell3"] = {{"lhs", ratio_json(lhs)}, {"bound", 1}, {"holds", holds}};
      j["theory"] = {{"ab", t_ab},
                     {"apb", t_apb},
                     {"aap_matched", t_aap},
                     {"lhs_matched", t_lhs_matched},
                     {"lhs_unmatched_stationary", t_lhs_unmatched}};
      j["lists"] = {{"a", m.a.to_ints()}, {"b", m.b.to_ints()}, {"ap", m.ap.to_ints()}};
      write_text(opts.out, j.dump() + "\n");
      out << "wrote: " << opts.out.string() << '\n';
    }

    print_report(out, "report", m.report);
    print_ratio(out, "corr_ab", c_ab);
    print_ratio(out, "corr_apb", c_apb);
    print_ratio(out, "corr_apb_pre_trim", c_apb_pre);
    print_ratio(out, "corr_aap", c_aap);
    print_ratio(out, "bell3.lhs", lhs);
    out << "bell3.bound: 1\n"
        << "bell3.holds: " << (holds ? "true" : "false") << '\n'
        << "theory.corr_ab: " << format_real(t_ab) << '\n'
        << "theory.corr_apb: " << format_real(t_apb) << '\n'
        << "theory.corr_aap_matched: " << format_real(t_aap) << '\n'
        << "theory.bell3.lhs_matched: " << format_real(t_lhs_matched) << '\n'
        << "theory.bell3.lhs_unmatched_stationary: " << format_real(t_lhs_unmatched) << '\n';
    if (!holds) {
      err << "error: three-list inequality failed on matched lists; this is a defect\n";
      return ExitStatus::identity_violated;
    }
    return ExitStatus::ok;
  });
}

ExitStatus cmd_match4(const Match4Options& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const PairedRun ab = load_run(opts.file_ab);
    const PairedRun apb = load_run(opts.file_apb);
    const PairedRun abp = load_run(opts.file_abp);
    const MatchedQuad m = match_four(ab, apb, abp);

    const Ratio c_ab = correlation(m.a, m.b);
    const Ratio c_abp = correlation(m.a, m.bp);
    const Ratio c_apb = correlation(m.ap, m.b);
    const Ratio c_apbp = correlation(m.ap, m.bp) + opts.fault.correlation_offset;
    const Ratio lhs = abs(c_ab + c_abp) + abs(c_apb - c_apbp);
    const bool holds = lhs <= Ratio(2);

    const AngleConfig4& cfg = m.angles;
    const double t_ab = corr_pair(cfg.theta_a - cfg.theta_b);
    const double t_abp = corr_pair(cfg.theta_a - cfg.theta_bp);
    const double t_apb = corr_pair(cfg.theta_ap - cfg.theta_b);
    const double t_apbp = corr_apbp_matched(cfg);
    const double t_apbp_unmatched = corr_pair(cfg.theta_ap - cfg.theta_bp);
    const double t_lhs_matched = chsh4_lhs_theory(cfg, Mode::matched);
    const double t_lhs_unmatched = chsh4_lhs_theory(cfg, Mode::unmatched_stationary);

    if (!opts.out.empty()) {
      ordered_json j;
      j["format_version"] = kFormatVersion;
      j["kind"] = "matched-quad";
      j["angles"] = {{"theta_a", cfg.theta_a},
                     {"theta_ap", cfg.theta_ap},
                     {"theta_b", cfg.theta_b},
                     {"theta_bp", cfg.theta_bp}};
      j["reports"] = {{"b_stage", report_json(m.b_stage)}, {"a_stage", report_json(m.a_stage)}};
      j["correlations"] = {{"ab", ratio_json(c_ab)},
                           {"abp", ratio_json(c_abp)},
                           {"apb", ratio_json(c_apb)},
                           {"apbp", ratio_json(c_apbp)},
                           {"apb_pre_trim", ratio_json(correlation(apb.a_list, apb.b_list))},
                           {"abp_pre_trim", ratio_json(correlation(abp.a_list, abp.b_list))}};
      j["chsh4"] = {{"lhs", ratio_json(lhs)}, {"bound", 2}, {"holds", holds}};
      j["theory"] = {{"ab", t_ab},
                     {"abp", t_abp},
                     {"apb", t_apb},
                     {"apbp_matched", t_apbp},
                     {"apbp_unmatched_stationary", t_apbp_unmatched},
                     {"lhs_matched", t_lhs_matched},
                     {"lhs_unmatched_stationary", t_lhs_unmatched}};
      j["lists"] = {{"a", m.a.to_ints()},
                    {"b", m.b.to_ints()},
                    {"ap", m.ap.to_ints()},
                    {"bp", m.bp.to_ints()}};
      write_text(opts.out, j.dump() + "\n");
      out << "wrote: " << opts.out.string() << '\n';
    }

    print_report(out, "b_stage", m.b_stage);
    print_report(out, "a_stage", m.a_stage);
    print_ratio(out, "corr_ab", c_ab);
    print_ratio(out, "corr_abp", c_abp);
    print_ratio(out, "corr_apb", c_apb);
    print_ratio(out, "corr_apbp", c_apbp);
    print_ratio(out, "chsh4.lhs", lhs);
    out << "chsh4.bound: 2\n"
        << "chsh4.holds: " << (holds ? "true" : "false") << '\n'
        << "theory.corr_apbp_matched: " << format_real(t_apbp) << '\n'
        << "theory.corr_apbp_unmatched_stationary: " << format_real(t_apbp_unmatched) << '\n'
        << "theory.chsh4.lhs_matched: " << format_real(t_lhs_matched) << '\n'
        << "theory.chsh4.lhs_unmatched_stationary: " << format_real(t_lhs_unmatched) << '\n';
    if (!holds) {
      err << "error: four-list inequality failed on matched lists; this is a defect\n";
      return ExitStatus::identity_violated;
    }
    return ExitStatus::ok;
  });
}

InequalityGrid default_inequality_grid(Inequality which) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  InequalityGrid g;
  if (which == Inequality::bell3) {
    g.theta_a = AxisRange{0.0, two_pi, 121};
    g.theta_ap = AxisRange{0.0, two_pi, 121};
    g.theta_b = AxisRange::fixed(0.0);
  } else {
    g.theta_a = AxisRange::fixed(0.0);
    g.theta_ap = AxisRange::fixed(std::numbers::pi / 2.0);
    g.theta_b = AxisRange{0.0, two_pi, 121};
    g.theta_bp = AxisRange{0.0, two_pi, 121};
  }
  return g;
}

void write_fig2_csv(std::ostream& os, const Fig2Table& table) {
  os << "alpha,alpha_prime,beta,n,empirical,theoretical,abs_error\n";
  for (const Fig2Row& r : table.rows) {
    os << format_real(r.alpha) << ',' << format_real(r.alpha_prime) << ','
       << format_real(r.beta) << ',' << r.n << ',' << format_real(r.empirical) << ','
       << format_real(r.theoretical) << ',' << format_real(r.abs_error) << '\n';
  }
}

ScanSummary write_inequality_csv(std::ostream& os, const InequalityGrid& grid, Inequality which,
                                 Mode mode) {
  const bool four = which == Inequality::chsh4;
  os << (four ? "theta_a,theta_ap,theta_b,theta_bp,mode,lhs,bound,violated\n"
              : "theta_a,theta_ap,theta_b,mode,lhs,bound,violated\n");
  const std::string_view mode_name = to_string(mode);
  return inequality_scan_each(grid, which, mode, [&](const InequalityRow& r) {
    os << format_real(r.angles.theta_a) << ',' << format_real(r.angles.theta_ap) << ','
       << format_real(r.angles.theta_b) << ',';
    if (four) os << format_real(r.angles.theta_bp) << ',';
    os << mode_name << ',' << format_real(r.lhs) << ',' << format_real(r.bound) << ','
       << (r.violated ? "true" : "false") << '\n';
  });
}

ExitStatus cmd_scan(const ScanOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opts.kind == ScanKind::fig2) {
      const Fig2Table table = fig2_scan(opts.fig2, opts.workers);
      std::ostringstream csv;
      write_fig2_csv(csv, table);
      write_text(opts.out, csv.str());
      out << "scan: fig2\n"
          << "source: " << to_string(opts.fig2.source);
      if (opts.fig2.source == Fig2Source::gedanken) out << " (" << kGedankenConstruction << ")";
      out << '\n'
          << "rows: " << table.rows.size() << '\n'
          << "n_per_cell: " << opts.fig2.n_per_cell << '\n'
          << "seed: " << opts.fig2.seed.value << '\n'
          << "rms_error: " << format_real(table.summary.rms_error) << '\n'
          << "max_abs_error: " << format_real(table.summary.max_abs_error) << '\n';
      return ExitStatus::ok;
    }

    const Inequality which = opts.kind == ScanKind::bell3 ? Inequality::bell3 : Inequality::chsh4;
    validate(opts.grid, which);
    std::ofstream csv(opts.out, std::ios::binary | std::ios::trunc);
    if (!csv) throw IoError("cannot open '" + opts.out.string() + "' for writing");
    const ScanSummary s = write_inequality_csv(csv, opts.grid, which, opts.mode);
    csv.flush();
    if (!csv) throw IoError("error writing '" + opts.out.string() + "'");
    out << "scan: " << to_string(which) << '\n'
        << "mode: " << to_string(opts.mode) << '\n'
        << "bound: " << format_real(which == Inequality::bell3 ? kBell3Bound : kChsh4Bound)
        << '\n'
        << "max_lhs: " << format_real(s.max_lhs) << '\n'
        << "violations: " << s.violations << '\n';
    return ExitStatus::ok;
  });
}

ExitStatus cmd_check(const CheckOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opts.files.size() != 3 && opts.files.size() != 4) {
      throw InvalidInput("check takes 3 or 4 list files");
    }
    std::vector<DataList> lists;
    for (const auto& path : opts.files) lists.push_back(read_list_file(path));

    bool holds = false;
    if (lists.size() == 3) {
      const DataList& a = lists[0];
      const DataList& b = lists[1];
      const DataList& bp = lists[2];
      const Ratio c_ab = correlation(a, b) + opts.fault.correlation_offset;
      const Ratio c_abp = correlation(a, bp);
      const Ratio c_bbp = correlation(b, bp);
      const Ratio lhs = abs(c_ab - c_abp);
      const Ratio rhs = Ratio(1) - c_bbp;
      holds = lhs <= rhs;
      out << "inequality: bell3\n"
          << "n: " << a.size() << '\n';
      print_ratio(out, "lhs", lhs);
      print_ratio(out, "rhs", rhs);
    } else {
      const DataList& a = lists[0];
      const DataList& b = lists[1];
      const DataList& ap = lists[2];
      const DataList& bp = lists[3];
      const Ratio c_ab = correlation(a, b) + opts.fault.correlation_offset;
      const Ratio lhs = abs(c_ab + correlation(a, bp)) + abs(correlation(ap, b) - correlation(ap, bp));
      holds = lhs <= Ratio(2);
      out << "inequality: chsh4\n"
          << "n: " << a.size() << '\n';
      print_ratio(out, "lhs", lhs);
      out << "bound: 2\n";
    }
    out << "holds: " << (holds ? "true" : "false") << '\n';
    if (!holds) {
      err << "error: inequality failed on +1/-1 lists; this is a defect\n";
      return ExitStatus::identity_violated;
    }
    return ExitStatus::ok;
  });
}

}  // namespace bellmatch::cli
