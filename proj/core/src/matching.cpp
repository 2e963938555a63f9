#include "bellmatch/matching.hpp"

#include <array>
#include <string>

#include "bellmatch/error.hpp"

namespace bellmatch {

namespace {

std::size_t class_index(Outcome o) { return o == Outcome::Up ? 0 : 1; }

DataList gather(ListView source, const std::vector<std::size_t>& indices) {
  std::vector<Outcome> out;
  out.reserve(indices.size());
  for (std::size_t i : indices) out.push_back(source[i]);
  return DataList(std::move(out));
}

void require_same_setting(double reference, double candidate, const char* what) {
  if (reference != candidate) {
    throw InvalidInput(std::string("shared setting ") + what + " differs between runs: " +
                       std::to_string(reference) + " vs " + std::to_string(candidate));
  }
}

void require_overlap(const MatchReport& report, const char* stage) {
  if (report.matched == 0) {
    throw InvalidInput(std::string("matching on ") + stage + " left no aligned positions");
  }
}

void require_paired(const PairedRun& run) {
  if (run.a_list.size() != run.b_list.size() || run.a_list.empty()) {
    throw InvalidInput("run lists must be non-empty and of equal length");
  }
}

}  // namespace

MatchReport align_shared(ListView reference_shared, ListView candidate_shared) {
  std::array<std::vector<std::size_t>, 2> queues;
  for (std::size_t j = 0; j < candidate_shared.size(); ++j) {
    queues[class_index(candidate_shared[j])].push_back(j);
  }
  std::array<std::size_t, 2> next{0, 0};

  MatchReport report;
  report.requested = reference_shared.size();
  report.permutation.reserve(reference_shared.size());
  report.kept_reference.reserve(reference_shared.size());
  for (std::size_t i = 0; i < reference_shared.size(); ++i) {
    const std::size_t c = class_index(reference_shared[i]);
    if (next[c] == queues[c].size()) continue;
    report.permutation.push_back(queues[c][next[c]++]);
    report.kept_reference.push_back(i);
  }
  report.matched = report.permutation.size();
  report.dropped_reference = report.requested - report.matched;
  report.dropped_candidate = candidate_shared.size() - report.matched;
  return report;
}

MatchedTriple match_three(const PairedRun& run_ab, const PairedRun& run_apb) {
  require_paired(run_ab);
  require_paired(run_apb);
  require_same_setting(run_ab.spec.theta_b, run_apb.spec.theta_b, "theta_b");

  MatchReport report = align_shared(run_ab.b_list, run_apb.b_list);
  require_overlap(report, "B");

  MatchedTriple out;
  out.a = gather(run_ab.a_list, report.kept_reference);
  out.b = gather(run_ab.b_list, report.kept_reference);
  out.ap = gather(run_apb.a_list, report.permutation);
  out.angles = AngleConfig3{run_ab.spec.theta_a, run_apb.spec.theta_a, run_ab.spec.theta_b};
  out.report = std::move(report);
  return out;
}

MatchedQuad match_four(const PairedRun& run_ab, const PairedRun& run_apb,
                       const PairedRun& run_abp) {
  require_paired(run_abp);
  require_same_setting(run_ab.spec.theta_a, run_abp.spec.theta_a, "theta_a");
  MatchedTriple stage1 = match_three(run_ab, run_apb);

  MatchReport stage2 = align_shared(stage1.a, run_abp.a_list);
  require_overlap(stage2, "A");

  MatchedQuad out;
  out.a = gather(stage1.a, stage2.kept_reference);
  out.b = gather(stage1.b, stage2.kept_reference);
  out.ap = gather(stage1.ap, stage2.kept_reference);
  out.bp = gather(run_abp.b_list, stage2.permutation);
  out.angles = AngleConfig4{run_ab.spec.theta_a, run_apb.spec.theta_a, run_ab.spec.theta_b,
                            run_abp.spec.theta_b};
  out.b_stage = std::move(stage1.report);
  out.a_stage = std::move(stage2);
  return out;
}

double conditional_corr_estimate(ListView a, ListView ap, ListView b) {
  if (a.size() != ap.size() || a.size() != b.size()) {
    throw InvalidInput("list length mismatch: " + std::to_string(a.size()) + ", " +
                       std::to_string(ap.size()) + ", " + std::to_string(b.size()));
  }
  std::array<std::int64_t, 2> sums{0, 0};
  std::array<std::int64_t, 2> counts{0, 0};
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::size_t c = class_index(b[i]);
    sums[c] += value(a[i]) * value(ap[i]);
    ++counts[c];
  }
  if (counts[0] == 0) throw InvalidInput("conditional class B = +1 is empty");
  if (counts[1] == 0) throw InvalidInput("conditional class B = -1 is empty");
  return 0.5 * static_cast<double>(sums[0]) / static_cast<double>(counts[0]) +
         0.5 * static_cast<double>(sums[1]) / static_cast<double>(counts[1]);
}

}  // namespace bellmatch
