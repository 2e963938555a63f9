#pragma once

// Reordering of independently collected runs so the shared variable takes the
// same value sequence in each, which restores the factoring condition of the
// three- and four-list inequalities.
//
// Alignment is class-FIFO: for each reference position the next unused
// candidate pair with the same shared value is taken, keeping the candidate's
// own order within each value class. Reference positions whose class has run
// out are trimmed from every output list.

#include <cstddef>
#include <vector>

#include "bellmatch/lists.hpp"
#include "bellmatch/quantum.hpp"
#include "bellmatch/sampler.hpp"

namespace bellmatch {

struct MatchReport {
  std::size_t requested = 0;  ///< reference length
  std::size_t matched = 0;
  std::size_t dropped_reference = 0;
  std::size_t dropped_candidate = 0;
  /// permutation[k] is the candidate index placed at aligned position k.
  std::vector<std::size_t> permutation;
  /// Reference indices that survived, in order.
  std::vector<std::size_t> kept_reference;
};

/// Class-FIFO alignment of `candidate_shared` onto `reference_shared`.
/// Never throws; an empty result simply has matched == 0.
MatchReport align_shared(ListView reference_shared, ListView candidate_shared);

struct MatchedTriple {
  DataList a;
  DataList b;
  DataList ap;
  MatchReport report;
  AngleConfig3 angles;
};

/// Aligns run_apb onto run_ab by B. The runs must share theta_b exactly.
MatchedTriple match_three(const PairedRun& run_ab, const PairedRun& run_apb);

struct MatchedQuad {
  DataList a;
  DataList b;
  DataList ap;
  DataList bp;
  MatchReport b_stage;  ///< run_apb aligned on B
  MatchReport a_stage;  ///< run_abp aligned on A, over b_stage survivors
  AngleConfig4 angles;
};

/// run_apb shares theta_b with run_ab; run_abp shares theta_a with run_ab and
/// carries B' in its b_list.
MatchedQuad match_four(const PairedRun& run_ab, const PairedRun& run_apb,
                       const PairedRun& run_abp);

/// (1/2) avg(a a' | b = +1) + (1/2) avg(a a' | b = -1).
double conditional_corr_estimate(ListView a, ListView ap, ListView b);

}  // namespace bellmatch
