#pragma once

// Seeded Monte Carlo generation of singlet-state measurement runs.
//
// Every trial draws the shared outcome first (B = +1 with probability 1/2,
// one uniform draw) and then each dependent outcome with one further uniform
// draw: A = -1 when u < p(A = -1 | B), else +1. Identical inputs give
// bit-identical lists.

#include <cstddef>
#include <string_view>

#include "bellmatch/lists.hpp"
#include "bellmatch/quantum.hpp"
#include "bellmatch/rng.hpp"

namespace bellmatch {

struct RunSpec {
  double theta_a = 0.0;
  double theta_b = 0.0;
  std::size_t n = 0;
  Seed seed;
};

/// One A-B experiment: a_list[i] and b_list[i] come from the same particle pair.
struct PairedRun {
  RunSpec spec;
  DataList a_list;
  DataList b_list;
};

PairedRun sample_pair_run(const RunSpec& spec);

/// Per-trial generation of real and counterfactual outcomes. Only the
/// construction in which the extra outcomes are drawn conditionally
/// independently given the shared one is implemented.
inline constexpr std::string_view kGedankenConstruction =
    "conditionally independent draws given the shared outcome";

struct Gedanken3 {
  DataList a;
  DataList ap;
  DataList b;
};

/// B uniform; A | B and A' | B drawn independently.
Gedanken3 sample_gedanken3(const AngleConfig3& cfg, std::size_t n, Seed seed);

struct Gedanken4 {
  DataList a;
  DataList b;
  DataList ap;
  DataList bp;
};

/// (A, B) from the singlet joint; A' | B and B' | A drawn independently.
Gedanken4 sample_gedanken4(const AngleConfig4& cfg, std::size_t n, Seed seed);

}  // namespace bellmatch
