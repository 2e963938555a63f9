#pragma once

// Closed-form singlet-state probabilities and correlations.
//
// Angles are radians and are never wrapped; every formula here is 2*pi
// periodic in each angle difference.

#include <string_view>

#include "bellmatch/lists.hpp"

namespace bellmatch {

struct AngleConfig3 {
  double theta_a = 0.0;
  double theta_ap = 0.0;
  double theta_b = 0.0;
};

struct AngleConfig4 {
  double theta_a = 0.0;
  double theta_ap = 0.0;
  double theta_b = 0.0;
  double theta_bp = 0.0;
};

/// How the correlation between the two same-side settings is assigned.
///
/// `matched`: correlations of lists that share the common variable (the
/// factoring condition holds). `unmatched_stationary`: each correlation takes
/// its independent-run cosine value, and <AA'> = 0 for three settings.
enum class Mode { matched, unmatched_stationary };

std::string_view to_string(Mode m) noexcept;
/// Accepts "matched", "unmatched" and "unmatched-stationary".
Mode parse_mode(std::string_view s);

/// Throws InvalidInput unless every angle is finite.
void validate(const AngleConfig3& cfg);
void validate(const AngleConfig4& cfg);

/// p(A = a | B = b) for detector angle difference delta = theta_A - theta_B.
double cond_prob(Outcome a, Outcome b, double delta);

/// p(A = a, B = b) = p(A = a | B = b) * 1/2.
double joint_prob(Outcome a, Outcome b, double delta);

/// <AB> = -cos(delta).
double corr_pair(double delta);

/// <AA'> for lists matched on B: cos(A - B) cos(A' - B).
double corr_aa_matched(const AngleConfig3& cfg);

/// <A'B'> for lists matched on B (for A') and on A (for B'):
/// -cos(A' - B) cos(B' - A) cos(A - B).
double corr_apbp_matched(const AngleConfig4& cfg);

/// Enumeration over A, A', B of A A' p(A|B) p(A'|B) p(B).
double brute_force_corr3(const AngleConfig3& cfg);

/// Enumeration over A, B, A', B' of A' B' p(A'|B) p(B'|A) p(A,B).
double brute_force_corr4(const AngleConfig4& cfg);

/// |<AB> - <A'B>| + <AA'>, bound 1.
double bell3_lhs_theory(const AngleConfig3& cfg, Mode mode);

/// |<AB> + <AB'>| + |<A'B> - <A'B'>|, bound 2.
double chsh4_lhs_theory(const AngleConfig4& cfg, Mode mode);

inline constexpr double kBell3Bound = 1.0;
inline constexpr double kChsh4Bound = 2.0;

}  // namespace bellmatch
