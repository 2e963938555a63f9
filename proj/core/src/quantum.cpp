#include "bellmatch/quantum.hpp"

#include <array>
#include <cmath>
#include <string>

#include "bellmatch/error.hpp"

namespace bellmatch {

namespace {

constexpr std::array<Outcome, 2> kOutcomes{Outcome::Up, Outcome::Down};

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw InvalidInput(std::string("angle ") + name + " is not finite");
}

}  // namespace

std::string_view to_string(Mode m) noexcept {
  return m == Mode::matched ? "matched" : "unmatched-stationary";
}

Mode parse_mode(std::string_view s) {
  if (s == "matched") return Mode::matched;
  if (s == "unmatched" || s == "unmatched-stationary") return Mode::unmatched_stationary;
  throw InvalidInput("unknown mode '" + std::string(s) + "' (expected matched|unmatched)");
}

void validate(const AngleConfig3& cfg) {
  require_finite(cfg.theta_a, "theta_a");
  require_finite(cfg.theta_ap, "theta_ap");
  require_finite(cfg.theta_b, "theta_b");
}

void validate(const AngleConfig4& cfg) {
  require_finite(cfg.theta_a, "theta_a");
  require_finite(cfg.theta_ap, "theta_ap");
  require_finite(cfg.theta_b, "theta_b");
  require_finite(cfg.theta_bp, "theta_bp");
}

double cond_prob(Outcome a, Outcome b, double delta) {
  const double c = std::cos(delta / 2.0);
  const double s = std::sin(delta / 2.0);
  return a == b ? s * s : c * c;
}

double joint_prob(Outcome a, Outcome b, double delta) { return 0.5 * cond_prob(a, b, delta); }

double corr_pair(double delta) { return -std::cos(delta); }

double corr_aa_matched(const AngleConfig3& cfg) {
  return std::cos(cfg.theta_a - cfg.theta_b) * std::cos(cfg.theta_ap - cfg.theta_b);
}

double corr_apbp_matched(const AngleConfig4& cfg) {
  return -std::cos(cfg.theta_ap - cfg.theta_b) * std::cos(cfg.theta_bp - cfg.theta_a) *
         std::cos(cfg.theta_a - cfg.theta_b);
}

double brute_force_corr3(const AngleConfig3& cfg) {
  const double d_a = cfg.theta_a - cfg.theta_b;
  const double d_ap = cfg.theta_ap - cfg.theta_b;
  double sum = 0.0;
  for (Outcome b : kOutcomes) {
    for (Outcome a : kOutcomes) {
      for (Outcome ap : kOutcomes) {
        sum += value(a) * value(ap) * cond_prob(a, b, d_a) * cond_prob(ap, b, d_ap) * 0.5;
      }
    }
  }
  return sum;
}

double brute_force_corr4(const AngleConfig4& cfg) {
  const double d_ab = cfg.theta_a - cfg.theta_b;
  const double d_apb = cfg.theta_ap - cfg.theta_b;
  const double d_bpa = cfg.theta_bp - cfg.theta_a;
  double sum = 0.0;
  for (Outcome a : kOutcomes) {
    for (Outcome b : kOutcomes) {
      for (Outcome ap : kOutcomes) {
        for (Outcome bp : kOutcomes) {
          sum += value(ap) * value(bp) * cond_prob(ap, b, d_apb) * cond_prob(bp, a, d_bpa) *
                 joint_prob(a, b, d_ab);
        }
      }
    }
  }
  return sum;
}

double bell3_lhs_theory(const AngleConfig3& cfg, Mode mode) {
  const double ab = corr_pair(cfg.theta_a - cfg.theta_b);
  const double apb = corr_pair(cfg.theta_ap - cfg.theta_b);
  const double aap = mode == Mode::matched ? corr_aa_matched(cfg) : 0.0;
  return std::abs(ab - apb) + aap;
}

double chsh4_lhs_theory(const AngleConfig4& cfg, Mode mode) {
  const double ab = corr_pair(cfg.theta_a - cfg.theta_b);
  const double abp = corr_pair(cfg.theta_a - cfg.theta_bp);
  const double apb = corr_pair(cfg.theta_ap - cfg.theta_b);
  const double apbp =
      mode == Mode::matched ? corr_apbp_matched(cfg) : corr_pair(cfg.theta_ap - cfg.theta_bp);
  return std::abs(ab + abp) + std::abs(apb - apbp);
}

}  // namespace bellmatch
