#include "bellmatch/sampler.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "bellmatch/error.hpp"

namespace bellmatch {

namespace {

void require_trials(std::size_t n) {
  if (n == 0) throw InvalidInput("number of trials must be >= 1");
}

Outcome draw_shared(StreamRng& rng) { return rng.uniform() < 0.5 ? Outcome::Up : Outcome::Down; }

// Outcome at a setting that differs by `delta` from the setting of `given`.
Outcome draw_conditional(StreamRng& rng, Outcome given, double delta) {
  return rng.uniform() < cond_prob(Outcome::Down, given, delta) ? Outcome::Down : Outcome::Up;
}

}  // namespace

PairedRun sample_pair_run(const RunSpec& spec) {
  require_trials(spec.n);
  if (!std::isfinite(spec.theta_a) || !std::isfinite(spec.theta_b)) {
    throw InvalidInput("run angles must be finite");
  }
  const double delta = spec.theta_a - spec.theta_b;
  std::vector<Outcome> a(spec.n);
  std::vector<Outcome> b(spec.n);
  StreamRng rng(spec.seed);
  for (std::size_t i = 0; i < spec.n; ++i) {
    b[i] = draw_shared(rng);
    a[i] = draw_conditional(rng, b[i], delta);
  }
  return PairedRun{spec, DataList(std::move(a)), DataList(std::move(b))};
}

Gedanken3 sample_gedanken3(const AngleConfig3& cfg, std::size_t n, Seed seed) {
  require_trials(n);
  validate(cfg);
  const double d_a = cfg.theta_a - cfg.theta_b;
  const double d_ap = cfg.theta_ap - cfg.theta_b;
  std::vector<Outcome> a(n);
  std::vector<Outcome> ap(n);
  std::vector<Outcome> b(n);
  StreamRng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    b[i] = draw_shared(rng);
    a[i] = draw_conditional(rng, b[i], d_a);
    ap[i] = draw_conditional(rng, b[i], d_ap);
  }
  return Gedanken3{DataList(std::move(a)), DataList(std::move(ap)), DataList(std::move(b))};
}

Gedanken4 sample_gedanken4(const AngleConfig4& cfg, std::size_t n, Seed seed) {
  require_trials(n);
  validate(cfg);
  const double d_ab = cfg.theta_a - cfg.theta_b;
  const double d_apb = cfg.theta_ap - cfg.theta_b;
  const double d_bpa = cfg.theta_bp - cfg.theta_a;
  std::vector<Outcome> a(n);
  std::vector<Outcome> b(n);
  std::vector<Outcome> ap(n);
  std::vector<Outcome> bp(n);
  StreamRng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    b[i] = draw_shared(rng);
    a[i] = draw_conditional(rng, b[i], d_ab);
    ap[i] = draw_conditional(rng, b[i], d_apb);
    bp[i] = draw_conditional(rng, a[i], d_bpa);
  }
  return Gedanken4{DataList(std::move(a)), DataList(std::move(b)), DataList(std::move(ap)),
                   DataList(std::move(bp))};
}

}  // namespace bellmatch
