#pragma once

// Counter-based random streams.
//
// Stream output i (i = 1, 2, ...) is mix64(key + i * 0x9e3779b97f4a7c15) with
// key = mix64(seed), i.e. SplitMix64 started from a scrambled seed. Uniform
// doubles take the top 53 bits and sit at bin centres, so they lie strictly
// inside (0, 1). Child seeds are derived with derive_seed, so each grid cell
// or run gets its own stream no matter which thread produces it.

#include <cstdint>
#include <initializer_list>

namespace bellmatch {

struct Seed {
  std::uint64_t value = 0;
  friend bool operator==(Seed, Seed) = default;
};

constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seed of child stream `index` under `parent`.
Seed derive_seed(Seed parent, std::uint64_t index) noexcept;
/// Repeated derive_seed along a path, e.g. {row, column}.
Seed derive_seed(Seed parent, std::initializer_list<std::uint64_t> path) noexcept;

class StreamRng {
 public:
  using result_type = std::uint64_t;

  explicit StreamRng(Seed seed) noexcept : key_(mix64(seed.value)) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  result_type operator()() noexcept { return mix64(key_ + (++counter_) * kGoldenGamma); }

  /// Uniform on the open interval (0, 1).
  double uniform() noexcept {
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
  }

  std::uint64_t draws() const noexcept { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace bellmatch
