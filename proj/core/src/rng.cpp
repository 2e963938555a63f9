#include "bellmatch/rng.hpp"

namespace bellmatch {

Seed derive_seed(Seed parent, std::uint64_t index) noexcept {
  return Seed{mix64(parent.value ^ mix64(index + kGoldenGamma))};
}

Seed derive_seed(Seed parent, std::initializer_list<std::uint64_t> path) noexcept {
  for (std::uint64_t index : path) parent = derive_seed(parent, index);
  return parent;
}

}  // namespace bellmatch
