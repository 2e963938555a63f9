#pragma once

// Exact arithmetic on lists of +1/-1 outcomes.
//
// Correlations are kept as exact rationals (integer cross sum over N), so the
// three- and four-list inequalities below hold with zero tolerance for any
// input lists whatsoever.

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include <boost/rational.hpp>

namespace bellmatch {

/// A single spin measurement in units of hbar/2.
enum class Outcome : std::int8_t { Down = -1, Up = +1 };

constexpr int value(Outcome o) noexcept { return static_cast<int>(o); }
constexpr Outcome flip(Outcome o) noexcept {
  return o == Outcome::Up ? Outcome::Down : Outcome::Up;
}

/// Converts +1/-1 to an Outcome; any other integer throws InvalidInput.
Outcome outcome_from_int(long long v);

using Ratio = boost::rational<std::int64_t>;

/// Ordered sequence of outcomes.
class DataList {
 public:
  DataList() = default;
  explicit DataList(std::vector<Outcome> items) : items_(std::move(items)) {}
  DataList(std::initializer_list<int> values);

  static DataList from_ints(std::span<const int> values);

  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  Outcome operator[](std::size_t i) const { return items_[i]; }

  std::span<const Outcome> view() const noexcept { return items_; }
  operator std::span<const Outcome>() const noexcept { return items_; }

  const std::vector<Outcome>& items() const noexcept { return items_; }
  std::vector<int> to_ints() const;

  auto begin() const noexcept { return items_.begin(); }
  auto end() const noexcept { return items_.end(); }

  friend bool operator==(const DataList&, const DataList&) = default;

 private:
  std::vector<Outcome> items_;
};

using ListView = std::span<const Outcome>;

DataList negate(ListView x);

/// Sum of x[i]*y[i]. Throws on empty input or length mismatch.
std::int64_t cross_sum(ListView x, ListView y);

/// (1/N) * sum x[i]*y[i], exact.
Ratio correlation(ListView x, ListView y);

/// Count of +1 entries divided by N.
Ratio fraction_positive(ListView x);

struct Bell3Sides {
  Ratio lhs;  ///< |corr(a,b) - corr(a,bp)|
  Ratio rhs;  ///< 1 - corr(b,bp)
  bool holds = false;
};

/// Three-list inequality |<ab> - <ab'>| <= 1 - <bb'>.
Bell3Sides bell3_sides(ListView a, ListView b, ListView bp);

struct Chsh4Sides {
  Ratio lhs;  ///< |corr(a,b) + corr(a,bp)| + |corr(ap,b) - corr(ap,bp)|
  Ratio bound{2};
  bool holds = false;
};

/// Four-list CHSH form; lhs <= 2 for any four +1/-1 lists.
Chsh4Sides chsh4_sides(ListView a, ListView b, ListView ap, ListView bp);

inline double to_double(const Ratio& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace bellmatch
