#include "bellmatch/lists.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "bellmatch/error.hpp"

namespace bellmatch {

namespace {

void require_same_length(std::initializer_list<ListView> lists) {
  const std::size_t n = lists.begin()->size();
  for (const ListView l : lists) {
    if (l.empty()) throw InvalidInput("list is empty; correlations need N >= 1");
  }
  for (const ListView l : lists) {
    if (l.size() != n) {
      throw InvalidInput("list length mismatch: " + std::to_string(n) + " vs " +
                         std::to_string(l.size()));
    }
  }
}

std::int64_t cross_sum_unchecked(ListView x, ListView y) {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) sum += value(x[i]) * value(y[i]);
  return sum;
}

}  // namespace

Outcome outcome_from_int(long long v) {
  if (v == 1) return Outcome::Up;
  if (v == -1) return Outcome::Down;
  throw InvalidInput("outcome must be +1 or -1, got " + std::to_string(v));
}

DataList::DataList(std::initializer_list<int> values) {
  items_.reserve(values.size());
  for (int v : values) items_.push_back(outcome_from_int(v));
}

DataList DataList::from_ints(std::span<const int> values) {
  std::vector<Outcome> items;
  items.reserve(values.size());
  for (int v : values) items.push_back(outcome_from_int(v));
  return DataList(std::move(items));
}

std::vector<int> DataList::to_ints() const {
  std::vector<int> out(items_.size());
  std::transform(items_.begin(), items_.end(), out.begin(), [](Outcome o) { return value(o); });
  return out;
}

DataList negate(ListView x) {
  std::vector<Outcome> out(x.size());
  std::transform(x.begin(), x.end(), out.begin(), flip);
  return DataList(std::move(out));
}

std::int64_t cross_sum(ListView x, ListView y) {
  require_same_length({x, y});
  return cross_sum_unchecked(x, y);
}

Ratio correlation(ListView x, ListView y) {
  require_same_length({x, y});
  return Ratio(cross_sum_unchecked(x, y), static_cast<std::int64_t>(x.size()));
}

Ratio fraction_positive(ListView x) {
  if (x.empty()) throw InvalidInput("list is empty; fraction_positive needs N >= 1");
  const auto ups = std::count(x.begin(), x.end(), Outcome::Up);
  return Ratio(static_cast<std::int64_t>(ups), static_cast<std::int64_t>(x.size()));
}

Bell3Sides bell3_sides(ListView a, ListView b, ListView bp) {
  require_same_length({a, b, bp});
  const auto n = static_cast<std::int64_t>(a.size());
  const std::int64_t s_ab = cross_sum_unchecked(a, b);
  const std::int64_t s_abp = cross_sum_unchecked(a, bp);
  const std::int64_t s_bbp = cross_sum_unchecked(b, bp);
  Bell3Sides out;
  out.lhs = Ratio(std::abs(s_ab - s_abp), n);
  out.rhs = Ratio(n - s_bbp, n);
  out.holds = out.lhs <= out.rhs;
  return out;
}

Chsh4Sides chsh4_sides(ListView a, ListView b, ListView ap, ListView bp) {
  require_same_length({a, b, ap, bp});
  const auto n = static_cast<std::int64_t>(a.size());
  const std::int64_t s_ab = cross_sum_unchecked(a, b);
  const std::int64_t s_abp = cross_sum_unchecked(a, bp);
  const std::int64_t s_apb = cross_sum_unchecked(ap, b);
  const std::int64_t s_apbp = cross_sum_unchecked(ap, bp);
  Chsh4Sides out;
  out.lhs = Ratio(std::abs(s_ab + s_abp) + std::abs(s_apb - s_apbp), n);
  out.holds = out.lhs <= out.bound;
  return out;
}

}  // namespace bellmatch
