#include "qcvx/interval_set.hpp"

#include <algorithm>

namespace qcvx {

OpenInterval::OpenInterval(Rational u, Rational v) : u_(std::move(u)), v_(std::move(v)) {
  if (!(u_ < v_)) {
    throw Error(Errc::malformed_interval,
                "open interval ]" + to_string(u_) + ", " + to_string(v_) + "[ is empty");
  }
}

OpenIntervalSet OpenIntervalSet::from_canonical(std::vector<OpenInterval> intervals) {
  for (std::size_t i = 1; i < intervals.size(); ++i) {
    if (intervals[i].u() < intervals[i - 1].v()) {
      throw Error(Errc::consistency, "intervals are not sorted and disjoint");
    }
  }
  return OpenIntervalSet(std::move(intervals));
}

bool OpenIntervalSet::contains(const Rational& t) const {
  // First interval whose right end exceeds t is the only candidate.
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(), t,
                             [](const Rational& value, const OpenInterval& iv) { return value < iv.v(); });
  return it != intervals_.end() && it->u() < t;
}

Rational OpenIntervalSet::total_length() const {
  Rational sum = 0;
  for (const auto& iv : intervals_) sum += iv.length();
  return sum;
}

OpenIntervalSet normalize(std::vector<OpenInterval> raw) {
  std::sort(raw.begin(), raw.end(), [](const OpenInterval& a, const OpenInterval& b) {
    if (a.u() != b.u()) return a.u() < b.u();
    return a.v() < b.v();
  });
  std::vector<OpenInterval> merged;
  merged.reserve(raw.size());
  for (auto& iv : raw) {
    if (!merged.empty() && iv.u() < merged.back().v()) {
      if (merged.back().v() < iv.v()) merged.back() = OpenInterval(merged.back().u(), iv.v());
      continue;
    }
    merged.push_back(std::move(iv));
  }
  return OpenIntervalSet(std::move(merged));
}

}  // namespace qcvx
