#pragma once

#include <span>
#include <vector>

#include "qcvx/core_types.hpp"

namespace qcvx {

/// Nonempty open interval ]u, v[ with u < v.
class OpenInterval {
 public:
  OpenInterval(Rational u, Rational v);

  const Rational& u() const noexcept { return u_; }
  const Rational& v() const noexcept { return v_; }
  Rational length() const { return v_ - u_; }
  bool contains(const Rational& t) const { return u_ < t && t < v_; }

  friend bool operator==(const OpenInterval&, const OpenInterval&) = default;

 private:
  Rational u_;
  Rational v_;
};

/// Finite union of pairwise disjoint open intervals in canonical form:
/// sorted, and two members share at most an endpoint, which then lies
/// outside the union.
class OpenIntervalSet {
 public:
  OpenIntervalSet() = default;

  /// Adopts an already canonical list; throws Errc::consistency otherwise.
  static OpenIntervalSet from_canonical(std::vector<OpenInterval> intervals);

  const std::vector<OpenInterval>& intervals() const noexcept { return intervals_; }
  std::size_t size() const noexcept { return intervals_.size(); }
  bool empty() const noexcept { return intervals_.empty(); }
  auto begin() const noexcept { return intervals_.begin(); }
  auto end() const noexcept { return intervals_.end(); }
  const OpenInterval& operator[](std::size_t i) const { return intervals_[i]; }

  /// O(log n) membership.
  bool contains(const Rational& t) const;
  Rational total_length() const;

  friend bool operator==(const OpenIntervalSet&, const OpenIntervalSet&) = default;

 private:
  friend OpenIntervalSet normalize(std::vector<OpenInterval> raw);
  explicit OpenIntervalSet(std::vector<OpenInterval> intervals) : intervals_(std::move(intervals)) {}

  std::vector<OpenInterval> intervals_;
};

/// Canonical form of the union of `raw`. Intervals sharing interior points
/// are merged; intervals meeting at a single endpoint stay separate because
/// that endpoint is not in the union.
OpenIntervalSet normalize(std::vector<OpenInterval> raw);

inline bool contains(const OpenIntervalSet& s, const Rational& t) { return s.contains(t); }
inline Rational total_length(const OpenIntervalSet& s) { return s.total_length(); }

}  // namespace qcvx
