#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ordturan {

/// Real interval with per-endpoint open/closed tags. Degenerate closed
/// intervals [x,x] are allowed and have length zero.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_closed = false;
  bool hi_closed = false;

  static Interval open(double lo, double hi) { return {lo, hi, false, false}; }
  static Interval closed(double lo, double hi) { return {lo, hi, true, true}; }

  double length() const { return hi - lo; }
  bool empty() const { return lo > hi || (lo == hi && !(lo_closed && hi_closed)); }
  bool contains(double x) const {
    return (lo < x || (lo_closed && lo == x)) && (x < hi || (hi_closed && hi == x));
  }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of disjoint intervals, kept sorted and normalised: pieces
/// that overlap or meet at a point covered by either side are merged, so two
/// stored pieces never touch at a covered point.
class IntervalUnion {
 public:
  IntervalUnion() = default;
  explicit IntervalUnion(std::vector<Interval> pieces);

  /// Union of several single interval pieces.
  static IntervalUnion of(std::initializer_list<Interval> pieces) {
    return IntervalUnion(std::vector<Interval>(pieces));
  }

  std::span<const Interval> intervals() const { return pieces_; }
  std::size_t count() const { return pieces_.size(); }
  bool empty() const { return pieces_.empty(); }
  double total_length() const { return total_length_; }
  bool contains(double x) const;

  /// Complement inside the open window (lo, hi).
  IntervalUnion complement_within(double lo, double hi) const;
  IntervalUnion intersect(const Interval& window) const;

  friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

 private:
  std::vector<Interval> pieces_;
  double total_length_ = 0.0;
};

}  // namespace ordturan
