#include "ordturan/interval_union.hpp"

#include <algorithm>

namespace ordturan {

IntervalUnion::IntervalUnion(std::vector<Interval> pieces) {
  std::erase_if(pieces, [](const Interval& i) { return i.empty(); });
  std::sort(pieces.begin(), pieces.end(), [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.lo_closed && !b.lo_closed;
  });
  for (const auto& p : pieces) {
    if (!pieces_.empty()) {
      Interval& last = pieces_.back();
      const bool overlaps =
          p.lo < last.hi || (p.lo == last.hi && (p.lo_closed || last.hi_closed));
      if (overlaps) {
        if (p.hi > last.hi) {
          last.hi = p.hi;
          last.hi_closed = p.hi_closed;
        } else if (p.hi == last.hi) {
          last.hi_closed = last.hi_closed || p.hi_closed;
        }
        continue;
      }
    }
    pieces_.push_back(p);
  }
  for (const auto& p : pieces_) total_length_ += p.length();
}

bool IntervalUnion::contains(double x) const {
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x,
                             [](double v, const Interval& i) { return v < i.lo; });
  // candidates: the piece starting at or before x
  if (it != pieces_.begin() && std::prev(it)->contains(x)) return true;
  return it != pieces_.end() && it->contains(x);
}

IntervalUnion IntervalUnion::complement_within(double lo, double hi) const {
  std::vector<Interval> out;
  double cursor = lo;
  bool cursor_closed = false;
  for (const auto& p : pieces_) {
    if (p.hi < lo || p.lo > hi) continue;
    Interval gap{cursor, p.lo, cursor_closed, !p.lo_closed};
    if (!gap.empty()) out.push_back(gap);
    cursor = p.hi;
    cursor_closed = !p.hi_closed;
  }
  Interval tail{cursor, hi, cursor_closed, false};
  if (!tail.empty()) out.push_back(tail);
  return IntervalUnion(std::move(out));
}

IntervalUnion IntervalUnion::intersect(const Interval& window) const {
  std::vector<Interval> out;
  for (const auto& p : pieces_) {
    Interval q = p;
    if (window.lo > q.lo || (window.lo == q.lo && !window.lo_closed)) {
      q.lo = window.lo;
      q.lo_closed = window.lo_closed && (p.lo != window.lo || p.lo_closed);
    }
    if (window.hi < q.hi || (window.hi == q.hi && !window.hi_closed)) {
      q.hi = window.hi;
      q.hi_closed = window.hi_closed && (p.hi != window.hi || p.hi_closed);
    }
    if (!q.empty()) out.push_back(q);
  }
  return IntervalUnion(std::move(out));
}

}  // namespace ordturan
