#include "fairdiv/portion.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace fairdiv {

namespace {

const Rational kZero(0);
const Rational kOne(1);

void sort_unique(std::vector<Rational>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<Rational> clipped_grid(std::vector<Rational> pts) {
  pts.push_back(kZero);
  pts.push_back(kOne);
  std::erase_if(pts, [](const Rational& x) { return x < kZero || x > kOne; });
  sort_unique(pts);
  return pts;
}

}  // namespace

struct PortionBuilder {
  // Rebuilds the normal form from an indicator sampled on a grid of
  // critical points and at one interior point of every gap.
  static Portion build(const std::vector<Rational>& grid, const std::function<bool(const Rational&)>& member) {
    const std::size_t k = grid.size() - 1;
    std::vector<bool> at(grid.size()), gap(k);
    for (std::size_t i = 0; i < grid.size(); ++i) at[i] = member(grid[i]);
    for (std::size_t i = 0; i < k; ++i) gap[i] = member(midpoint(grid[i], grid[i + 1]));

    Portion p;
    std::size_t i = 0;
    while (i < k) {
      if (!gap[i]) { ++i; continue; }
      std::size_t j = i;
      while (j < k && gap[j]) ++j;
      p.intervals_.push_back(Interval{grid[i], grid[j], static_cast<bool>(at[i]), static_cast<bool>(at[j])});
      for (std::size_t m = i + 1; m < j; ++m)
        if (!at[m]) p.removed_.push_back(grid[m]);
      i = j;
    }
    for (std::size_t m = 0; m <= k; ++m) {
      const bool left_gap = m > 0 && gap[m - 1];
      const bool right_gap = m < k && gap[m];
      if (at[m] && !left_gap && !right_gap) p.added_.push_back(grid[m]);
    }
    return p;
  }
};

Portion Portion::closed(const Rational& lo, const Rational& hi) {
  return from_parts({Interval{lo, hi, true, true}}, {}, {});
}
Portion Portion::open(const Rational& lo, const Rational& hi) {
  return from_parts({Interval{lo, hi, false, false}}, {}, {});
}
Portion Portion::closed_open(const Rational& lo, const Rational& hi) {
  return from_parts({Interval{lo, hi, true, false}}, {}, {});
}
Portion Portion::open_closed(const Rational& lo, const Rational& hi) {
  return from_parts({Interval{lo, hi, false, true}}, {}, {});
}
Portion Portion::point(const Rational& x) { return from_parts({}, {x}, {}); }
Portion Portion::points(const std::vector<Rational>& xs) { return from_parts({}, xs, {}); }

Portion Portion::from_parts(const std::vector<Interval>& intervals, const std::vector<Rational>& added,
                            const std::vector<Rational>& removed) {
  std::vector<Interval> ivs;
  for (const auto& iv : intervals) {
    if (iv.hi < iv.lo) throw std::invalid_argument("interval with hi < lo");
    if (iv.lo == iv.hi) continue;  // degenerate: handled as a point only if both ends closed
    ivs.push_back(iv);
  }
  std::vector<Rational> add = added;
  for (const auto& iv : intervals)
    if (iv.lo == iv.hi && iv.lo_closed && iv.hi_closed) add.push_back(iv.lo);
  std::vector<Rational> pts = add;
  pts.insert(pts.end(), removed.begin(), removed.end());
  for (const auto& iv : ivs) {
    pts.push_back(iv.lo);
    pts.push_back(iv.hi);
  }
  auto grid = clipped_grid(std::move(pts));
  sort_unique(add);
  std::vector<Rational> rem = removed;
  sort_unique(rem);
  auto member = [&](const Rational& x) {
    if (std::binary_search(rem.begin(), rem.end(), x)) return false;
    if (std::binary_search(add.begin(), add.end(), x)) return true;
    return std::any_of(ivs.begin(), ivs.end(), [&](const Interval& iv) { return iv.contains(x); });
  };
  return PortionBuilder::build(grid, member);
}

bool Portion::contains(const Rational& x) const {
  if (std::binary_search(added_.begin(), added_.end(), x)) return true;
  if (std::binary_search(removed_.begin(), removed_.end(), x)) return false;
  return std::any_of(intervals_.begin(), intervals_.end(), [&](const Interval& iv) { return iv.contains(x); });
}

Rational Portion::length() const {
  Rational total(0);
  for (const auto& iv : intervals_) total += iv.length();
  return total;
}

std::vector<Rational> Portion::critical_points() const {
  std::vector<Rational> pts = added_;
  pts.insert(pts.end(), removed_.begin(), removed_.end());
  for (const auto& iv : intervals_) {
    pts.push_back(iv.lo);
    pts.push_back(iv.hi);
  }
  sort_unique(pts);
  return pts;
}

namespace {

template <class Op>
Portion combine(const Portion& a, const Portion& b, Op op) {
  auto pts = a.critical_points();
  const auto pb = b.critical_points();
  pts.insert(pts.end(), pb.begin(), pb.end());
  return PortionBuilder::build(clipped_grid(std::move(pts)),
                               [&](const Rational& x) { return op(a.contains(x), b.contains(x)); });
}

}  // namespace

Portion Portion::united(const Portion& o) const {
  return combine(*this, o, [](bool x, bool y) { return x || y; });
}
Portion Portion::intersected(const Portion& o) const {
  return combine(*this, o, [](bool x, bool y) { return x && y; });
}
Portion Portion::complement() const {
  return combine(*this, Portion{}, [](bool x, bool) { return !x; });
}

Portion Portion::half_open_canonical() const {
  std::vector<Interval> merged;
  for (const auto& iv : intervals_) {
    if (!merged.empty() && merged.back().hi == iv.lo) {
      merged.back().hi = iv.hi;
    } else {
      merged.push_back(Interval{iv.lo, iv.hi, true, false});
    }
  }
  Portion p;
  p.intervals_ = std::move(merged);
  return p;
}

std::string Portion::str() const {
  if (is_empty()) return "{}";
  std::ostringstream os;
  bool first = true;
  for (const auto& iv : intervals_) {
    if (!first) os << " u ";
    first = false;
    os << (iv.lo_closed ? '[' : '(') << iv.lo << ", " << iv.hi << (iv.hi_closed ? ']' : ')');
  }
  if (!added_.empty()) {
    if (!first) os << " u ";
    os << '{';
    for (std::size_t i = 0; i < added_.size(); ++i) os << (i ? ", " : "") << added_[i];
    os << '}';
  }
  if (!removed_.empty()) {
    os << " \\ {";
    for (std::size_t i = 0; i < removed_.size(); ++i) os << (i ? ", " : "") << removed_[i];
    os << '}';
  }
  return os.str();
}

Portion operator|(const Portion& a, const Portion& b) { return a.united(b); }
Portion operator&(const Portion& a, const Portion& b) { return a.intersected(b); }

}  // namespace fairdiv
