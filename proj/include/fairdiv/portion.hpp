#pragma once

#include <string>
#include <vector>

#include "fairdiv/rational.hpp"

namespace fairdiv {

/// Non-degenerate interval lo < hi with explicit endpoint inclusion.
struct Interval {
  Rational lo, hi;
  bool lo_closed = true;
  bool hi_closed = true;

  Rational length() const { return hi - lo; }
  bool contains(const Rational& x) const {
    return (lo < x || (lo_closed && x == lo)) && (x < hi || (hi_closed && x == hi));
  }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// A subset of the cake [0, 1]: (union of intervals  +  added points) minus
/// removed points. Always held in normal form: intervals sorted and maximal,
/// removed points strictly interior to an interval, added points isolated
/// (outside the closure of every interval). The normal form is unique, so
/// structural equality is set equality.
class Portion {
public:
  Portion() = default;

  static Portion empty() { return {}; }
  static Portion whole() { return closed(Rational(0), Rational(1)); }
  static Portion closed(const Rational& lo, const Rational& hi);
  static Portion open(const Rational& lo, const Rational& hi);
  /// [lo, hi)
  static Portion closed_open(const Rational& lo, const Rational& hi);
  /// (lo, hi]
  static Portion open_closed(const Rational& lo, const Rational& hi);
  static Portion point(const Rational& x);
  static Portion points(const std::vector<Rational>& xs);
  /// Normalizes an arbitrary description; everything is clipped to [0, 1].
  static Portion from_parts(const std::vector<Interval>& intervals, const std::vector<Rational>& added,
                            const std::vector<Rational>& removed);

  const std::vector<Interval>& intervals() const { return intervals_; }
  const std::vector<Rational>& added_points() const { return added_; }
  const std::vector<Rational>& removed_points() const { return removed_; }

  bool contains(const Rational& x) const;
  bool is_empty() const { return intervals_.empty() && added_.empty(); }
  /// Lebesgue measure.
  Rational length() const;
  /// Interval endpoints and exceptional points, sorted and deduplicated.
  std::vector<Rational> critical_points() const;

  Portion united(const Portion& o) const;
  Portion intersected(const Portion& o) const;
  /// Complement within [0, 1].
  Portion complement() const;
  Portion minus(const Portion& o) const { return intersected(o.complement()); }
  bool subset_of(const Portion& o) const { return minus(o).is_empty(); }
  bool disjoint_from(const Portion& o) const { return intersected(o).is_empty(); }

  /// Canonical form for atomless contexts: every interval half-open [lo, hi),
  /// exceptional points dropped. Agrees with *this up to a finite set.
  Portion half_open_canonical() const;

  std::string str() const;

  friend bool operator==(const Portion&, const Portion&) = default;

private:
  friend struct PortionBuilder;
  std::vector<Interval> intervals_;
  std::vector<Rational> added_;
  std::vector<Rational> removed_;
};

Portion operator|(const Portion& a, const Portion& b);
Portion operator&(const Portion& a, const Portion& b);

}  // namespace fairdiv
