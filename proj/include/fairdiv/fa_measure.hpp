#pragma once

#include <string>
#include <vector>

#include "fairdiv/portion.hpp"
#include "fairdiv/rational.hpp"

namespace fairdiv::fa {

enum class Filter { all, rationals_only, irrationals_only, mixed };
std::string to_string(Filter f);

/// A subset of [0, 1] of the form (R ∩ Q) ∪ (I \ Q) for portions R and I.
/// Sets built from a single portion with one filter are the common case;
/// unions and complements of those can mix both traces, so both are kept.
///
/// The rational trace R is held exactly. The irrational trace only depends
/// on I up to finitely many (rational) points, so I is kept in half-open
/// canonical form. Normal form is unique.
class RepresentableSet {
public:
  RepresentableSet() = default;
  static RepresentableSet all(const Portion& base);
  static RepresentableSet rationals_only(const Portion& base);
  static RepresentableSet irrationals_only(const Portion& base);

  const Portion& rational_trace() const { return rational_; }
  const Portion& irrational_trace() const { return irrational_; }
  /// Which single-filter description applies; `mixed` if none does.
  Filter filter() const;

  RepresentableSet united(const RepresentableSet& o) const;
  RepresentableSet intersected(const RepresentableSet& o) const;
  RepresentableSet complement() const;
  bool subset_of(const RepresentableSet& o) const;
  bool disjoint_from(const RepresentableSet& o) const;
  bool is_empty() const { return rational_.is_empty() && irrational_.is_empty(); }

  std::string str() const;
  friend bool operator==(const RepresentableSet&, const RepresentableSet&) = default;

private:
  RepresentableSet(Portion rational, Portion irrational);
  Portion rational_;
  Portion irrational_;
};

/// The finitely additive measure concentrated on the rationals with
/// v([a, b]) = b - a: the length of the rational trace. Irrational parts
/// and finite point sets weigh nothing.
Rational fa_value(const RepresentableSet& s);

RepresentableSet fa_union(const RepresentableSet& s, const RepresentableSet& t);
RepresentableSet fa_intersect(const RepresentableSet& s, const RepresentableSet& t);
RepresentableSet fa_complement(const RepresentableSet& s);

struct TrimmingStep {
  std::size_t n;
  RepresentableSet set;
  Rational value;
};

struct TrimmingSequence {
  std::vector<TrimmingStep> steps;
  RepresentableSet limit_set;  // [0, 1/2] \ Q
  Rational limit_value;
};

/// A_n = [0, 1/2 + 1/n] \ {r_1, ..., r_n} (clipped to [0, 1]) for n = 1..k.
/// Throws Error("DuplicateEnumeration") on repeated rationals and
/// DomainError when the enumeration is too short or leaves [0, 1].
TrimmingSequence trimming_sequence(std::size_t k, const std::vector<Rational>& enumeration);

/// First `count` rationals of [0, 1] ordered by denominator, then numerator:
/// 0, 1, 1/2, 1/3, 2/3, 1/4, 3/4, ...
std::vector<Rational> farey_enumeration(std::size_t count);

}  // namespace fairdiv::fa
