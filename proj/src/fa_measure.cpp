#include "fairdiv/fa_measure.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "fairdiv/errors.hpp"

namespace fairdiv::fa {

std::string to_string(Filter f) {
  switch (f) {
    case Filter::all: return "all";
    case Filter::rationals_only: return "rationals_only";
    case Filter::irrationals_only: return "irrationals_only";
    case Filter::mixed: return "mixed";
  }
  return "?";
}

RepresentableSet::RepresentableSet(Portion rational, Portion irrational)
    : rational_(std::move(rational)), irrational_(irrational.half_open_canonical()) {}

RepresentableSet RepresentableSet::all(const Portion& base) { return {base, base}; }
RepresentableSet RepresentableSet::rationals_only(const Portion& base) { return {base, Portion::empty()}; }
RepresentableSet RepresentableSet::irrationals_only(const Portion& base) { return {Portion::empty(), base}; }

Filter RepresentableSet::filter() const {
  if (irrational_.is_empty()) return Filter::rationals_only;
  if (rational_.is_empty()) return Filter::irrationals_only;
  if (rational_.half_open_canonical() == irrational_) return Filter::all;
  return Filter::mixed;
}

RepresentableSet RepresentableSet::united(const RepresentableSet& o) const {
  return {rational_ | o.rational_, irrational_ | o.irrational_};
}

RepresentableSet RepresentableSet::intersected(const RepresentableSet& o) const {
  return {rational_ & o.rational_, irrational_ & o.irrational_};
}

RepresentableSet RepresentableSet::complement() const {
  return {rational_.complement(), irrational_.complement()};
}

bool RepresentableSet::subset_of(const RepresentableSet& o) const {
  return rational_.subset_of(o.rational_) && irrational_.minus(o.irrational_).length().is_zero();
}

bool RepresentableSet::disjoint_from(const RepresentableSet& o) const {
  return intersected(o).is_empty();
}

std::string RepresentableSet::str() const {
  switch (filter()) {
    case Filter::all: return rational_.str();
    case Filter::rationals_only: return "Q & " + rational_.str();
    case Filter::irrationals_only: return irrational_.str() + " \\ Q";
    case Filter::mixed: break;
  }
  return "(Q & " + rational_.str() + ") u (" + irrational_.str() + " \\ Q)";
}

Rational fa_value(const RepresentableSet& s) { return s.rational_trace().length(); }

RepresentableSet fa_union(const RepresentableSet& s, const RepresentableSet& t) { return s.united(t); }
RepresentableSet fa_intersect(const RepresentableSet& s, const RepresentableSet& t) { return s.intersected(t); }
RepresentableSet fa_complement(const RepresentableSet& s) { return s.complement(); }

TrimmingSequence trimming_sequence(std::size_t k, const std::vector<Rational>& enumeration) {
  if (k == 0) throw DomainError("trimming sequence needs k >= 1");
  if (enumeration.size() < k)
    throw DomainError("enumeration has " + std::to_string(enumeration.size()) + " entries, need " + std::to_string(k));
  std::set<Rational> seen;
  for (const auto& r : enumeration) {
    if (r < Rational(0) || r > Rational(1)) throw DomainError("enumerated rational " + r.str() + " outside [0, 1]");
    if (!seen.insert(r).second) throw Error("DuplicateEnumeration", "rational " + r.str() + " enumerated twice");
  }
  TrimmingSequence out;
  std::vector<Rational> removed;
  for (std::size_t n = 1; n <= k; ++n) {
    removed.push_back(enumeration[n - 1]);
    const Rational right = min(Rational(1), Rational(1, 2) + Rational(1, static_cast<long>(n)));
    auto set = RepresentableSet::all(Portion::from_parts({Interval{Rational(0), right, true, true}}, {}, removed));
    const Rational value = fa_value(set);
    out.steps.push_back(TrimmingStep{n, std::move(set), value});
  }
  out.limit_set = RepresentableSet::irrationals_only(Portion::closed(Rational(0), Rational(1, 2)));
  out.limit_value = fa_value(out.limit_set);
  return out;
}

std::vector<Rational> farey_enumeration(std::size_t count) {
  std::vector<Rational> out;
  if (count > 0) out.emplace_back(0);
  if (count > 1) out.emplace_back(1);
  for (long den = 2; out.size() < count; ++den)
    for (long num = 1; num < den && out.size() < count; ++num)
      if (std::gcd(num, den) == 1) out.emplace_back(num, den);
  return out;
}

}  // namespace fairdiv::fa
