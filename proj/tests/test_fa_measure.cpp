#include "doctest.h"

#include <algorithm>

#include "fairdiv/fa_measure.hpp"
#include "fairdiv/measure.hpp"
#include "generators.hpp"

using namespace fairdiv;
using fa::Filter;
using fa::RepresentableSet;

namespace {

RepresentableSet random_set(testgen::Engine& rng) {
  const Portion base = testgen::random_portion(rng);
  switch (testgen::uniform_int(rng, 0, 3)) {
    case 0: return RepresentableSet::all(base);
    case 1: return RepresentableSet::rationals_only(base);
    case 2: return RepresentableSet::irrationals_only(base);
    default: return RepresentableSet::rationals_only(base).united(RepresentableSet::irrationals_only(testgen::random_portion(rng)));
  }
}

}  // namespace

TEST_CASE("values of the basic sets") {
  CHECK(fa::fa_value(RepresentableSet::rationals_only(Portion::whole())) == Rational(1));
  CHECK(fa::fa_value(RepresentableSet::all(Portion::points({Rational(1, 3), Rational(1, 7), Rational(0)}))) ==
        Rational(0));
  CHECK(fa::fa_value(RepresentableSet::irrationals_only(Portion::closed(Rational(0), Rational(1, 2)))) == Rational(0));
}

TEST_CASE("fragment operations") {
  const auto q = RepresentableSet::rationals_only(Portion::whole());
  const auto c = fa::fa_complement(q);
  CHECK(c == RepresentableSet::irrationals_only(Portion::whole()));
  CHECK(c.filter() == Filter::irrationals_only);
  CHECK(fa::fa_value(c) == Rational(1) - fa::fa_value(q));

  const auto u = fa::fa_union(RepresentableSet::rationals_only(Portion::closed(Rational(0), Rational(1, 4))),
                              RepresentableSet::rationals_only(Portion::open_closed(Rational(1, 4), Rational(1, 2))));
  CHECK(u == RepresentableSet::rationals_only(Portion::closed(Rational(0), Rational(1, 2))));
  CHECK(fa::fa_value(u) == Rational(1, 2));

  const auto r = fa::farey_enumeration(10);
  const auto seq = fa::trimming_sequence(4, r);
  CHECK(fa::fa_intersect(seq.steps[2].set, seq.steps[3].set) == seq.steps[3].set);

  // complement of a partial rational set mixes both traces
  const auto half = RepresentableSet::rationals_only(Portion::closed(Rational(0), Rational(1, 2)));
  CHECK(half.complement().filter() == Filter::mixed);
  CHECK(half.complement().complement() == half);
  CHECK(RepresentableSet::all(Portion::whole()).filter() == Filter::all);
}

TEST_CASE("trimming sequence") {
  const auto r = fa::farey_enumeration(12);
  const auto one = fa::trimming_sequence(1, r);
  // A_1 = [0, 1] \ {r_1}; 1/2 + 1 is clipped by the cake
  CHECK(one.steps[0].set == RepresentableSet::all(Portion::whole().minus(Portion::point(r[0]))));
  CHECK(one.steps[0].value == Rational(1));

  const auto four = fa::trimming_sequence(4, r);
  const std::vector<Rational> expected{Rational(1), Rational(1), Rational(5, 6), Rational(3, 4)};
  for (std::size_t i = 0; i < 4; ++i) CHECK(four.steps[i].value == expected[i]);
  CHECK(four.limit_value == Rational(0));

  CHECK_THROWS_AS(fa::trimming_sequence(3, {Rational(1, 2), Rational(1, 3), Rational(1, 2)}), Error);
  CHECK_THROWS_AS(fa::trimming_sequence(5, {Rational(1, 2)}), DomainError);
  CHECK_THROWS_AS(fa::trimming_sequence(0, r), DomainError);
}

TEST_CASE("trimming values do not depend on the enumeration") {
  testgen::Engine rng(99);
  const auto base = fa::farey_enumeration(40);
  const auto reference = fa::trimming_sequence(20, base);
  for (int trial = 0; trial < 5; ++trial) {
    auto shuffled = base;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const auto seq = fa::trimming_sequence(20, shuffled);
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
      CHECK(seq.steps[i].value == reference.steps[i].value);
      CHECK(seq.steps[i].value == min(Rational(1), Rational(1, 2) + Rational(1, static_cast<long>(i + 1))));
      // the limit lies inside every A_n, yet weighs nothing
      CHECK(seq.limit_set.subset_of(seq.steps[i].set));
      CHECK(seq.steps[i].value >= Rational(1, 2));
      if (i > 0) CHECK(seq.steps[i].set.subset_of(seq.steps[i - 1].set));
    }
    CHECK(seq.limit_value == Rational(0));
  }
}

TEST_CASE("property: finite additivity and monotonicity on the fragment") {
  testgen::Engine rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto s = random_set(rng);
    const auto t = fa::fa_intersect(random_set(rng), fa::fa_complement(s));
    REQUIRE(s.disjoint_from(t));
    CHECK(fa::fa_value(fa::fa_union(s, t)) == fa::fa_value(s) + fa::fa_value(t));
    CHECK(fa::fa_value(s) <= fa::fa_value(fa::fa_union(s, t)));
    CHECK(fa::fa_value(s) + fa::fa_value(fa::fa_complement(s)) == Rational(1));
    const auto sub = fa::fa_intersect(s, random_set(rng));
    CHECK(sub.subset_of(s));
    CHECK(fa::fa_value(sub) <= fa::fa_value(s));
  }
}

TEST_CASE("property: on plain portions the measure is the uniform one") {
  testgen::Engine rng(6);
  const auto uniform = ValueMeasure1D::uniform();
  for (int trial = 0; trial < 300; ++trial) {
    const Portion p = testgen::random_portion(rng);
    CHECK(fa::fa_value(RepresentableSet::all(p)) == measure_of(uniform, p));
  }
}
