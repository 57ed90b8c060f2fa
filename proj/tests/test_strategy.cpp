#include "doctest.h"

#include <algorithm>

#include "fairdiv/scenarios.hpp"
#include "fairdiv/strategy.hpp"
#include "generators.hpp"

using namespace fairdiv;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

const ValueMeasure1D& uniform() {
  static const ValueMeasure1D u = ValueMeasure1D::uniform();
  return u;
}

std::vector<ValueMeasure1D> misreport_grid() {
  const std::vector<Rational> g{q(1, 6), q(1, 3), q(1, 2), q(2, 3), q(5, 6)};
  std::vector<ValueMeasure1D> out;
  for (const auto& p : g)
    for (const auto& m : g) out.push_back(scenarios::split_uniform(p, m));
  return out;
}

}  // namespace

TEST_CASE("transform of the uniform measure") {
  const auto s = star_transform(uniform());
  CHECK(cdf(s, q(0)) == q(0));
  CHECK(cdf(s, q(1)) == q(1));
  CHECK(cdf(s, q(1, 2)) == q(1, 2));
  for (long k = 0; k <= 12; ++k) {
    const Rational x(k, 12);
    const Rational d = q(1, 2) - x;
    CHECK(cdf(s, x) == (x <= q(1, 2) ? q(1, 2) - q(2) * d * d : q(1, 2) + q(2) * d * d));
  }
  CHECK(quantile_set(s, q(1, 2)).unique());
}

TEST_CASE("transform errors") {
  CHECK_THROWS_AS(star_transform(scenarios::example6()[1]), MultipleMedians);
  try {
    star_transform(star_transform(uniform()));
    FAIL("expected DegreeTooHigh");
  } catch (const InvalidMeasure& e) {
    CHECK(e.code() == "DegreeTooHigh");
  }
}

TEST_CASE("property: transform yields a valid measure with the same median") {
  testgen::Engine rng(67);
  for (int trial = 0; trial < 300; ++trial) {
    const auto f = testgen::random_piecewise_constant(rng, 1 + trial % 5, false);
    const auto s = star_transform(f);
    const Rational a = *quantile_set(f, q(1, 2)).lo.exact;
    CHECK(cdf(s, a) == q(1, 2));
    Rational prev(0);
    for (long k = 0; k <= 24; ++k) {
      const Rational x(k, 24);
      const Rational F = cdf(f, x), Fs = cdf(s, x);
      const Rational d = q(1, 2) - F;
      CHECK(Fs == (x <= a ? q(1, 2) - q(2) * d * d : q(1, 2) + q(2) * d * d));
      CHECK(Fs >= prev);
      prev = Fs;
    }
  }
}

TEST_CASE("misreport outcomes") {
  const auto truth = scenarios::example8_truth();
  const ReportProfile lie{{uniform(), uniform()}, truth};
  for (auto p : {Procedure::sp, Procedure::ep, Procedure::moving_knife})
    CHECK(misreport_outcome(p, lie).values == std::vector<Rational>{q(0), q(0)});

  const ReportProfile honest{{uniform(), uniform()}, {uniform(), uniform()}};
  CHECK(misreport_outcome(Procedure::sp, honest).values == std::vector<Rational>{q(1, 2), q(1, 2)});

  const auto g2 = scenarios::uniform_with_median(q(3, 4));
  const auto truthful = misreport_outcome(Procedure::sp, {{uniform(), g2}, {uniform(), g2}});
  const auto star = misreport_outcome(Procedure::sp, {{star_transform(uniform()), g2}, {uniform(), g2}});
  CHECK(truthful.values[0] == q(5, 8));
  CHECK(star.bounds[0].first > truthful.bounds[0].second);
}

TEST_CASE("assuredly better against identical opponents") {
  const auto family = family_preset("identical", uniform());
  for (auto p : {Procedure::sp, Procedure::ep, Procedure::cut_and_choose, Procedure::moving_knife}) {
    const std::size_t n = p == Procedure::ep || p == Procedure::moving_knife ? 3 : 2;
    for (const auto& m : misreport_grid())
      for (std::size_t who = 0; who < n; ++who) CHECK_FALSE(assuredly_better_check(p, who, uniform(), m, family, n).holds);
  }
  const auto star = star_transform(uniform());
  const auto at_a = assuredly_better_check(Procedure::sp, 0, uniform(), star, family_preset("median:1/2", uniform()));
  CHECK_FALSE(at_a.holds);
  CHECK(at_a.deltas[0].delta == q(0));
  CHECK(at_a.deltas[0].sign == 0);
  CHECK(assuredly_better_check(Procedure::sp, 0, uniform(), star, family_preset("median:3/4", uniform())).holds);
}

TEST_CASE("weakly better") {
  const auto star = star_transform(uniform());
  const auto grid = family_preset("median:1/4,1/2,3/4", uniform());
  CHECK(grid.members.size() == 3);
  CHECK(weakly_better_check(Procedure::sp, 0, uniform(), star, grid).holds);
  CHECK(weakly_better_check(Procedure::sp, 0, uniform(), star, family_preset("median-grid", uniform())).holds);
  CHECK_FALSE(weakly_better_check(Procedure::sp, 0, uniform(), uniform(), grid).holds);
  // median pulled toward the opponent loses against some member
  const auto bad = weakly_better_check(Procedure::sp, 0, uniform(), scenarios::uniform_with_median(q(1, 4)), grid);
  CHECK_FALSE(bad.holds);
  CHECK(std::any_of(bad.deltas.begin(), bad.deltas.end(), [](const StrategyDelta& d) { return d.sign < 0; }));
  CHECK_THROWS_AS(family_preset("median:", uniform()), DomainError);
  CHECK_THROWS_AS(family_preset("nobody", uniform()), DomainError);
}

TEST_CASE("key ratio inequality at the surplus cut") {
  for (const auto& f : {uniform(), scenarios::split_uniform(q(1, 3), q(1, 2))}) {
    const auto star = star_transform(f);
    const Rational a = *quantile_set(f, q(1, 2)).lo.exact;
    for (long k = 1; k < 16; ++k) {
      const Rational b(k, 16);
      if (b <= a) continue;
      const auto r = surplus_procedure(star, scenarios::uniform_with_median(b), {});
      CHECK(a < r.cut.lower());
      CHECK(r.cut.upper() < b);
      for (const Rational& c : {r.cut.lower(), r.cut.upper()}) {
        const Rational plain = (cdf(f, c) - q(1, 2)) / (cdf(f, b) - q(1, 2));
        const Rational starred = (cdf(star, c) - q(1, 2)) / (cdf(star, b) - q(1, 2));
        CHECK(starred == plain * plain);
        CHECK(starred < plain);
      }
    }
  }
}

TEST_CASE("mirror symmetry of the gain") {
  const auto star = star_transform(uniform());
  for (long k = 1; k < 8; ++k) {
    const Rational b(k, 16);
    const auto below = misreport_outcome(Procedure::sp, {{star, scenarios::uniform_with_median(b)}, {uniform(), uniform()}});
    const auto above = misreport_outcome(Procedure::sp, {{star, scenarios::uniform_with_median(q(1) - b)}, {uniform(), uniform()}});
    const auto tb = misreport_outcome(Procedure::sp, {{uniform(), scenarios::uniform_with_median(b)}, {uniform(), uniform()}});
    const auto ta = misreport_outcome(Procedure::sp, {{uniform(), scenarios::uniform_with_median(q(1) - b)}, {uniform(), uniform()}});
    // enclosures of gain(b < a) and gain(mirrored): the first is not below the second
    const Rational below_hi = below.bounds[0].second - tb.bounds[0].first;
    const Rational above_lo = above.bounds[0].first - ta.bounds[0].second;
    CHECK(below_hi >= above_lo);
    CHECK(below.bounds[0].first - tb.bounds[0].second > q(0));
  }
}

TEST_CASE("property: assuredly better is monotone in the family") {
  const auto star = star_transform(uniform());
  const auto full = family_preset("median-grid", uniform());
  for (unsigned mask = 1; mask < (1u << full.members.size()); ++mask) {
    OpponentFamily s{"subset", {}};
    for (std::size_t i = 0; i < full.members.size(); ++i)
      if (mask & (1u << i)) s.members.push_back(full.members[i]);
    if (!assuredly_better_check(Procedure::sp, 0, uniform(), star, s).holds) continue;
    for (std::size_t drop = 0; drop < s.members.size(); ++drop) {
      if (s.members.size() == 1) break;
      OpponentFamily t = s;
      t.members.erase(t.members.begin() + static_cast<long>(drop));
      CHECK(assuredly_better_check(Procedure::sp, 0, uniform(), star, t).holds);
    }
  }
}
