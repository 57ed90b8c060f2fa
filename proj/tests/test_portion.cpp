#include "doctest.h"

#include "fairdiv/portion.hpp"
#include "generators.hpp"

using namespace fairdiv;

TEST_CASE("complement of a closed half") {
  const Portion c = Portion::closed(Rational(0), Rational(1, 2)).complement();
  CHECK(c == Portion::open_closed(Rational(1, 2), Rational(1)));
  CHECK_FALSE(c.contains(Rational(1, 2)));
  CHECK(c.contains(Rational(1)));
}

TEST_CASE("touching closed intervals merge") {
  const Portion u = Portion::closed(Rational(0), Rational(1, 4)) | Portion::closed(Rational(1, 4), Rational(1, 2));
  CHECK(u == Portion::closed(Rational(0), Rational(1, 2)));
  CHECK(u.intervals().size() == 1);
  // open on both sides of 1/4: the point stays out as a removed point
  const Portion gap = Portion::open(Rational(0), Rational(1, 4)) | Portion::open(Rational(1, 4), Rational(1, 2));
  CHECK(gap.removed_points() == std::vector<Rational>{Rational(1, 4)});
  CHECK(gap.length() == Rational(1, 2));
}

TEST_CASE("intersection with a trimmed interval keeps the removed points below the cut") {
  const std::vector<Rational> r{Rational(1, 3), Rational(3, 4), Rational(1, 7)};
  const Portion trimmed =
      Portion::from_parts({Interval{Rational(0), Rational(1, 2) + Rational(1, 3), true, true}}, {}, r);
  const Portion got = trimmed & Portion::closed(Rational(0), Rational(1, 2));
  const Portion expected =
      Portion::from_parts({Interval{Rational(0), Rational(1, 2), true, true}}, {}, {Rational(1, 7), Rational(1, 3)});
  CHECK(got == expected);
  CHECK(got.removed_points() == std::vector<Rational>{Rational(1, 7), Rational(1, 3)});
}

TEST_CASE("normal form is unique") {
  // the same set described three ways
  const Portion a = Portion::from_parts({Interval{Rational(0), Rational(1), true, true}}, {}, {Rational(1, 2)});
  const Portion b = Portion::closed_open(Rational(0), Rational(1, 2)) | Portion::open_closed(Rational(1, 2), Rational(1));
  const Portion c = Portion::whole().minus(Portion::point(Rational(1, 2)));
  CHECK(a == b);
  CHECK(b == c);
  // an added point at an interval endpoint closes the interval
  CHECK(Portion::from_parts({Interval{Rational(0), Rational(1, 2), true, false}}, {Rational(1, 2)}, {}) ==
        Portion::closed(Rational(0), Rational(1, 2)));
  // removing an endpoint opens it instead of recording a removed point
  const Portion d = Portion::from_parts({Interval{Rational(0), Rational(1, 2), true, true}}, {}, {Rational(1, 2)});
  CHECK(d == Portion::closed_open(Rational(0), Rational(1, 2)));
  CHECK(d.removed_points().empty());
}

TEST_CASE("isolated points and half-open canonical form") {
  const Portion p = Portion::points({Rational(1, 5), Rational(4, 5)});
  CHECK(p.added_points().size() == 2);
  CHECK(p.length() == Rational(0));
  CHECK_FALSE(p.is_empty());
  const Portion q = (Portion::closed(Rational(0), Rational(1, 4)) | Portion::open_closed(Rational(1, 4), Rational(1, 2)) |
                     Portion::point(Rational(3, 4)))
                        .half_open_canonical();
  CHECK(q == Portion::closed_open(Rational(0), Rational(1, 2)));
}

TEST_CASE("property: set algebra laws hold exactly") {
  testgen::Engine rng(20240611);
  for (int trial = 0; trial < 400; ++trial) {
    const Portion a = testgen::random_portion(rng);
    const Portion b = testgen::random_portion(rng);
    CHECK(a.complement().complement() == a);
    CHECK((a | b).complement() == (a.complement() & b.complement()));
    CHECK((a & b).complement() == (a.complement() | b.complement()));
    CHECK((a | b) == (b | a));
    CHECK((a & a.complement()).is_empty());
    CHECK((a | a.complement()) == Portion::whole());
    // membership agrees with the boolean operations at every critical point
    for (const auto& x : (a | b).critical_points()) {
      CHECK((a | b).contains(x) == (a.contains(x) || b.contains(x)));
      CHECK((a & b).contains(x) == (a.contains(x) && b.contains(x)));
    }
  }
}
