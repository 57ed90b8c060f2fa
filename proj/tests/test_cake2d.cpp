#include "doctest.h"

#include <algorithm>

#include "fairdiv/cake2d.hpp"
#include "fairdiv/scenarios.hpp"
#include "generators.hpp"

using namespace fairdiv;
using namespace fairdiv::cake2d;

namespace {

// Oracle: area of rect ∩ {p : d.p <= level} by half-plane polygon clipping
// and the shoelace formula. Independent of the trapezoid construction.
Rational clipped_area(const Rect& r, const SweepDirection& d, const Rational& level) {
  std::vector<Point> poly{{r.x0, r.y0}, {r.x1, r.y0}, {r.x1, r.y1}, {r.x0, r.y1}};
  auto f = [&](const Point& p) { return d.dx() * p.x + d.dy() * p.y - level; };
  std::vector<Point> out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % poly.size()];
    const Rational fa = f(a), fb = f(b);
    if (fa.sign() <= 0) out.push_back(a);
    if ((fa.sign() < 0 && fb.sign() > 0) || (fa.sign() > 0 && fb.sign() < 0)) {
      const Rational t = fa / (fa - fb);
      out.push_back(Point{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
    }
  }
  Rational twice(0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Point& a = out[i];
    const Point& b = out[(i + 1) % out.size()];
    twice += a.x * b.y - b.x * a.y;
  }
  return abs(twice) / Rational(2);
}

Cake2DMeasure unit_square() { return Cake2DMeasure({Region{Rect{Rational(0), Rational(1), Rational(0), Rational(1)}, Rational(1)}}, {}); }

Cake2DMeasure random_cake(testgen::Engine& rng, bool with_segments) {
  std::vector<Region> regions;
  std::vector<Segment> segments;
  Rational total(0);
  for (int i = 0; i < 2; ++i) {
    Rational x0 = testgen::grid_point(rng, 6), x1 = testgen::grid_point(rng, 6);
    Rational y0 = testgen::grid_point(rng, 6), y1 = testgen::grid_point(rng, 6);
    if (x1 < x0) std::swap(x0, x1);
    if (y1 < y0) std::swap(y0, y1);
    if (x0 == x1 || y0 == y1) continue;
    Region r{Rect{x0, x1, y0, y1}, Rational(testgen::uniform_int(rng, 1, 5))};
    total += r.density * r.rect.area();
    regions.push_back(r);
  }
  if (with_segments || regions.empty()) {
    for (int i = 0; i < 2; ++i) {
      Point a{testgen::grid_point(rng, 4), testgen::grid_point(rng, 4)};
      Point b{testgen::grid_point(rng, 4), testgen::grid_point(rng, 4)};
      if (a == b) continue;
      Segment s{a, b, Rational(testgen::uniform_int(rng, 1, 3))};
      total += s.mass;
      segments.push_back(s);
    }
  }
  if (total.is_zero()) {
    regions.push_back(Region{Rect{Rational(0), Rational(1), Rational(0), Rational(1)}, Rational(1)});
    total = Rational(1);
  }
  for (auto& r : regions) r.density /= total;
  for (auto& s : segments) s.mass /= total;
  return Cake2DMeasure(regions, segments);
}

SweepDirection random_direction(testgen::Engine& rng) {
  for (;;) {
    const long dx = testgen::uniform_int(rng, -5, 5), dy = testgen::uniform_int(rng, -5, 5);
    if (dx != 0 || dy != 0) return SweepDirection(Rational(dx), Rational(dy));
  }
}

}  // namespace

TEST_CASE("frosting projections") {
  const auto frost = scenarios::frosting(1)[0];
  const auto horizontal_knife = sweep_project(frost, SweepDirection(Rational(0), Rational(-1)));
  REQUIRE(horizontal_knife.measure.atoms().size() == 1);
  CHECK(horizontal_knife.measure.atoms()[0] == Atom{Rational(0), Rational(1)});
  CHECK_FALSE(is_atomless(horizontal_knife.measure));

  const auto vertical_knife = sweep_project(frost, SweepDirection(Rational(1), Rational(0)));
  CHECK(is_atomless(vertical_knife.measure));
  CHECK(vertical_knife.measure == ValueMeasure1D::uniform());
}

TEST_CASE("diagonal sweep of the unit square is triangular") {
  const auto proj = sweep_project(unit_square(), SweepDirection(Rational(1), Rational(1)));
  CHECK(proj.measure.density_right(Rational(0)) == Rational(0));
  CHECK(proj.measure.density_left(Rational(1, 2)) == Rational(2));
  CHECK(proj.measure.density_right(Rational(1, 4)) == Rational(1));
  CHECK(proj.measure.density_right(Rational(3, 4)) == Rational(1));
  const SweepDirection d(Rational(1), Rational(1));
  for (long k = 0; k <= 16; ++k) {
    const Rational t(k, 16);
    CHECK(cdf(proj.measure, t) == clipped_area(Rect{Rational(0), Rational(1), Rational(0), Rational(1)}, d, proj.level_at(t)));
  }
}

TEST_CASE("directions are canonical coprime pairs") {
  CHECK(SweepDirection(Rational(2), Rational(4)) == SweepDirection(Rational(1), Rational(2)));
  CHECK(SweepDirection(Rational(1, 2), Rational(-1, 3)) == SweepDirection(Rational(3), Rational(-2)));
  CHECK_FALSE(SweepDirection(Rational(1), Rational(0)) == SweepDirection(Rational(-1), Rational(0)));
  CHECK_THROWS_AS(SweepDirection(Rational(0), Rational(0)), DomainError);
}

TEST_CASE("atom directions") {
  const auto frost = atom_directions(scenarios::frosting(1)[0]);
  CHECK(frost == std::vector<SweepDirection>{SweepDirection(Rational(0), Rational(-1)), SweepDirection(Rational(0), Rational(1))});
  CHECK(atom_directions(unit_square()).empty());
  const Cake2DMeasure cross({}, {Segment{{Rational(0), Rational(1, 2)}, {Rational(1), Rational(1, 2)}, Rational(1, 2)},
                                 Segment{{Rational(1, 2), Rational(0)}, {Rational(1, 2), Rational(1)}, Rational(1, 2)}});
  const auto dirs = atom_directions(cross);
  // perpendicularity: (0, +-1) for the horizontal segment, (+-1, 0) for the vertical one
  CHECK(dirs.size() == 4);
  for (const auto& d : dirs) {
    const bool perp_h = d.dx().is_zero();
    const bool perp_v = d.dy().is_zero();
    CHECK((perp_h || perp_v));
  }
}

TEST_CASE("axis cuts of the half-square profiles") {
  const auto profile = scenarios::example3();
  const auto v1 = axis_cut(profile[0], Axis::vertical, Rational(1, 2));
  const auto v2 = axis_cut(profile[1], Axis::vertical, Rational(1, 2));
  CHECK(v1.first.mass() == Rational(1, 2));
  CHECK(v2.second.mass() == Rational(1, 2));
  const auto h1 = axis_cut(profile[0], Axis::horizontal, Rational(3, 4));
  const auto h2 = axis_cut(profile[1], Axis::horizontal, Rational(3, 4));
  CHECK(h1.second.mass() == Rational(1, 2));
  CHECK(h2.first.mass() == Rational(1));
  const auto zero = axis_cut(unit_square(), Axis::vertical, Rational(0));
  CHECK(zero.first.mass() == Rational(0));
  CHECK(zero.second.mass() == Rational(1));
  // the vertical-axis projection of player 1 has the unique median 3/4
  const auto proj = sweep_project(profile[0], SweepDirection(Rational(0), Rational(1)));
  const auto med = quantile_set(proj.measure, Rational(1, 2));
  CHECK(med.unique());
  CHECK(*med.lo.exact == Rational(3, 4));
}

TEST_CASE("axis cuts split segments by length") {
  const Cake2DMeasure diag({}, {Segment{{Rational(0), Rational(0)}, {Rational(1), Rational(1)}, Rational(1)}});
  const auto halves = axis_cut(diag, Axis::horizontal, Rational(1, 4));
  CHECK(halves.first.mass() == Rational(1, 4));
  CHECK(halves.second.mass() == Rational(3, 4));
  const Cake2DMeasure flat({}, {Segment{{Rational(0), Rational(1, 2)}, {Rational(1), Rational(1, 2)}, Rational(1)}});
  CHECK(axis_cut(flat, Axis::horizontal, Rational(1, 2)).second.mass() == Rational(1));
  CHECK(mass_in_rect(diag, Rect{Rational(0), Rational(1, 2), Rational(0), Rational(1)}) == Rational(1, 2));
}

TEST_CASE("property: projection conserves mass and matches the clipping oracle") {
  testgen::Engine rng(31);
  for (int cake = 0; cake < 10; ++cake) {
    const auto c = random_cake(rng, false);
    for (int k = 0; k < 100; ++k) {
      const auto d = random_direction(rng);
      const auto proj = sweep_project(c, d);
      CHECK(cdf(proj.measure, Rational(1)) == Rational(1));
      CHECK(proj.measure.max_degree() <= 1);
      if (k % 10 == 0) {
        for (long j = 0; j <= 8; ++j) {
          const Rational t(j, 8);
          Rational expected(0);
          for (const auto& r : c.regions()) expected += r.density * clipped_area(r.rect, d, proj.level_at(t));
          CHECK(cdf(proj.measure, t) == expected);
        }
      }
    }
  }
}

TEST_CASE("property: projections carry atoms exactly in the atom directions") {
  testgen::Engine rng(37);
  for (int cake = 0; cake < 40; ++cake) {
    const auto c = random_cake(rng, true);
    const auto dirs = atom_directions(c);
    std::vector<SweepDirection> with_atoms;
    for (long dx = -4; dx <= 4; ++dx)
      for (long dy = -4; dy <= 4; ++dy) {
        if (dx == 0 && dy == 0) continue;
        const SweepDirection d{Rational(dx), Rational(dy)};
        if (!is_atomless(sweep_project(c, d).measure)) with_atoms.push_back(d);
      }
    std::sort(with_atoms.begin(), with_atoms.end());
    with_atoms.erase(std::unique(with_atoms.begin(), with_atoms.end()), with_atoms.end());
    // every atom direction of these grid-4 segments is representable on the sampled grid
    CHECK(with_atoms == dirs);
    for (const auto& d : dirs) CHECK_FALSE(is_atomless(sweep_project(c, d).measure));
  }
}
