#include "fairdiv/scenarios.hpp"

#include <algorithm>

namespace fairdiv::scenarios {

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

// `high` on the cells listed in `high_cells` of an equal-width grid, `low` elsewhere.
ValueMeasure1D two_level(long cells, const std::vector<long>& high_cells, const Rational& high, const Rational& low) {
  std::vector<Rational> breaks, dens;
  for (long i = 0; i <= cells; ++i) breaks.push_back(q(i, cells));
  for (long i = 0; i < cells; ++i)
    dens.push_back(std::find(high_cells.begin(), high_cells.end(), i) != high_cells.end() ? high : low);
  return ValueMeasure1D::piecewise_constant(breaks, dens);
}

}  // namespace

Profile example2() {
  return {ValueMeasure1D::uniform(), ValueMeasure1D::uniform_on(q(0), q(1, 3)), ValueMeasure1D::uniform_on(q(2, 3), q(1))};
}

std::vector<cake2d::Cake2DMeasure> example3() {
  using cake2d::Rect;
  using cake2d::Region;
  return {cake2d::Cake2DMeasure({Region{Rect{q(0), q(1), q(1, 2), q(1)}, q(2)}}, {}),
          cake2d::Cake2DMeasure({Region{Rect{q(0), q(1), q(0), q(1, 2)}, q(2)}}, {})};
}

Profile example4() {
  return {two_level(4, {0, 2}, q(8, 5), q(2, 5)), two_level(4, {1, 3}, q(8, 5), q(2, 5))};
}

Profile example5() {
  return {two_level(6, {0, 3}, q(12, 5), q(3, 10)), two_level(6, {1, 4}, q(12, 5), q(3, 10)),
          two_level(6, {2, 5}, q(12, 5), q(3, 10))};
}

Profile example6() {
  return {ValueMeasure1D::uniform(),
          ValueMeasure1D({PolyPiece{q(0), q(1, 4), Polynomial::constant(q(2))},
                          PolyPiece{q(3, 4), q(1), Polynomial::constant(q(2))}})};
}

Profile example7() {
  return {ValueMeasure1D::uniform(), ValueMeasure1D::uniform_on(q(2, 5), q(3, 5)),
          ValueMeasure1D::uniform_on(q(2, 5), q(3, 5))};
}

Profile example8_truth() {
  return {ValueMeasure1D::uniform_on(q(1, 2), q(1)), ValueMeasure1D::uniform_on(q(0), q(1, 2))};
}

std::vector<cake2d::Cake2DMeasure> frosting(std::size_t players) {
  std::vector<cake2d::Cake2DMeasure> out;
  for (std::size_t i = 0; i < players; ++i)
    out.emplace_back(std::vector<cake2d::Region>{},
                     std::vector<cake2d::Segment>{cake2d::Segment{{q(0), q(1)}, {q(1), q(1)}, q(1)}});
  return out;
}

ValueMeasure1D uniform_with_median(const Rational& b) { return split_uniform(b, q(1, 2)); }

ValueMeasure1D split_uniform(const Rational& p, const Rational& mass_left) {
  return ValueMeasure1D::piecewise_constant({q(0), p, q(1)}, {mass_left / p, (q(1) - mass_left) / (q(1) - p)});
}

}  // namespace fairdiv::scenarios
