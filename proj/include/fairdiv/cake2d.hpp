#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fairdiv/measure.hpp"
#include "fairdiv/rational.hpp"

namespace fairdiv::cake2d {

struct Point {
  Rational x, y;
  friend bool operator==(const Point&, const Point&) = default;
};

/// Closed axis-aligned rectangle [x0, x1] x [y0, y1] inside the unit square.
struct Rect {
  Rational x0, x1, y0, y1;
  Rational area() const { return (x1 - x0) * (y1 - y0); }
  friend bool operator==(const Rect&, const Rect&) = default;
};

struct Region {
  Rect rect;
  Rational density;
  friend bool operator==(const Region&, const Region&) = default;
};

/// Mass spread uniformly along the straight segment from -> to.
struct Segment {
  Point from, to;
  Rational mass;
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Unnormalized mass on the unit square: what remains on one side of a cut.
struct Cake2DPart {
  std::vector<Region> regions;
  std::vector<Segment> segments;
  Rational mass() const;
};

/// Normalized value measure on the unit square. Throws InvalidMeasure on
/// negative densities, non-positive segment masses, degenerate segments or
/// rectangles, anything outside the square, or total mass != 1.
class Cake2DMeasure {
public:
  Cake2DMeasure(std::vector<Region> regions, std::vector<Segment> segments);

  const std::vector<Region>& regions() const { return part_.regions; }
  const std::vector<Segment>& segments() const { return part_.segments; }
  const Cake2DPart& part() const { return part_; }
  friend bool operator==(const Cake2DMeasure& a, const Cake2DMeasure& b) {
    return a.part_.regions == b.part_.regions && a.part_.segments == b.part_.segments;
  }

private:
  Cake2DPart part_;
};

/// The knife sweeps along (dx, dy): the sweep coordinate of a point p is
/// d . p. Stored as a coprime integer pair (positive rescaling only, so the
/// sweep sense is kept).
class SweepDirection {
public:
  SweepDirection(const Rational& dx, const Rational& dy);
  const Rational& dx() const { return dx_; }
  const Rational& dy() const { return dy_; }
  SweepDirection reversed() const { return {-dx_, -dy_}; }
  std::string str() const { return "(" + dx_.str() + "," + dy_.str() + ")"; }
  friend bool operator==(const SweepDirection&, const SweepDirection&) = default;
  friend auto operator<=>(const SweepDirection& a, const SweepDirection& b) {
    if (auto c = a.dx_ <=> b.dx_; c != 0) return c;
    return a.dy_ <=> b.dy_;
  }

private:
  Rational dx_, dy_;
};

/// Projection onto the sweep coordinate rescaled to [0, 1]:
/// t = (d . p - offset) / scale.
struct SweepProjection {
  ValueMeasure1D measure;
  SweepDirection direction;
  Rational offset, scale;

  Rational coordinate_of(const Point& p) const;
  /// The knife line at sweep position t is {p : d . p = level_at(t)}.
  Rational level_at(const Rational& t) const { return offset + scale * t; }
};

SweepProjection sweep_project(const Cake2DMeasure& c, const SweepDirection& d);

/// Directions whose knife is parallel to some mass-carrying segment, both
/// senses included, sorted.
std::vector<SweepDirection> atom_directions(const Cake2DMeasure& c);

enum class Axis { horizontal, vertical };

/// Cut along y = coordinate (horizontal) or x = coordinate (vertical).
/// first = strictly below / left of the line, second = the rest. Segment
/// mass lying on the line goes to second.
std::pair<Cake2DPart, Cake2DPart> axis_cut(const Cake2DPart& c, Axis axis, const Rational& coordinate);
inline std::pair<Cake2DPart, Cake2DPart> axis_cut(const Cake2DMeasure& c, Axis axis, const Rational& coordinate) {
  return axis_cut(c.part(), axis, coordinate);
}

/// Mass inside a closed rectangle.
Rational mass_in_rect(const Cake2DPart& c, const Rect& r);
inline Rational mass_in_rect(const Cake2DMeasure& c, const Rect& r) { return mass_in_rect(c.part(), r); }

/// A 2D allocation: each player receives a union of rectangles. Rectangles
/// of different players may share boundary lines only where no segment
/// mass lies.
struct Allocation2D {
  std::vector<std::vector<Rect>> portions;  // indexed by player
};

std::vector<Rational> values_2d(const Allocation2D& a, const std::vector<Cake2DMeasure>& measures);

}  // namespace fairdiv::cake2d
