#include "fairdiv/cake2d.hpp"

#include <algorithm>

namespace fairdiv::cake2d {

namespace {

const Rational kZero(0);
const Rational kOne(1);

bool in_unit(const Rational& v) { return kZero <= v && v <= kOne; }

Rational dot(const SweepDirection& d, const Point& p) { return d.dx() * p.x + d.dy() * p.y; }

// Sub-segment for parameters [a, b] of `s` (0 <= a < b <= 1).
Segment sub_segment(const Segment& s, const Rational& a, const Rational& b) {
  auto at = [&](const Rational& l) {
    return Point{s.from.x + l * (s.to.x - s.from.x), s.from.y + l * (s.to.y - s.from.y)};
  };
  return Segment{at(a), at(b), s.mass * (b - a)};
}

// Density of s = u + v for u uniform on an interval of length lu starting at
// 0, v uniform of length lv, total mass `mass`, as pieces in s.
std::vector<PolyPiece> trapezoid(const Rational& start, const Rational& lu, const Rational& lv, const Rational& mass) {
  if (lu.is_zero()) return {PolyPiece{start, start + lv, Polynomial::constant(mass / lv)}};
  if (lv.is_zero()) return {PolyPiece{start, start + lu, Polynomial::constant(mass / lu)}};
  const Rational a = min(lu, lv), b = max(lu, lv);
  const Rational slope = mass / (a * b);
  std::vector<PolyPiece> out;
  // rising edge: slope * (s - start)
  out.push_back(PolyPiece{start, start + a, Polynomial{-slope * start, slope}});
  if (a < b) out.push_back(PolyPiece{start + a, start + b, Polynomial::constant(mass / b)});
  const Rational end = start + a + b;
  out.push_back(PolyPiece{start + b, end, Polynomial{slope * end, -slope}});
  return out;
}

}  // namespace

Rational Cake2DPart::mass() const {
  Rational total(0);
  for (const auto& r : regions) total += r.density * r.rect.area();
  for (const auto& s : segments) total += s.mass;
  return total;
}

Cake2DMeasure::Cake2DMeasure(std::vector<Region> regions, std::vector<Segment> segments) {
  for (const auto& r : regions) {
    const auto& q = r.rect;
    if (!(q.x0 < q.x1 && q.y0 < q.y1) || !in_unit(q.x0) || !in_unit(q.x1) || !in_unit(q.y0) || !in_unit(q.y1))
      throw InvalidMeasure("OutOfRange", "rectangle must be non-degenerate and inside the unit square");
    if (r.density.sign() < 0) throw InvalidMeasure("NegativeDensity", "region density " + r.density.str());
  }
  for (const auto& s : segments) {
    if (!in_unit(s.from.x) || !in_unit(s.from.y) || !in_unit(s.to.x) || !in_unit(s.to.y))
      throw InvalidMeasure("OutOfRange", "segment leaves the unit square");
    if (s.from == s.to) throw InvalidMeasure("BadSegment", "segment endpoints coincide");
    if (s.mass.sign() <= 0) throw InvalidMeasure("BadSegment", "segment mass must be positive, got " + s.mass.str());
  }
  part_ = Cake2DPart{std::move(regions), std::move(segments)};
  const Rational total = part_.mass();
  if (total != kOne) throw InvalidMeasure("MassNotOne", "total mass is " + total.str() + ", expected 1");
}

SweepDirection::SweepDirection(const Rational& dx, const Rational& dy) {
  if (dx.is_zero() && dy.is_zero()) throw DomainError("sweep direction (0, 0)");
  mpz_class l;
  const mpz_class bx = dx.den(), by = dy.den();
  mpz_lcm(l.get_mpz_t(), bx.get_mpz_t(), by.get_mpz_t());
  mpz_class ix = dx.num() * (l / bx);
  mpz_class iy = dy.num() * (l / by);
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), ix.get_mpz_t(), iy.get_mpz_t());
  dx_ = Rational(mpq_class(ix / g));
  dy_ = Rational(mpq_class(iy / g));
}

Rational SweepProjection::coordinate_of(const Point& p) const { return (dot(direction, p) - offset) / scale; }

SweepProjection sweep_project(const Cake2DMeasure& c, const SweepDirection& d) {
  const Rational offset = min(kZero, d.dx()) + min(kZero, d.dy());
  const Rational scale = abs(d.dx()) + abs(d.dy());
  std::vector<PolyPiece> pieces;
  for (const auto& r : c.regions()) {
    const Rational m = r.density * r.rect.area();
    if (m.is_zero()) continue;
    const Rational umin = min(d.dx() * r.rect.x0, d.dx() * r.rect.x1);
    const Rational vmin = min(d.dy() * r.rect.y0, d.dy() * r.rect.y1);
    const Rational lu = abs(d.dx()) * (r.rect.x1 - r.rect.x0);
    const Rational lv = abs(d.dy()) * (r.rect.y1 - r.rect.y0);
    for (auto& p : trapezoid(umin + vmin, lu, lv, m)) {
      // change of variables s = offset + scale * t
      pieces.push_back(PolyPiece{(p.lo - offset) / scale, (p.hi - offset) / scale,
                                 p.density.compose_affine(scale, offset) * scale});
    }
  }
  std::vector<Atom> atoms;
  for (const auto& s : c.segments()) {
    const Rational a = (dot(d, s.from) - offset) / scale;
    const Rational b = (dot(d, s.to) - offset) / scale;
    if (a == b) {
      atoms.push_back(Atom{a, s.mass});
    } else {
      pieces.push_back(PolyPiece{min(a, b), max(a, b), Polynomial::constant(s.mass / abs(b - a))});
    }
  }
  return SweepProjection{ValueMeasure1D::from_overlapping(pieces, atoms), d, offset, scale};
}

std::vector<SweepDirection> atom_directions(const Cake2DMeasure& c) {
  std::vector<SweepDirection> out;
  for (const auto& s : c.segments()) {
    const SweepDirection normal(s.from.y - s.to.y, s.to.x - s.from.x);
    out.push_back(normal);
    out.push_back(normal.reversed());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::pair<Cake2DPart, Cake2DPart> axis_cut(const Cake2DPart& c, Axis axis, const Rational& coordinate) {
  if (!in_unit(coordinate)) throw DomainError("cut coordinate " + coordinate.str() + " outside [0, 1]");
  Cake2DPart low, high;
  const bool horiz = axis == Axis::horizontal;
  for (const auto& r : c.regions) {
    const Rational lo = horiz ? r.rect.y0 : r.rect.x0;
    const Rational hi = horiz ? r.rect.y1 : r.rect.x1;
    auto clipped = [&](const Rational& a, const Rational& b) {
      Region out = r;
      (horiz ? out.rect.y0 : out.rect.x0) = a;
      (horiz ? out.rect.y1 : out.rect.x1) = b;
      return out;
    };
    if (hi <= coordinate) {
      low.regions.push_back(r);
    } else if (coordinate <= lo) {
      high.regions.push_back(r);
    } else {
      low.regions.push_back(clipped(lo, coordinate));
      high.regions.push_back(clipped(coordinate, hi));
    }
  }
  for (const auto& s : c.segments) {
    const Rational p = horiz ? s.from.y : s.from.x;
    const Rational q = horiz ? s.to.y : s.to.x;
    if (p == q) {
      (p < coordinate ? low : high).segments.push_back(s);
      continue;
    }
    const Rational cross = (coordinate - p) / (q - p);
    if (cross <= kZero || cross >= kOne) {
      // entirely on one side (possibly touching the line at an endpoint)
      const Rational mid = (p + q) / Rational(2);
      (mid < coordinate ? low : high).segments.push_back(s);
      continue;
    }
    Segment first = sub_segment(s, kZero, cross), second = sub_segment(s, cross, kOne);
    if (p < q) {
      low.segments.push_back(first);
      high.segments.push_back(second);
    } else {
      high.segments.push_back(first);
      low.segments.push_back(second);
    }
  }
  return {low, high};
}

Rational mass_in_rect(const Cake2DPart& c, const Rect& r) {
  Rational total(0);
  for (const auto& reg : c.regions) {
    const Rational w = min(reg.rect.x1, r.x1) - max(reg.rect.x0, r.x0);
    const Rational h = min(reg.rect.y1, r.y1) - max(reg.rect.y0, r.y0);
    if (w.sign() > 0 && h.sign() > 0) total += reg.density * w * h;
  }
  for (const auto& s : c.segments) {
    Rational lo(0), hi(1);
    auto clip = [&](const Rational& p, const Rational& q, const Rational& a, const Rational& b) {
      const Rational delta = q - p;
      if (delta.is_zero()) {
        if (p < a || p > b) hi = Rational(-1);
        return;
      }
      Rational l1 = (a - p) / delta, l2 = (b - p) / delta;
      if (l2 < l1) std::swap(l1, l2);
      lo = max(lo, l1);
      hi = min(hi, l2);
    };
    clip(s.from.x, s.to.x, r.x0, r.x1);
    clip(s.from.y, s.to.y, r.y0, r.y1);
    if (lo < hi) total += s.mass * (hi - lo);
  }
  return total;
}

std::vector<Rational> values_2d(const Allocation2D& a, const std::vector<Cake2DMeasure>& measures) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < a.portions.size(); ++i) {
    Rational v(0);
    for (const auto& r : a.portions[i]) v += mass_in_rect(measures.at(i), r);
    out.push_back(v);
  }
  return out;
}

}  // namespace fairdiv::cake2d
