#include "fairdiv/measure.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace fairdiv {

namespace {

const Rational kZero(0);
const Rational kOne(1);

void sort_unique(std::vector<Rational>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Index of the piece whose closed interval contains the open cell (a, b), if any.
const PolyPiece* piece_covering(const std::vector<PolyPiece>& pieces, const Rational& a, const Rational& b) {
  for (const auto& p : pieces)
    if (p.lo <= a && b <= p.hi) return &p;
  return nullptr;
}

}  // namespace

ValueMeasure1D::ValueMeasure1D(std::vector<PolyPiece> pieces, std::vector<Atom> atoms) {
  std::erase_if(pieces, [](const PolyPiece& p) { return p.density.is_zero(); });
  std::sort(pieces.begin(), pieces.end(), [](const PolyPiece& a, const PolyPiece& b) { return a.lo < b.lo; });
  std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) { return a.at < b.at; });
  Rational total(0);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& p = pieces[i];
    if (!(p.lo < p.hi)) throw InvalidMeasure("OutOfRange", "piece with lo >= hi: [" + p.lo.str() + ", " + p.hi.str() + "]");
    if (p.lo < kZero || p.hi > kOne)
      throw InvalidMeasure("OutOfRange", "piece [" + p.lo.str() + ", " + p.hi.str() + "] leaves [0, 1]");
    if (p.density.degree() > kMaxDensityDegree)
      throw InvalidMeasure("DegreeTooHigh", "density degree " + std::to_string(p.density.degree()) + " exceeds 2");
    if (p.density.min_on(p.lo, p.hi).sign() < 0)
      throw InvalidMeasure("NegativeDensity", "density " + p.density.str() + " is negative on [" + p.lo.str() + ", " +
                                                  p.hi.str() + "]");
    if (i > 0 && p.lo < pieces[i - 1].hi)
      throw InvalidMeasure("OverlappingPieces", "pieces overlap at " + p.lo.str());
    total += p.density.integrate(p.lo, p.hi);
  }
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const auto& a = atoms[i];
    if (a.at < kZero || a.at > kOne) throw InvalidMeasure("OutOfRange", "atom at " + a.at.str() + " outside [0, 1]");
    if (a.mass.sign() <= 0) throw InvalidMeasure("BadAtom", "atom mass must be positive, got " + a.mass.str());
    if (i > 0 && atoms[i - 1].at == a.at) throw InvalidMeasure("BadAtom", "duplicate atom at " + a.at.str());
    total += a.mass;
  }
  if (total != kOne) throw InvalidMeasure("MassNotOne", "total mass is " + total.str() + ", expected 1");
  pieces_ = std::move(pieces);
  atoms_ = std::move(atoms);
}

ValueMeasure1D ValueMeasure1D::from_overlapping(const std::vector<PolyPiece>& pieces, const std::vector<Atom>& atoms) {
  std::vector<Rational> grid;
  for (const auto& p : pieces) {
    grid.push_back(p.lo);
    grid.push_back(p.hi);
  }
  sort_unique(grid);
  std::vector<PolyPiece> merged;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    Polynomial sum;
    for (const auto& p : pieces)
      if (p.lo <= grid[i] && grid[i + 1] <= p.hi) sum += p.density;
    if (sum.is_zero()) continue;
    if (!merged.empty() && merged.back().hi == grid[i] && merged.back().density == sum) {
      merged.back().hi = grid[i + 1];
    } else {
      merged.push_back(PolyPiece{grid[i], grid[i + 1], sum});
    }
  }
  std::map<Rational, Rational> by_location;
  for (const auto& a : atoms) by_location[a.at] += a.mass;
  std::vector<Atom> out;
  for (const auto& [at, mass] : by_location)
    if (!mass.is_zero()) out.push_back(Atom{at, mass});
  return ValueMeasure1D(std::move(merged), std::move(out));
}

ValueMeasure1D ValueMeasure1D::uniform() { return uniform_on(kZero, kOne); }

ValueMeasure1D ValueMeasure1D::uniform_on(const Rational& lo, const Rational& hi) {
  return ValueMeasure1D({PolyPiece{lo, hi, Polynomial::constant(kOne / (hi - lo))}});
}

ValueMeasure1D ValueMeasure1D::piecewise_constant(const std::vector<Rational>& breaks,
                                                  const std::vector<Rational>& values) {
  if (breaks.size() != values.size() + 1) throw std::invalid_argument("piecewise_constant: size mismatch");
  std::vector<PolyPiece> pieces;
  for (std::size_t i = 0; i < values.size(); ++i)
    pieces.push_back(PolyPiece{breaks[i], breaks[i + 1], Polynomial::constant(values[i])});
  return ValueMeasure1D(std::move(pieces));
}

int ValueMeasure1D::max_degree() const {
  int d = -1;
  for (const auto& p : pieces_) d = std::max(d, p.density.degree());
  return d;
}

Rational ValueMeasure1D::atom_mass(const Rational& x) const {
  for (const auto& a : atoms_)
    if (a.at == x) return a.mass;
  return Rational(0);
}

Rational ValueMeasure1D::density_right(const Rational& x) const {
  for (const auto& p : pieces_)
    if (p.lo <= x && x < p.hi) return p.density(x);
  return Rational(0);
}

Rational ValueMeasure1D::density_left(const Rational& x) const {
  for (const auto& p : pieces_)
    if (p.lo < x && x <= p.hi) return p.density(x);
  return Rational(0);
}

std::vector<Rational> ValueMeasure1D::breakpoints() const {
  std::vector<Rational> b{kZero, kOne};
  for (const auto& p : pieces_) {
    b.push_back(p.lo);
    b.push_back(p.hi);
  }
  for (const auto& a : atoms_) b.push_back(a.at);
  sort_unique(b);
  return b;
}

Portion ValueMeasure1D::positivity_region() const {
  std::vector<Interval> ivs;
  for (const auto& p : pieces_) ivs.push_back(Interval{p.lo, p.hi, false, false});
  return Portion::from_parts(ivs, {}, {}).half_open_canonical();
}

std::string ValueMeasure1D::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < pieces_.size(); ++i)
    os << (i ? "; " : "") << "[" << pieces_[i].lo << ", " << pieces_[i].hi << "]: " << pieces_[i].density.str();
  for (const auto& a : atoms_) os << "; atom " << a.mass << " at " << a.at;
  return os.str();
}

Rational interval_mass(const ValueMeasure1D& m, const Rational& a, const Rational& b, bool a_closed, bool b_closed) {
  if (b < a) return Rational(0);
  Rational total(0);
  if (a < b) {
    for (const auto& p : m.pieces()) {
      const Rational lo = max(p.lo, a), hi = min(p.hi, b);
      if (lo < hi) total += p.density.integrate(lo, hi);
    }
  }
  for (const auto& at : m.atoms()) {
    const bool inside = (a < at.at || (a_closed && at.at == a)) && (at.at < b || (b_closed && at.at == b));
    if (inside && !(a == b && !(a_closed && b_closed))) total += at.mass;
  }
  return total;
}

Rational measure_of(const ValueMeasure1D& m, const Portion& p) {
  Rational total(0);
  for (const auto& iv : p.intervals())
    for (const auto& piece : m.pieces()) {
      const Rational lo = max(piece.lo, iv.lo), hi = min(piece.hi, iv.hi);
      if (lo < hi) total += piece.density.integrate(lo, hi);
    }
  for (const auto& a : m.atoms())
    if (p.contains(a.at)) total += a.mass;
  return total;
}

Rational cdf(const ValueMeasure1D& m, const Rational& x) {
  if (x < kZero || x > kOne) throw DomainError("cdf argument " + x.str() + " outside [0, 1]");
  return interval_mass(m, kZero, x, true, true);
}

namespace {

// Sweeps [from, 1] gap by gap. `reached(acc)` decides whether the accumulated
// mass satisfies the goal; `solve` inverts inside a gap with positive density.
template <class Reached>
std::optional<RootEnclosure> sweep(const ValueMeasure1D& m, const Rational& from, bool from_closed,
                                   const Rational& target, const Rational& eps, Reached reached) {
  if (from < kZero || from > kOne) throw DomainError("sweep start " + from.str() + " outside [0, 1]");
  Rational acc = from_closed ? m.atom_mass(from) : Rational(0);
  if (reached(acc)) return RootEnclosure::at(from);
  std::vector<Rational> grid{from};
  for (const auto& b : m.breakpoints())
    if (b > from) grid.push_back(b);
  for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
    const Rational& a = grid[k];
    const Rational& b = grid[k + 1];
    if (const PolyPiece* piece = piece_covering(m.pieces(), a, b)) {
      const Polynomial anti = piece->density.antiderivative();
      const Polynomial running = anti + Polynomial::constant(acc - anti(a));
      const Rational at_b = running(b);
      if (reached(at_b)) return first_reach_monotone(running, a, b, target, eps);
      acc = at_b;
    }
    acc += m.atom_mass(b);
    if (reached(acc)) return RootEnclosure::at(b);
  }
  return std::nullopt;
}

}  // namespace

std::optional<RootEnclosure> first_reach(const ValueMeasure1D& m, const Rational& from, bool from_closed,
                                         const Rational& target, const Rational& eps) {
  return sweep(m, from, from_closed, target, eps, [&](const Rational& v) { return v >= target; });
}

std::optional<RootEnclosure> first_exceed(const ValueMeasure1D& m, const Rational& from, bool from_closed,
                                          const Rational& target, const Rational& eps) {
  return sweep(m, from, from_closed, target, eps, [&](const Rational& v) { return v > target; });
}

QuantileSet quantile_set(const ValueMeasure1D& m, const Rational& p, const Rational& eps) {
  if (!(kZero < p && p < kOne)) throw DomainError("quantile level " + p.str() + " outside (0, 1)");
  auto lo = first_reach(m, kZero, true, p, eps);
  auto hi = first_exceed(m, kZero, true, p, eps);
  return QuantileSet{*lo, *hi};
}

bool is_atomless(const ValueMeasure1D& m) { return m.atoms().empty(); }

std::string to_string(AcRelation r) {
  switch (r) {
    case AcRelation::mutual: return "mutual";
    case AcRelation::only_1_wrt_2: return "only_1_wrt_2";
    case AcRelation::only_2_wrt_1: return "only_2_wrt_1";
    case AcRelation::neither: return "neither";
  }
  return "?";
}

AcRelation ac_relation(const ValueMeasure1D& m1, const ValueMeasure1D& m2) {
  if (!is_atomless(m1) || !is_atomless(m2))
    throw Error("AtomsPresent", "absolute-continuity relation requires density measures");
  const Portion p1 = m1.positivity_region();
  const Portion p2 = m2.positivity_region();
  const bool one_wrt_two = p1.minus(p2).length().is_zero();
  const bool two_wrt_one = p2.minus(p1).length().is_zero();
  if (one_wrt_two && two_wrt_one) return AcRelation::mutual;
  if (one_wrt_two) return AcRelation::only_1_wrt_2;
  if (two_wrt_one) return AcRelation::only_2_wrt_1;
  return AcRelation::neither;
}

bool is_positive_ae(const ValueMeasure1D& m) {
  if (!is_atomless(m)) throw Error("AtomsPresent", "positivity a.e. is defined here for density measures");
  return m.positivity_region().length() == kOne;
}

}  // namespace fairdiv
