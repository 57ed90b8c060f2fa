#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fairdiv/errors.hpp"
#include "fairdiv/polynomial.hpp"
#include "fairdiv/portion.hpp"
#include "fairdiv/rational.hpp"

namespace fairdiv {

/// Density polynomial (degree <= 2) on [lo, hi], nonnegative there.
struct PolyPiece {
  Rational lo, hi;
  Polynomial density;

  friend bool operator==(const PolyPiece&, const PolyPiece&) = default;
};

struct Atom {
  Rational at;
  Rational mass;

  friend bool operator==(const Atom&, const Atom&) = default;
};

inline constexpr int kMaxDensityDegree = 2;

/// A normalized value measure on [0, 1]: piecewise-polynomial density plus
/// finitely many atoms. Validated on construction; immutable afterwards.
class ValueMeasure1D {
public:
  /// Throws InvalidMeasure with code MassNotOne, NegativeDensity,
  /// OverlappingPieces, OutOfRange, DegreeTooHigh or BadAtom.
  ValueMeasure1D(std::vector<PolyPiece> pieces, std::vector<Atom> atoms = {});

  /// Pieces may overlap; densities on the common refinement are summed and
  /// atoms at the same location merged.
  static ValueMeasure1D from_overlapping(const std::vector<PolyPiece>& pieces, const std::vector<Atom>& atoms);
  static ValueMeasure1D uniform();
  /// Uniform on [lo, hi].
  static ValueMeasure1D uniform_on(const Rational& lo, const Rational& hi);
  /// Constant density values[k] on [breaks[k], breaks[k+1]].
  static ValueMeasure1D piecewise_constant(const std::vector<Rational>& breaks, const std::vector<Rational>& values);

  const std::vector<PolyPiece>& pieces() const { return pieces_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  int max_degree() const;

  /// Atom mass at x (0 if none).
  Rational atom_mass(const Rational& x) const;
  /// Density limit from the right / left at x (0 outside the support).
  Rational density_right(const Rational& x) const;
  Rational density_left(const Rational& x) const;
  /// Piece endpoints and atom locations together with 0 and 1.
  std::vector<Rational> breakpoints() const;
  /// Where the density is positive, as a union of open intervals; exact up
  /// to the finitely many zeros of the density polynomials.
  Portion positivity_region() const;

  std::string str() const;
  friend bool operator==(const ValueMeasure1D&, const ValueMeasure1D&) = default;

private:
  ValueMeasure1D() = default;
  std::vector<PolyPiece> pieces_;
  std::vector<Atom> atoms_;
};

Rational measure_of(const ValueMeasure1D& m, const Portion& p);
/// Mass of the interval between a and b with the given endpoint inclusion.
Rational interval_mass(const ValueMeasure1D& m, const Rational& a, const Rational& b, bool a_closed = true,
                       bool b_closed = true);

/// Value of [0, x]. Throws DomainError outside [0, 1].
Rational cdf(const ValueMeasure1D& m, const Rational& x);

/// inf{x >= from : m(I(from, x)) >= target} where I is [from, x] or (from, x]
/// depending on from_closed; nullopt if the remaining mass never reaches it.
std::optional<RootEnclosure> first_reach(const ValueMeasure1D& m, const Rational& from, bool from_closed,
                                         const Rational& target, const Rational& eps = default_root_epsilon());
/// inf{x >= from : m(I(from, x)) > target}.
std::optional<RootEnclosure> first_exceed(const ValueMeasure1D& m, const Rational& from, bool from_closed,
                                          const Rational& target, const Rational& eps = default_root_epsilon());

struct QuantileSet {
  RootEnclosure lo, hi;
  bool unique() const { return lo == hi; }
};

/// lo = inf{x : cdf >= p}, hi = sup{x : cdf <= p}, for 0 < p < 1.
QuantileSet quantile_set(const ValueMeasure1D& m, const Rational& p, const Rational& eps = default_root_epsilon());

bool is_atomless(const ValueMeasure1D& m);

enum class AcRelation { mutual, only_1_wrt_2, only_2_wrt_1, neither };
std::string to_string(AcRelation r);

/// Absolute-continuity relation between two density measures. Throws
/// Error("AtomsPresent") when either has atoms.
AcRelation ac_relation(const ValueMeasure1D& m1, const ValueMeasure1D& m2);

/// Density positive on [0, 1] minus a finite set. Throws on atoms.
bool is_positive_ae(const ValueMeasure1D& m);

}  // namespace fairdiv
