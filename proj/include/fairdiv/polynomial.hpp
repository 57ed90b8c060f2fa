#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fairdiv/rational.hpp"

namespace fairdiv {

/// Dense univariate polynomial with rational coefficients, lowest degree first.
/// Trailing zero coefficients are trimmed; the zero polynomial has no terms.
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Polynomial constant(const Rational& v) { return Polynomial{v}; }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  Rational operator()(const Rational& x) const;

  Polynomial derivative() const;
  /// Antiderivative with zero constant term.
  Polynomial antiderivative() const;
  /// Integral over [a, b].
  Rational integrate(const Rational& a, const Rational& b) const;
  /// p(scale * x + shift)
  Polynomial compose_affine(const Rational& scale, const Rational& shift) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Minimum of p over the closed interval [lo, hi]; exact for degree <= 2.
  Rational min_on(const Rational& lo, const Rational& hi) const;

  std::string str() const;

private:
  void trim();
  std::vector<Rational> c_;
};

/// Location of a root: either an exact rational or a rational bracket of
/// bounded width that provably contains it.
struct RootEnclosure {
  std::optional<Rational> exact;
  std::optional<std::pair<Rational, Rational>> bracket;

  static RootEnclosure at(const Rational& x) { return RootEnclosure{x, std::nullopt}; }
  static RootEnclosure between(const Rational& lo, const Rational& hi) {
    return RootEnclosure{std::nullopt, std::make_pair(lo, hi)};
  }

  bool is_exact() const { return exact.has_value(); }
  Rational lower() const { return exact ? *exact : bracket->first; }
  Rational upper() const { return exact ? *exact : bracket->second; }
  /// The exact value, or the bracket midpoint.
  Rational representative() const { return exact ? *exact : midpoint(bracket->first, bracket->second); }
  std::string str() const;

  friend bool operator==(const RootEnclosure& a, const RootEnclosure& b) {
    return a.exact == b.exact && a.bracket == b.bracket;
  }
};

/// Default bracket width for irrational roots.
Rational default_root_epsilon();

/// Smallest x in [lo, hi] with p(x) >= target, for p nondecreasing on
/// [lo, hi] and p(hi) >= target. Exact when the root is rational and
/// deg p <= 2, a bracket of width <= eps otherwise.
RootEnclosure first_reach_monotone(const Polynomial& p, const Rational& lo, const Rational& hi,
                                   const Rational& target, const Rational& eps);

}  // namespace fairdiv
