#include "fairdiv/polynomial.hpp"

#include <sstream>

namespace fairdiv {

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(static_cast<long>(i)));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::antiderivative() const {
  std::vector<Rational> a(c_.size() + 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) a[i + 1] = c_[i] / Rational(static_cast<long>(i + 1));
  return Polynomial(std::move(a));
}

Rational Polynomial::integrate(const Rational& a, const Rational& b) const {
  if (is_zero()) return Rational(0);
  const Polynomial anti = antiderivative();
  return anti(b) - anti(a);
}

Polynomial Polynomial::compose_affine(const Rational& scale, const Rational& shift) const {
  const Polynomial inner{shift, scale};
  Polynomial result;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) result = result * inner + Polynomial::constant(*it);
  return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(r));
}

Rational Polynomial::min_on(const Rational& lo, const Rational& hi) const {
  Rational m = min((*this)(lo), (*this)(hi));
  if (degree() == 2 && coefficient(2).sign() > 0) {
    const Rational vertex = -coefficient(1) / (Rational(2) * coefficient(2));
    if (lo < vertex && vertex < hi) m = min(m, (*this)(vertex));
  } else if (degree() > 2) {
    throw std::invalid_argument("min_on supports degree <= 2");
  }
  return m;
}

std::string Polynomial::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << " + ";
    os << c_[i].str();
    if (i == 1) os << "*x";
    if (i > 1) os << "*x^" << i;
  }
  return os.str();
}

std::string RootEnclosure::str() const {
  if (exact) return exact->str();
  return "[" + bracket->first.str() + ", " + bracket->second.str() + "]";
}

Rational default_root_epsilon() { return pow2_neg(40); }

namespace {

std::optional<RootEnclosure> rational_quadratic_root(const Polynomial& q, const Rational& lo, const Rational& hi) {
  // q has degree exactly 2; smallest root in (lo, hi] if rational.
  const Rational a = q.coefficient(2), b = q.coefficient(1), c = q.coefficient(0);
  const Rational disc = b * b - Rational(4) * a * c;
  if (disc.sign() < 0) return std::nullopt;
  const auto s = exact_sqrt(disc);
  if (!s) return std::nullopt;
  Rational r1 = (-b - *s) / (Rational(2) * a);
  Rational r2 = (-b + *s) / (Rational(2) * a);
  if (r2 < r1) std::swap(r1, r2);
  for (const auto& r : {r1, r2})
    if (lo < r && r <= hi) return RootEnclosure::at(r);
  return std::nullopt;
}

}  // namespace

RootEnclosure first_reach_monotone(const Polynomial& p, const Rational& lo, const Rational& hi,
                                   const Rational& target, const Rational& eps) {
  if (p(lo) >= target) return RootEnclosure::at(lo);
  const Polynomial shifted = p - Polynomial::constant(target);
  if (shifted.degree() == 1) return RootEnclosure::at(-shifted.coefficient(0) / shifted.coefficient(1));
  if (shifted.degree() == 2) {
    if (auto r = rational_quadratic_root(shifted, lo, hi)) return *r;
  }
  Rational a = lo, b = hi;
  while (b - a > eps) {
    const Rational m = midpoint(a, b);
    const Rational v = shifted(m);
    if (v.is_zero()) return RootEnclosure::at(m);
    if (v.sign() > 0) b = m; else a = m;
  }
  return RootEnclosure::between(a, b);
}

}  // namespace fairdiv
