#pragma once

#include <vector>

#include "fairdiv/rational.hpp"

namespace fairdiv {

enum class Sense { le, eq, ge };

struct Constraint {
  std::vector<Rational> coeffs;
  Sense sense;
  Rational rhs;
};

/// maximize objective . x subject to constraints, x >= 0.
struct LinearProgram {
  std::size_t variables = 0;
  std::vector<Rational> objective;
  std::vector<Constraint> constraints;

  std::size_t add_variable(const Rational& cost = Rational(0));
  void add_constraint(std::vector<Rational> coeffs, Sense s, const Rational& rhs);
};

enum class LpStatus { optimal, unbounded, infeasible };

struct LpResult {
  LpStatus status;
  Rational value;
  std::vector<Rational> x;
};

/// Two-phase tableau simplex in exact arithmetic, Bland's rule throughout.
LpResult simplex_solve(const LinearProgram& lp);

}  // namespace fairdiv
