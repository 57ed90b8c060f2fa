#include "fairdiv/lp.hpp"

#include <optional>

#include "fairdiv/errors.hpp"

namespace fairdiv {

std::size_t LinearProgram::add_variable(const Rational& cost) {
  objective.push_back(cost);
  for (auto& c : constraints) c.coeffs.resize(variables + 1);
  return variables++;
}

void LinearProgram::add_constraint(std::vector<Rational> coeffs, Sense s, const Rational& rhs) {
  coeffs.resize(variables);
  constraints.push_back(Constraint{std::move(coeffs), s, rhs});
}

namespace {

class Tableau {
public:
  // rows: coefficient rows over all columns, rhs last
  std::vector<std::vector<Rational>> rows;
  std::vector<std::size_t> basis;
  std::size_t columns = 0;

  void pivot(std::size_t r, std::size_t c) {
    auto& pr = rows[r];
    const Rational inv = Rational(1) / pr[c];
    for (auto& v : pr) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = 0; j <= columns; ++j)
        if (!pr[j].is_zero()) rows[i][j] -= f * pr[j];
    }
    basis[r] = c;
  }

  // Maximizes cost . x over the allowed columns; false when unbounded.
  bool optimize(const std::vector<Rational>& cost, const std::vector<bool>& allowed) {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < columns && !enter; ++j) {
        if (!allowed[j]) continue;
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < rows.size(); ++i)
          if (!rows[i][j].is_zero()) reduced -= cost[basis[i]] * rows[i][j];
        if (reduced.sign() > 0) enter = j;
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][*enter].sign() <= 0) continue;
        const Rational ratio = rows[i][columns] / rows[i][*enter];
        if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

  Rational value(const std::vector<Rational>& cost) const {
    Rational v(0);
    for (std::size_t i = 0; i < rows.size(); ++i) v += cost[basis[i]] * rows[i][columns];
    return v;
  }
};

}  // namespace

LpResult simplex_solve(const LinearProgram& lp) {
  const std::size_t n = lp.variables;
  const std::size_t m = lp.constraints.size();
  if (lp.objective.size() != n) throw DomainError("objective length differs from variable count");
  std::size_t slack_count = 0;
  for (const auto& c : lp.constraints) {
    if (c.coeffs.size() != n) throw DomainError("constraint length differs from variable count");
    if (c.sense != Sense::eq) ++slack_count;
  }
  // columns: originals | slacks and surpluses | artificials (one per row)
  const std::size_t first_art = n + slack_count;
  Tableau t;
  t.columns = first_art + m;
  t.rows.assign(m, std::vector<Rational>(t.columns + 1));
  t.basis.assign(m, 0);
  std::size_t slack = n;
  std::vector<bool> needs_art(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = lp.constraints[i];
    const bool flip = c.rhs.sign() < 0;
    const Rational s = flip ? Rational(-1) : Rational(1);
    for (std::size_t j = 0; j < n; ++j) t.rows[i][j] = s * c.coeffs[j];
    t.rows[i][t.columns] = s * c.rhs;
    Sense sense = c.sense;
    if (flip && sense != Sense::eq) sense = sense == Sense::le ? Sense::ge : Sense::le;
    if (c.sense != Sense::eq) {
      t.rows[i][slack] = sense == Sense::le ? Rational(1) : Rational(-1);
      if (sense == Sense::le) {
        t.basis[i] = slack;
      } else {
        needs_art[i] = true;
      }
      ++slack;
    } else {
      needs_art[i] = true;
    }
    if (needs_art[i]) {
      t.rows[i][first_art + i] = Rational(1);
      t.basis[i] = first_art + i;
    }
  }

  std::vector<bool> all(t.columns, true);
  std::vector<Rational> phase1(t.columns);
  for (std::size_t i = 0; i < m; ++i)
    if (needs_art[i]) phase1[first_art + i] = Rational(-1);
  t.optimize(phase1, all);
  if (t.value(phase1).sign() < 0) return LpResult{LpStatus::infeasible, Rational(0), {}};

  // drive remaining artificials out of the basis; drop redundant rows
  for (std::size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < first_art) {
      ++i;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < first_art && !col; ++j)
      if (!t.rows[i][j].is_zero()) col = j;
    if (col) {
      t.pivot(i, *col);
      ++i;
    } else {
      t.rows.erase(t.rows.begin() + static_cast<long>(i));
      t.basis.erase(t.basis.begin() + static_cast<long>(i));
    }
  }

  std::vector<bool> real(t.columns, false);
  for (std::size_t j = 0; j < first_art; ++j) real[j] = true;
  std::vector<Rational> phase2(t.columns);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = lp.objective[j];
  if (!t.optimize(phase2, real)) return LpResult{LpStatus::unbounded, Rational(0), {}};
  LpResult out{LpStatus::optimal, t.value(phase2), std::vector<Rational>(n)};
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    if (t.basis[i] < n) out.x[t.basis[i]] = t.rows[i][t.columns];
  return out;
}

}  // namespace fairdiv
