#include "fairdiv/fairness.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace fairdiv {

namespace {

const Rational kZero(0);
const Rational kOne(1);

std::vector<Rational> own_values(const Allocation& a, const std::vector<ValueMeasure1D>& measures) {
  return realized_values(a, measures);
}

bool nondecreasing_next(std::vector<std::size_t>& idx, std::size_t limit) {
  // next nondecreasing tuple over [0, limit)
  for (std::size_t k = idx.size(); k-- > 0;) {
    if (idx[k] + 1 < limit) {
      ++idx[k];
      for (std::size_t j = k + 1; j < idx.size(); ++j) idx[j] = idx[k];
      return true;
    }
  }
  return false;
}

}  // namespace

ProportionalityVerdict proportionality_check(const Allocation& a, const std::vector<ValueMeasure1D>& measures) {
  ProportionalityVerdict v{own_values(a, measures), Rational(1, static_cast<long>(measures.size())), true};
  for (const auto& x : v.values)
    if (x < v.share) v.pass = false;
  return v;
}

EnvyVerdict envy_check(const Allocation& a, const std::vector<ValueMeasure1D>& measures) {
  const std::size_t n = measures.size();
  EnvyVerdict v;
  v.matrix.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) v.matrix[i][j] = measure_of(measures[i], a.portion_of(j));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (v.matrix[i][j] > v.matrix[i][i]) v.envies.push_back(Envy{i, j, v.matrix[i][i], v.matrix[i][j]});
  return v;
}

std::string to_string(DominanceKind k) {
  switch (k) {
    case DominanceKind::strict_for_all: return "strict_for_all";
    case DominanceKind::pareto_improvement: return "pareto_improvement";
    case DominanceKind::none: break;
  }
  return "none";
}

DominanceVerdict classify_deltas(std::vector<Rational> deltas) {
  const bool all_pos = std::all_of(deltas.begin(), deltas.end(), [](const Rational& d) { return d.sign() > 0; });
  const bool all_nonneg = std::all_of(deltas.begin(), deltas.end(), [](const Rational& d) { return d.sign() >= 0; });
  const bool some_pos = std::any_of(deltas.begin(), deltas.end(), [](const Rational& d) { return d.sign() > 0; });
  DominanceKind k = DominanceKind::none;
  if (!deltas.empty() && all_pos) k = DominanceKind::strict_for_all;
  else if (all_nonneg && some_pos) k = DominanceKind::pareto_improvement;
  return DominanceVerdict{k, std::move(deltas)};
}

DominanceVerdict dominates(const Allocation& candidate, const Allocation& incumbent,
                           const std::vector<ValueMeasure1D>& measures) {
  const auto c = own_values(candidate, measures), o = own_values(incumbent, measures);
  std::vector<Rational> d;
  for (std::size_t i = 0; i < c.size(); ++i) d.push_back(c[i] - o[i]);
  return classify_deltas(std::move(d));
}

CellDecomposition decompose(const std::vector<ValueMeasure1D>& measures, const Allocation* a,
                            const std::vector<Rational>& extra) {
  std::set<Rational> pts{kZero, kOne};
  for (const auto& m : measures)
    for (const auto& b : m.breakpoints()) pts.insert(b);
  if (a)
    for (const auto& p : a->pieces)
      for (const auto& c : p.portion.critical_points()) pts.insert(c);
  for (const auto& x : extra)
    if (kZero <= x && x <= kOne) pts.insert(x);
  CellDecomposition cd;
  cd.breakpoints.assign(pts.begin(), pts.end());
  cd.values.assign(measures.size(), {});
  for (std::size_t k = 0; k < cd.cells(); ++k) {
    for (std::size_t i = 0; i < measures.size(); ++i)
      cd.values[i].push_back(interval_mass(measures[i], cd.lo(k), cd.hi(k), false, false));
    std::optional<std::size_t> owner;
    if (a) {
      const Rational mid = midpoint(cd.lo(k), cd.hi(k));
      for (const auto& p : a->pieces)
        if (p.portion.contains(mid)) owner = p.player;
    }
    cd.owner.push_back(owner);
  }
  return cd;
}

Allocation materialize(const CellDecomposition& cd, const std::vector<std::vector<Rational>>& fractions) {
  const std::size_t n = fractions.size();
  std::vector<Portion> parts(n);
  for (std::size_t k = 0; k < cd.cells(); ++k) {
    const Rational len = cd.hi(k) - cd.lo(k);
    Rational at = cd.lo(k);
    std::size_t last = n;
    for (std::size_t i = 0; i < n; ++i)
      if (fractions[i][k].sign() > 0) last = i;
    for (std::size_t i = 0; i < n; ++i) {
      if (fractions[i][k].sign() <= 0) continue;
      const Rational to = i == last ? cd.hi(k) : at + fractions[i][k] * len;
      if (at < to) parts[i] = parts[i].united(Portion::closed_open(at, to));
      at = to;
    }
  }
  Allocation a;
  for (std::size_t i = 0; i < n; ++i) a.pieces.push_back(AllocationPiece{i, parts[i]});
  return a;
}

std::string to_string(ParetoClass c) { return c == ParetoClass::unrestricted ? "unrestricted" : "contiguous"; }

ParetoClass pareto_class_from_string(const std::string& s) {
  if (s == "unrestricted") return ParetoClass::unrestricted;
  if (s == "contiguous") return ParetoClass::contiguous;
  throw DomainError("unknown allocation class '" + s + "'");
}

std::string to_string(ParetoStatus s) {
  switch (s) {
    case ParetoStatus::strongly_po: return "strongly_PO";
    case ParetoStatus::weakly_po_not_strongly: return "weakly_PO_not_strongly";
    case ParetoStatus::not_weakly_po: break;
  }
  return "not_weakly_PO";
}

namespace {

struct ImprovementLp {
  LpResult result;
  std::vector<std::vector<Rational>> fractions;
};

// weak: maximize m with every value >= old + m; strong: maximize sum t_i with value_i >= old_i + t_i.
ImprovementLp improvement_lp(const CellDecomposition& cd, const std::vector<Rational>& old, bool strong) {
  const std::size_t n = old.size(), K = cd.cells();
  LinearProgram lp;
  for (std::size_t v = 0; v < n * K; ++v) lp.add_variable();
  std::vector<std::size_t> gain;
  if (strong) {
    for (std::size_t i = 0; i < n; ++i) gain.push_back(lp.add_variable(kOne));
  } else {
    gain.assign(n, lp.add_variable(kOne));
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> row(lp.variables);
    for (std::size_t k = 0; k < K; ++k) row[i * K + k] = cd.values[i][k];
    row[gain[i]] = Rational(-1);
    lp.add_constraint(row, Sense::ge, old[i]);
  }
  for (std::size_t k = 0; k < K; ++k) {
    std::vector<Rational> row(lp.variables);
    for (std::size_t i = 0; i < n; ++i) row[i * K + k] = kOne;
    lp.add_constraint(row, Sense::eq, kOne);
  }
  ImprovementLp out{simplex_solve(lp), {}};
  if (out.result.status == LpStatus::optimal) {
    out.fractions.assign(n, std::vector<Rational>(K));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < K; ++k) out.fractions[i][k] = out.result.x[i * K + k];
  }
  return out;
}

// Materializes an LP solution, refining the cells until the witness verifies.
std::optional<std::pair<Allocation, DominanceVerdict>> lp_witness(const std::vector<ValueMeasure1D>& measures,
                                                                  const Allocation& a, bool strong,
                                                                  DominanceKind wanted, int rounds) {
  std::vector<Rational> extra;
  for (int round = 0; round < rounds; ++round) {
    const auto cd = decompose(measures, &a, extra);
    const auto lp = improvement_lp(cd, own_values(a, measures), strong);
    if (lp.result.status != LpStatus::optimal || lp.result.value.sign() <= 0) return std::nullopt;
    Allocation w = materialize(cd, lp.fractions);
    const auto d = dominates(w, a, measures);
    if (d.kind == wanted || (wanted == DominanceKind::pareto_improvement && d.kind == DominanceKind::strict_for_all))
      return std::make_pair(std::move(w), d);
    for (std::size_t k = 0; k < cd.cells(); ++k) extra.push_back(midpoint(cd.lo(k), cd.hi(k)));
  }
  return std::nullopt;
}

ParetoVerdict unrestricted(const Allocation& a, const std::vector<ValueMeasure1D>& measures) {
  for (const auto& m : measures)
    if (!is_atomless(m)) throw Error("AtomsPresent", "the unrestricted Pareto test needs atomless measures");
  const auto cd = decompose(measures, &a);
  const auto old = own_values(a, measures);
  const auto weak = improvement_lp(cd, old, false);
  const auto strong = improvement_lp(cd, old, true);
  ParetoVerdict v{ParetoStatus::strongly_po, std::nullopt, std::nullopt, weak.result.value, strong.result.value, true, {}};
  const bool constant = std::all_of(measures.begin(), measures.end(), [](const ValueMeasure1D& m) { return m.max_degree() <= 0; });
  // left-aligned shares are exact for constant densities, so refinement only helps otherwise
  const int rounds = constant ? 1 : 6;
  if (weak.result.value.sign() > 0) {
    v.status = ParetoStatus::not_weakly_po;
    auto w = lp_witness(measures, a, true, DominanceKind::strict_for_all, 1);
    if (!w) w = lp_witness(measures, a, false, DominanceKind::strict_for_all, rounds);
    if (w) {
      v.witness = w->first;
      v.witness_dominance = w->second;
    }
  } else if (strong.result.value.sign() > 0) {
    v.status = ParetoStatus::weakly_po_not_strongly;
    if (auto w = lp_witness(measures, a, true, DominanceKind::pareto_improvement, rounds)) {
      v.witness = w->first;
      v.witness_dominance = w->second;
    }
  }
  if (v.status != ParetoStatus::strongly_po && !v.witness)
    v.notes.push_back("improvement exists but no interval witness verified after refinement");
  if (!constant) {
    v.complete = false;
    v.notes.push_back("non-constant densities: cell shares are valued proportionally, so a zero optimum is relative to the decomposition");
  }
  v.notes.push_back("cells: " + std::to_string(cd.cells()));
  return v;
}

ParetoVerdict contiguous(const Allocation& a, const std::vector<ValueMeasure1D>& measures, int grid_refine) {
  const std::size_t n = measures.size();
  const auto base = decompose(measures, &a).breakpoints;
  const long parts = 1L << (grid_refine + 1);
  std::vector<Rational> grid;
  for (std::size_t k = 0; k + 1 < base.size(); ++k)
    for (long j = 0; j < parts; ++j) grid.push_back(base[k] + (base[k + 1] - base[k]) * Rational(j, parts));
  grid.push_back(kOne);
  std::optional<std::pair<Allocation, DominanceVerdict>> strict, weak;
  std::vector<std::size_t> ord(n);
  std::iota(ord.begin(), ord.end(), 0);
  do {
    std::vector<std::size_t> idx(n - 1, 0);
    do {
      std::vector<Rational> cuts;
      for (const auto i : idx) cuts.push_back(grid[i]);
      Allocation cand = contiguous_allocation(ord, cuts);
      const auto d = dominates(cand, a, measures);
      if (d.kind == DominanceKind::strict_for_all) {
        strict = std::make_pair(std::move(cand), d);
        break;
      }
      if (d.kind == DominanceKind::pareto_improvement && !weak) weak = std::make_pair(std::move(cand), d);
    } while (!idx.empty() && nondecreasing_next(idx, grid.size()));
  } while (!strict && std::next_permutation(ord.begin(), ord.end()));
  ParetoVerdict v{ParetoStatus::strongly_po, std::nullopt, std::nullopt, std::nullopt, std::nullopt, false, {}};
  const auto& found = strict ? strict : weak;
  if (found) {
    v.status = strict ? ParetoStatus::not_weakly_po : ParetoStatus::weakly_po_not_strongly;
    v.witness = found->first;
    v.witness_dominance = found->second;
  }
  v.notes.push_back("contiguous search over " + std::to_string(grid.size()) +
                    " grid points; complete only relative to this grid");
  return v;
}

}  // namespace

ParetoVerdict pareto_optimal(const Allocation& a, const std::vector<ValueMeasure1D>& measures, ParetoClass cls,
                             int grid_refine) {
  validate_allocation(a, measures.size());
  return cls == ParetoClass::unrestricted ? unrestricted(a, measures) : contiguous(a, measures, grid_refine);
}

}  // namespace fairdiv
