#include "fairdiv/procedures.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace fairdiv {

namespace {

const Rational kZero(0);
const Rational kOne(1);
const Rational kHalf(1, 2);

// Interval between lo and hi with the given inclusion, empty or a point when degenerate.
Portion span(const Rational& lo, const Rational& hi, bool lo_closed, bool hi_closed) {
  if (lo < hi) return Portion::from_parts({Interval{lo, hi, lo_closed, hi_closed}}, {}, {});
  if (lo == hi && lo_closed && hi_closed) return Portion::point(lo);
  return Portion::empty();
}

std::size_t tie_pick(const std::vector<std::size_t>& candidates, TieBreak tie) {
  return tie == TieBreak::lowest_player_index ? *std::min_element(candidates.begin(), candidates.end())
                                              : *std::max_element(candidates.begin(), candidates.end());
}

std::string ordering_str(const std::vector<std::size_t>& ord) {
  std::string s;
  for (std::size_t k = 0; k < ord.size(); ++k) {
    if (k) s += "-";
    s += std::to_string(ord[k] + 1);
  }
  return s;
}

// Cdf of m restricted to [x0, x1], where no breakpoint of m lies strictly inside.
Polynomial cdf_polynomial(const ValueMeasure1D& m, const Rational& x0, const Rational& x1) {
  Polynomial f;
  for (const auto& p : m.pieces())
    if (p.lo <= x0 && x1 <= p.hi) f = p.density;
  const Polynomial F = f.antiderivative();
  return F + Polynomial::constant(cdf(m, x0) - F(x0));
}

RootEnclosure unique_median(const ValueMeasure1D& m, std::size_t player) {
  const auto q = quantile_set(m, kHalf);
  if (!q.unique()) throw MultipleMedians(player);
  return q.lo;
}

}  // namespace

std::string to_string(TieBreak t) {
  return t == TieBreak::lowest_player_index ? "lowest_player_index" : "highest_player_index";
}

TieBreak tie_break_from_string(const std::string& s) {
  if (s == "lowest_player_index" || s == "lowest") return TieBreak::lowest_player_index;
  if (s == "highest_player_index" || s == "highest") return TieBreak::highest_player_index;
  throw DomainError("unknown tie-break rule '" + s + "'");
}

const Portion& Allocation::portion_of(std::size_t player) const {
  for (const auto& p : pieces)
    if (p.player == player) return p.portion;
  throw DomainError("player " + std::to_string(player + 1) + " has no piece");
}

Allocation contiguous_allocation(const std::vector<std::size_t>& ordering, const std::vector<Rational>& cuts) {
  if (cuts.size() + 1 != ordering.size()) throw DomainError("need one cut fewer than players");
  Allocation a;
  Rational left(0);
  for (std::size_t k = 0; k < ordering.size(); ++k) {
    const Rational right = k < cuts.size() ? cuts[k] : kOne;
    if (right < left) throw DomainError("cuts must be nondecreasing");
    a.pieces.push_back(AllocationPiece{ordering[k], span(left, right, k == 0, true)});
    left = right;
  }
  for (const auto& c : cuts) a.cut_points.push_back(RootEnclosure::at(c));
  return a;
}

void validate_allocation(const Allocation& a, std::size_t n) {
  std::vector<int> seen(n, 0);
  for (const auto& p : a.pieces) {
    if (p.player >= n) throw Error("InvalidAllocation", "player index " + std::to_string(p.player + 1) + " out of range");
    if (seen[p.player]++) throw Error("InvalidAllocation", "player " + std::to_string(p.player + 1) + " appears twice");
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!seen[i]) throw Error("InvalidAllocation", "player " + std::to_string(i + 1) + " has no piece");
  Portion covered;
  for (const auto& p : a.pieces) {
    if (!covered.disjoint_from(p.portion)) throw Error("InvalidAllocation", "pieces overlap");
    covered = covered.united(p.portion);
  }
  if (!covered.complement().intervals().empty())
    throw Error("InvalidAllocation", "pieces leave " + covered.complement().str() + " unassigned");
}

std::vector<Rational> realized_values(const Allocation& a, const std::vector<ValueMeasure1D>& measures) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < measures.size(); ++i) out.push_back(measure_of(measures[i], a.portion_of(i)));
  return out;
}

// ---------------------------------------------------------------------------

ProcedureOutcome cut_and_choose(const ValueMeasure1D& reported_cutter, const ValueMeasure1D& reported_chooser,
                                const std::vector<ValueMeasure1D>& true_measures, TieBreak tie) {
  const RootEnclosure cut = unique_median(reported_cutter, 0);
  const Rational c = cut.representative();
  const Portion left = span(kZero, c, true, true), right = span(c, kOne, false, true);
  const Rational lv = measure_of(reported_chooser, left), rv = measure_of(reported_chooser, right);
  const bool chooser_left = lv > rv || (lv == rv && tie == TieBreak::lowest_player_index);
  ProcedureOutcome out;
  auto& a = out.allocation;
  a.pieces = {AllocationPiece{chooser_left ? 1u : 0u, left}, AllocationPiece{chooser_left ? 0u : 1u, right}};
  a.cut_points = {cut};
  a.trace = {"player 1 cuts at " + cut.str(),
             "player 2 values left " + lv.str() + ", right " + rv.str() + ", takes " + (chooser_left ? "left" : "right")};
  if (!true_measures.empty()) out.true_values = realized_values(a, true_measures);
  return out;
}

MovingKnifeOutcome moving_knife(const std::vector<ValueMeasure1D>& measures, TieBreak tie) {
  const std::size_t n = measures.size();
  if (n == 0) throw DomainError("moving knife needs at least one player");
  const Rational share(1, static_cast<long>(n));
  std::vector<std::size_t> remaining(n);
  std::iota(remaining.begin(), remaining.end(), 0);
  Rational left(0);
  bool left_closed = true;
  MovingKnifeOutcome out;
  auto& a = out.allocation;
  while (remaining.size() > 1) {
    std::optional<Rational> best;
    std::vector<std::size_t> at_best;
    std::optional<RootEnclosure> best_enc;
    for (const std::size_t i : remaining) {
      const auto s = first_reach(measures[i], left, left_closed, share);
      if (!s) continue;
      const Rational r = s->representative();
      if (!best || r < *best) {
        best = r;
        best_enc = s;
        at_best = {i};
      } else if (r == *best) {
        at_best.push_back(i);
      }
    }
    if (!best) {
      const std::size_t w = tie_pick(remaining, tie);
      a.trace.push_back("no remaining player reaches " + share.str() + "; player " + std::to_string(w + 1) +
                        " takes the remainder");
      a.pieces.push_back(AllocationPiece{w, span(left, kOne, left_closed, true)});
      for (const std::size_t i : remaining)
        if (i != w) a.pieces.push_back(AllocationPiece{i, Portion::empty()});
      remaining.clear();
      break;
    }
    const std::size_t w = tie_pick(at_best, tie);
    a.pieces.push_back(AllocationPiece{w, span(left, *best, left_closed, true)});
    a.cut_points.push_back(*best_enc);
    a.trace.push_back("knife stops at " + best_enc->str() + ", player " + std::to_string(w + 1) + " takes " +
                      a.pieces.back().portion.str());
    left = *best;
    left_closed = false;
    remaining.erase(std::find(remaining.begin(), remaining.end(), w));
  }
  if (remaining.size() == 1) {
    a.pieces.push_back(AllocationPiece{remaining[0], span(left, kOne, left_closed, true)});
    a.trace.push_back("player " + std::to_string(remaining[0] + 1) + " takes the remainder");
  }
  out.values = realized_values(a, measures);
  out.fair = std::all_of(out.values.begin(), out.values.end(), [&](const Rational& v) { return v >= share; });
  return out;
}

SurplusOutcome surplus_procedure(const ValueMeasure1D& g1, const ValueMeasure1D& g2,
                                 const std::vector<ValueMeasure1D>& true_measures) {
  if (!is_atomless(g1) || !is_atomless(g2)) throw Error("AtomsPresent", "surplus procedure needs atomless reports");
  const RootEnclosure m1 = unique_median(g1, 0), m2 = unique_median(g2, 1);
  const std::size_t L = m1.representative() <= m2.representative() ? 0 : 1;
  const ValueMeasure1D& gl = L == 0 ? g1 : g2;
  const ValueMeasure1D& gr = L == 0 ? g2 : g1;
  const RootEnclosure med_a = L == 0 ? m1 : m2, med_b = L == 0 ? m2 : m1;
  const Rational a = med_a.representative(), b = med_b.representative();
  SurplusOutcome out{{}, {}, med_a, L};
  if (a != b) {
    const Rational dl = cdf(gl, b) - kHalf, dr = kHalf - cdf(gr, a);
    if (dl.sign() <= 0 || dr.sign() <= 0)
      throw Error("DegenerateSurplus", "a player assigns no value between the two medians");
    std::set<Rational> grid{a, b};
    for (const auto* m : {&gl, &gr})
      for (const auto& x : m->breakpoints())
        if (a < x && x < b) grid.insert(x);
    const std::vector<Rational> xs(grid.begin(), grid.end());
    // (G_L(c) - 1/2) / dl - (1/2 - G_R(c)) / dr, increasing from -1 at a to 1 at b
    auto h = [&](const Rational& x) { return (cdf(gl, x) - kHalf) / dl - (kHalf - cdf(gr, x)) / dr; };
    for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
      if (h(xs[k + 1]).sign() < 0) continue;
      const Polynomial hp = (cdf_polynomial(gl, xs[k], xs[k + 1]) - Polynomial::constant(kHalf)) * (kOne / dl) -
                            (Polynomial::constant(kHalf) - cdf_polynomial(gr, xs[k], xs[k + 1])) * (kOne / dr);
      out.cut = first_reach_monotone(hp, xs[k], xs[k + 1], kZero, default_root_epsilon());
      break;
    }
  }
  const Rational c = out.cut.representative();
  auto& alloc = out.allocation;
  alloc.pieces = {AllocationPiece{L, span(kZero, c, true, true)}, AllocationPiece{1 - L, span(c, kOne, false, true)}};
  alloc.cut_points = {out.cut};
  alloc.trace = {"medians " + m1.str() + " and " + m2.str(), "player " + std::to_string(L + 1) + " takes [0, c], c = " + out.cut.str()};
  if (!true_measures.empty()) out.true_values = realized_values(alloc, true_measures);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct EpEval {
  bool feasible = false;
  std::vector<RootEnclosure> cuts;
  Rational h;
};

EpEval ep_eval(const std::vector<ValueMeasure1D>& ms, const std::vector<std::size_t>& ord, const Rational& t) {
  EpEval e;
  Rational c(0);
  bool closed = true;
  for (std::size_t k = 0; k + 1 < ord.size(); ++k) {
    const auto r = first_reach(ms[ord[k]], c, closed, t);
    if (!r) return e;
    e.cuts.push_back(*r);
    c = r->representative();
    closed = false;
  }
  e.feasible = true;
  e.h = t - interval_mass(ms[ord.back()], c, kOne, closed, true);
  return e;
}

// Newton step from t: exact when every density is locally constant.
std::optional<Rational> ep_linear_step(const std::vector<ValueMeasure1D>& ms, const std::vector<std::size_t>& ord,
                                       const Rational& t, const EpEval& e) {
  Rational d(0), prev(0);
  for (std::size_t k = 0; k + 1 < ord.size(); ++k) {
    if (!e.cuts[k].is_exact()) return std::nullopt;
    const Rational c = *e.cuts[k].exact;
    const Rational in = ms[ord[k]].density_right(prev), out = ms[ord[k]].density_right(c);
    if (out.is_zero()) return std::nullopt;
    d = (kOne + in * d) / out;
    prev = c;
  }
  const Rational slope = kOne + ms[ord.back()].density_right(prev) * d;
  return t - e.h / slope;
}

}  // namespace

std::optional<EquitableCuts> ep_cutpoints_for_ordering(const std::vector<ValueMeasure1D>& measures,
                                                       const std::vector<std::size_t>& ordering) {
  if (ordering.size() != measures.size() || ordering.empty()) throw DomainError("ordering must name every player once");
  auto exact = [](const Rational& t, const EpEval& e) { return EquitableCuts{e.cuts, RootEnclosure::at(t)}; };
  Rational lo(0), hi(1);
  EpEval elo = ep_eval(measures, ordering, lo), ehi = ep_eval(measures, ordering, hi);
  if (elo.feasible && elo.h.is_zero()) return std::nullopt;  // t = 0 only
  if (ehi.feasible && ehi.h.is_zero()) return exact(hi, ehi);
  auto try_step = [&](const Rational& t, const EpEval& e) -> std::optional<EquitableCuts> {
    if (!e.feasible) return std::nullopt;
    const auto s = ep_linear_step(measures, ordering, t, e);
    if (!s || !(lo < *s && *s <= hi)) return std::nullopt;
    const EpEval es = ep_eval(measures, ordering, *s);
    if (es.feasible && es.h.is_zero()) return exact(*s, es);
    return std::nullopt;
  };
  const Rational width = pow2_neg(50);
  for (int iter = 0; iter < 400 && hi - lo > width; ++iter) {
    if (auto r = try_step(lo, elo)) return r;
    if (auto r = try_step(hi, ehi)) return r;
    const Rational mid = midpoint(lo, hi);
    const EpEval em = ep_eval(measures, ordering, mid);
    if (em.feasible && em.h.is_zero()) return exact(mid, em);
    if (!em.feasible || em.h.sign() > 0) {
      hi = mid;
      ehi = em;
    } else {
      lo = mid;
      elo = em;
    }
  }
  // h is increasing in t; a root exists only if it is continuous across [lo, hi]
  if (lo.is_zero() || !ehi.feasible || ehi.h - elo.h > pow2_neg(20)) return std::nullopt;
  EquitableCuts out;
  for (std::size_t k = 0; k < elo.cuts.size(); ++k) {
    const Rational a = elo.cuts[k].lower(), b = ehi.cuts[k].upper();
    out.cuts.push_back(a == b ? RootEnclosure::at(a) : RootEnclosure::between(a, b));
  }
  out.common_value = RootEnclosure::between(lo, hi);
  return out;
}

EquitabilityOutcome equitability_procedure(const std::vector<ValueMeasure1D>& measures) {
  std::vector<std::size_t> ord(measures.size());
  std::iota(ord.begin(), ord.end(), 0);
  std::optional<EquitabilityOutcome> best;
  std::vector<std::string> infeasible;
  do {
    const auto sol = ep_cutpoints_for_ordering(measures, ord);
    if (!sol) {
      infeasible.push_back(ordering_str(ord));
      continue;
    }
    if (best && sol->common_value.representative() <= best->common_value.representative()) continue;
    std::vector<Rational> cuts;
    for (const auto& c : sol->cuts) cuts.push_back(c.representative());
    EquitabilityOutcome o{contiguous_allocation(ord, cuts), ord, sol->common_value, {}};
    o.allocation.cut_points = sol->cuts;
    best = std::move(o);
  } while (std::next_permutation(ord.begin(), ord.end()));
  if (!best) throw Error("NoFeasibleOrdering", "no ordering admits an equitable contiguous allocation");
  best->infeasible_orderings = infeasible;
  best->allocation.trace.push_back("ordering " + ordering_str(best->ordering) + ", common value " +
                                   best->common_value.str());
  for (const auto& s : infeasible) best->allocation.trace.push_back("ordering " + s + " infeasible");
  return *best;
}

}  // namespace fairdiv
