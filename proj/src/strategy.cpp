#include "fairdiv/strategy.hpp"

#include <sstream>

#include "fairdiv/scenarios.hpp"

namespace fairdiv {

namespace {

const Rational kHalf(1, 2);

std::vector<std::pair<Rational, Rational>> point_bounds(const std::vector<Rational>& v) {
  std::vector<std::pair<Rational, Rational>> out;
  for (const auto& x : v) out.emplace_back(x, x);
  return out;
}

}  // namespace

ValueMeasure1D star_transform(const ValueMeasure1D& f) {
  if (f.max_degree() > 0)
    throw InvalidMeasure("DegreeTooHigh", "the transform needs a piecewise-constant density (piecewise-linear CDF)");
  if (!is_atomless(f)) throw Error("AtomsPresent", "the transform needs an atomless measure");
  const auto med = quantile_set(f, kHalf);
  if (!med.unique()) throw MultipleMedians(0);
  const Rational a = *med.lo.exact;
  std::vector<PolyPiece> out;
  auto emit = [&](const Rational& s, const Rational& e, const Rational& c) {
    if (!(s < e) || c.is_zero()) return;
    // F(x) = F(s) + c (x - s) on [s, e]
    const Polynomial F{cdf(f, s) - c * s, c};
    const Polynomial dev = e <= a ? Polynomial::constant(kHalf) - F : F - Polynomial::constant(kHalf);
    out.push_back(PolyPiece{s, e, dev * (Rational(4) * c)});
  };
  for (const auto& p : f.pieces()) {
    const Rational c = p.density(p.lo);
    if (p.lo < a && a < p.hi) {
      emit(p.lo, a, c);
      emit(a, p.hi, c);
    } else {
      emit(p.lo, p.hi, c);
    }
  }
  return ValueMeasure1D(out);
}

std::string to_string(Procedure p) {
  switch (p) {
    case Procedure::sp: return "sp";
    case Procedure::ep: return "ep";
    case Procedure::cut_and_choose: return "cutchoose";
    case Procedure::moving_knife: break;
  }
  return "movingknife";
}

Procedure procedure_from_string(const std::string& s) {
  if (s == "sp") return Procedure::sp;
  if (s == "ep") return Procedure::ep;
  if (s == "cutchoose" || s == "cut_and_choose") return Procedure::cut_and_choose;
  if (s == "movingknife" || s == "moving_knife") return Procedure::moving_knife;
  throw DomainError("unknown procedure '" + s + "'");
}

MisreportOutcome misreport_outcome(Procedure proc, const ReportProfile& profile) {
  const auto& rep = profile.reported;
  const auto& truth = profile.truth;
  if (rep.size() != truth.size()) throw DomainError("reported and true profiles differ in size");
  MisreportOutcome out;
  switch (proc) {
    case Procedure::sp: {
      if (rep.size() != 2) throw DomainError("the surplus procedure needs two players");
      const auto r = surplus_procedure(rep[0], rep[1], truth);
      out.allocation = r.allocation;
      out.values = r.true_values;
      out.bounds.resize(2);
      const std::size_t L = r.left_player, R = 1 - L;
      const Rational lo = r.cut.lower(), hi = r.cut.upper();
      out.bounds[L] = {cdf(truth[L], lo), cdf(truth[L], hi)};
      out.bounds[R] = {interval_mass(truth[R], hi, Rational(1), false, true),
                       interval_mass(truth[R], lo, Rational(1), false, true)};
      return out;
    }
    case Procedure::ep:
      out.allocation = equitability_procedure(rep).allocation;
      break;
    case Procedure::cut_and_choose:
      if (rep.size() != 2) throw DomainError("cut and choose needs two players");
      out.allocation = cut_and_choose(rep[0], rep[1], truth).allocation;
      break;
    case Procedure::moving_knife:
      out.allocation = moving_knife(rep).allocation;
      break;
  }
  out.values = realized_values(out.allocation, truth);
  out.bounds = point_bounds(out.values);
  return out;
}

OpponentFamily family_preset(const std::string& preset, const ValueMeasure1D& truth) {
  OpponentFamily f{preset, {}};
  if (preset == "median-grid") {
    for (long k = 1; k <= 7; ++k) f.members.push_back(scenarios::uniform_with_median(Rational(k, 8)));
  } else if (preset.rfind("median:", 0) == 0) {
    std::stringstream ss(preset.substr(7));
    std::string item;
    while (std::getline(ss, item, ',')) {
      const Rational b = Rational::parse(item);
      if (!(Rational(0) < b && b < Rational(1))) throw DomainError("median " + item + " outside (0, 1)");
      f.members.push_back(scenarios::uniform_with_median(b));
    }
  } else if (preset == "identical") {
    f.members.push_back(truth);
  } else {
    throw DomainError("unknown family preset '" + preset + "'");
  }
  if (f.members.empty()) throw DomainError("opponent family is empty");
  return f;
}

std::vector<StrategyDelta> strategy_deltas(Procedure proc, std::size_t who, const ValueMeasure1D& truth,
                                           const ValueMeasure1D& misreport, const OpponentFamily& family,
                                           std::size_t players) {
  if (family.members.empty()) throw DomainError("opponent family is empty");
  if (who >= players) throw DomainError("player index out of range");
  std::vector<StrategyDelta> out;
  for (const auto& g : family.members) {
    ReportProfile p{std::vector<ValueMeasure1D>(players, g), std::vector<ValueMeasure1D>(players, g)};
    p.truth[who] = truth;
    p.reported[who] = truth;
    const auto honest = misreport_outcome(proc, p);
    p.reported[who] = misreport;
    const auto lying = misreport_outcome(proc, p);
    StrategyDelta d{honest.values[who], lying.values[who], lying.values[who] - honest.values[who], 0};
    const Rational lo = lying.bounds[who].first - honest.bounds[who].second;
    const Rational hi = lying.bounds[who].second - honest.bounds[who].first;
    if (lo.sign() > 0) d.sign = 1;
    else if (hi.sign() < 0) d.sign = -1;
    else if (lo.is_zero() && hi.is_zero()) d.sign = 0;
    else d.sign = d.delta.sign();
    out.push_back(d);
  }
  return out;
}

StrategyVerdict assuredly_better_check(Procedure proc, std::size_t who, const ValueMeasure1D& truth,
                                       const ValueMeasure1D& misreport, const OpponentFamily& family,
                                       std::size_t players) {
  StrategyVerdict v{true, strategy_deltas(proc, who, truth, misreport, family, players)};
  for (const auto& d : v.deltas)
    if (d.sign <= 0) v.holds = false;
  return v;
}

StrategyVerdict weakly_better_check(Procedure proc, std::size_t who, const ValueMeasure1D& truth,
                                    const ValueMeasure1D& misreport, const OpponentFamily& family,
                                    std::size_t players) {
  StrategyVerdict v{false, strategy_deltas(proc, who, truth, misreport, family, players)};
  bool never_worse = true;
  for (const auto& d : v.deltas) {
    if (d.sign < 0) never_worse = false;
    if (d.sign > 0) v.holds = true;
  }
  v.holds = v.holds && never_worse;
  return v;
}

}  // namespace fairdiv
