#include <algorithm>
#include <array>
#include <set>

#include "fairdiv/procedures.hpp"

namespace fairdiv {

namespace {

const Rational kZero(0);
const Rational kOne(1);
const Rational kThird(1, 3);

struct Knife {
  Rational pos;
  Rational slope;
};

struct SwordState {
  Rational x;
  std::array<Knife, 3> knives;
  Rational median() const {
    std::array<Rational, 3> p{knives[0].pos, knives[1].pos, knives[2].pos};
    std::sort(p.begin(), p.end());
    return p[1];
  }
};

// Linear function g0 + g1 * d.
struct Lin {
  Rational g0, g1;
};

// {d in [0, cap] : g(d) >= 0} for every g; nullopt when empty.
std::optional<std::pair<Rational, Rational>> nonneg_set(const std::vector<Lin>& gs, const Rational& cap) {
  Rational lo(0), hi = cap;
  for (const auto& g : gs) {
    if (g.g1.is_zero()) {
      if (g.g0.sign() < 0) return std::nullopt;
      continue;
    }
    const Rational root = -g.g0 / g.g1;
    if (g.g1.sign() > 0) lo = max(lo, root);
    else hi = min(hi, root);
  }
  if (hi < lo) return std::nullopt;
  return std::make_pair(lo, hi);
}

class Sword {
public:
  Sword(const std::vector<ValueMeasure1D>& ms, StromquistVariant v) : ms_(ms), variant_(v) {
    for (const auto& m : ms)
      for (const auto& b : m.breakpoints()) breaks_.insert(b);
  }

  Knife knife(std::size_t j, const Rational& x, bool right_limit) const {
    const auto& m = ms_[j];
    const Rational half = interval_mass(m, x, kOne, true, true) / Rational(2);
    if (half.is_zero()) return Knife{x, kZero};
    const Rational rho = m.density_right(x);
    const bool jump_side = right_limit && rho.sign() > 0;
    const auto r = jump_side ? first_exceed(m, x, true, half) : first_reach(m, x, true, half);
    const Rational pos = *r->exact;
    const Rational out = m.density_right(pos);
    return Knife{pos, rho.sign() > 0 && out.sign() > 0 ? rho / (Rational(2) * out) : kZero};
  }

  SwordState state(const Rational& x, bool right_limit) const {
    SwordState s{x, {}};
    for (std::size_t j = 0; j < 3; ++j) s.knives[j] = knife(j, x, right_limit);
    return s;
  }

  // Median knife as position and slope; ties broken by slope then index.
  static Knife median_knife(const SwordState& s) {
    std::array<std::size_t, 3> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      if (s.knives[a].pos != s.knives[b].pos) return s.knives[a].pos < s.knives[b].pos;
      if (s.knives[a].slope != s.knives[b].slope) return s.knives[a].slope < s.knives[b].slope;
      return a < b;
    });
    return s.knives[idx[1]];
  }

  // Shout conditions of player i over d in [0, cell], linearized at s.
  std::vector<Lin> conditions(std::size_t i, const SwordState& s) const {
    const auto& m = ms_[i];
    const Knife med = median_knife(s);
    const Rational vx = cdf(m, s.x), vm = cdf(m, med.pos);
    const Rational rx = m.density_right(s.x), rm = m.density_right(med.pos);
    const Lin left{vx, rx};
    if (variant_ == StromquistVariant::paper_example7) return {Lin{vx - kThird, rx}};
    const Lin mid{vm - vx, rm * med.slope - rx};
    const Lin right{kOne - vm, -rm * med.slope};
    return {Lin{left.g0 - mid.g0, left.g1 - mid.g1}, Lin{left.g0 - right.g0, left.g1 - right.g1}};
  }

  std::vector<std::size_t> shouters(const SwordState& s) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < 3; ++i) {
      const auto gs = conditions(i, s);
      if (std::all_of(gs.begin(), gs.end(), [](const Lin& g) { return g.g0.sign() >= 0; })) out.push_back(i);
    }
    return out;
  }

  // Largest step keeping x and every knife inside one linear cell, with no crossings.
  Rational cell(const SwordState& s) const {
    auto next_after = [&](const Rational& v) -> std::optional<Rational> {
      const auto it = breaks_.upper_bound(v);
      if (it == breaks_.end()) return std::nullopt;
      return *it;
    };
    Rational d = *next_after(s.x) - s.x;
    for (const auto& k : s.knives) {
      if (k.slope.sign() <= 0) continue;
      if (const auto b = next_after(k.pos)) d = min(d, (*b - k.pos) / k.slope);
    }
    for (const auto& a : s.knives)
      for (const auto& b : s.knives)
        if (a.pos < b.pos && a.slope > b.slope) d = min(d, (b.pos - a.pos) / (a.slope - b.slope));
    return d;
  }

private:
  const std::vector<ValueMeasure1D>& ms_;
  StromquistVariant variant_;
  std::set<Rational> breaks_;
};

std::size_t pick(const std::vector<std::size_t>& c, TieBreak tie) {
  return tie == TieBreak::lowest_player_index ? c.front() : c.back();
}

}  // namespace

std::string to_string(StromquistVariant v) {
  return v == StromquistVariant::stromquist1980 ? "stromquist1980" : "paper_example7";
}

StromquistVariant stromquist_variant_from_string(const std::string& s) {
  if (s == "stromquist1980") return StromquistVariant::stromquist1980;
  if (s == "paper_example7") return StromquistVariant::paper_example7;
  throw DomainError("unknown Stromquist variant '" + s + "'");
}

StromquistOutcome stromquist(const std::vector<ValueMeasure1D>& measures, StromquistVariant variant, TieBreak tie) {
  if (measures.size() != 3) throw DomainError("the four-knife procedure needs exactly three players");
  for (std::size_t i = 0; i < 3; ++i) {
    if (measures[i].max_degree() > 0)
      throw Error("UnsupportedDensityDegree",
                  "player " + std::to_string(i + 1) + " has a non-constant density piece");
    if (!is_atomless(measures[i])) throw Error("AtomsPresent", "player " + std::to_string(i + 1) + " has atoms");
  }
  const Sword sword(measures, variant);
  std::vector<std::string> trace;
  auto finish = [&](const SwordState& s, std::vector<std::size_t> shout) {
    std::sort(shout.begin(), shout.end());
    const std::size_t who = pick(shout, tie);
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < 3; ++i)
      if (i != who) rest.push_back(i);
    const Rational& kj = s.knives[rest[0]].pos;
    const Rational& kk = s.knives[rest[1]].pos;
    std::size_t middle = kj < kk ? rest[0] : kk < kj ? rest[1] : pick(rest, tie);
    const std::size_t last = middle == rest[0] ? rest[1] : rest[0];
    const Rational m = s.median();
    StromquistOutcome out{{}, s.x, {s.knives[0].pos, s.knives[1].pos, s.knives[2].pos}, m, who};
    auto& a = out.allocation;
    a.pieces = {AllocationPiece{who, Portion::closed(kZero, s.x)},
                AllocationPiece{middle, s.x < m ? Portion::open_closed(s.x, m) : Portion::empty()},
                AllocationPiece{last, m < kOne ? Portion::open_closed(m, kOne) : Portion::empty()}};
    if (s.x.is_zero()) a.pieces[0].portion = Portion::point(kZero);
    a.cut_points = {RootEnclosure::at(s.x), RootEnclosure::at(m)};
    trace.push_back("player " + std::to_string(who + 1) + " shouts at x = " + s.x.str() + ", knives " +
                    s.knives[0].pos.str() + ", " + s.knives[1].pos.str() + ", " + s.knives[2].pos.str());
    a.trace = trace;
    return out;
  };

  Rational x(0);
  for (int step = 0; step < 100000; ++step) {
    const SwordState here = sword.state(x, false);
    if (auto s = sword.shouters(here); !s.empty()) return finish(here, s);
    if (x == kOne) break;
    const SwordState limit = sword.state(x, true);
    const Rational d = sword.cell(limit);
    std::optional<Rational> first;
    std::vector<std::size_t> at_zero;
    for (std::size_t i = 0; i < 3; ++i) {
      const auto set = nonneg_set(sword.conditions(i, limit), d);
      if (!set || set->first == d) continue;
      if (set->first.is_zero() && set->second.is_zero()) continue;
      if (set->first.is_zero()) at_zero.push_back(i);
      if (!first || set->first < *first) first = set->first;
    }
    if (first && first->is_zero()) return finish(limit, at_zero);
    if (first) {
      const SwordState at = sword.state(x + *first, false);
      auto s = sword.shouters(at);
      if (s.empty()) throw std::logic_error("shout event without a shouter");
      return finish(at, s);
    }
    trace.push_back("sword passes " + x.str() + " -> " + (x + d).str());
    x += d;
  }
  throw std::logic_error("sword reached the end without a shout");
}

}  // namespace fairdiv
