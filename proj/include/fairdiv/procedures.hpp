#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fairdiv/errors.hpp"
#include "fairdiv/measure.hpp"
#include "fairdiv/polynomial.hpp"
#include "fairdiv/portion.hpp"

namespace fairdiv {

enum class TieBreak { lowest_player_index, highest_player_index };
std::string to_string(TieBreak t);
TieBreak tie_break_from_string(const std::string& s);

struct AllocationPiece {
  std::size_t player;
  Portion portion;
  friend bool operator==(const AllocationPiece&, const AllocationPiece&) = default;
};

/// Assignment of disjoint portions to players. Pieces are listed in the
/// order the procedure awarded them; every player appears exactly once.
struct Allocation {
  std::vector<AllocationPiece> pieces;
  std::vector<RootEnclosure> cut_points;
  std::vector<std::string> trace;

  std::size_t players() const { return pieces.size(); }
  const Portion& portion_of(std::size_t player) const;
  friend bool operator==(const Allocation& a, const Allocation& b) {
    return a.pieces == b.pieces && a.cut_points == b.cut_points;
  }
};

/// Builds an allocation from contiguous pieces left to right: ordering[k]
/// receives the k-th piece between consecutive cuts.
Allocation contiguous_allocation(const std::vector<std::size_t>& ordering, const std::vector<Rational>& cuts);

/// Throws Error("InvalidAllocation") unless pieces are pairwise disjoint,
/// cover [0, 1] up to a finite set and name each of n players once.
void validate_allocation(const Allocation& a, std::size_t n);

/// values[i] = measures[i](portion of player i).
std::vector<Rational> realized_values(const Allocation& a, const std::vector<ValueMeasure1D>& measures);

// ---------------------------------------------------------------------------

struct ProcedureOutcome {
  Allocation allocation;
  std::vector<Rational> true_values;
};

/// Player 0 cuts at their reported median; player 1 takes the side they
/// report as weakly larger. On a tie, lowest_player_index gives the chooser
/// the left piece. Throws MultipleMedians(0).
ProcedureOutcome cut_and_choose(const ValueMeasure1D& reported_cutter, const ValueMeasure1D& reported_chooser,
                                const std::vector<ValueMeasure1D>& true_measures,
                                TieBreak tie = TieBreak::lowest_player_index);

struct MovingKnifeOutcome {
  Allocation allocation;
  std::vector<Rational> values;
  bool fair;
};

/// Dubins-Spanier moving knife with threshold 1/n per round. Slices are
/// closed at the stop point, so an atom there goes to the round winner.
/// If nobody remaining can reach 1/n, the remainder goes to the tie winner
/// and the others receive nothing.
MovingKnifeOutcome moving_knife(const std::vector<ValueMeasure1D>& measures,
                                TieBreak tie = TieBreak::lowest_player_index);

/// Surplus Procedure on reported measures g1, g2 (atomless). The player with
/// the smaller median takes [0, c]; c equalizes the two players' shares of
/// their surplus in ratio form. Throws MultipleMedians(i), Error("DegenerateSurplus").
struct SurplusOutcome {
  Allocation allocation;
  std::vector<Rational> true_values;
  RootEnclosure cut;
  std::size_t left_player;
};
SurplusOutcome surplus_procedure(const ValueMeasure1D& g1, const ValueMeasure1D& g2,
                                 const std::vector<ValueMeasure1D>& true_measures);

struct EquitableCuts {
  std::vector<RootEnclosure> cuts;
  RootEnclosure common_value;
};

/// Cuts for which ordering[k] values the k-th piece exactly t, for the unique
/// t with that property; nullopt when no t > 0 works.
std::optional<EquitableCuts> ep_cutpoints_for_ordering(const std::vector<ValueMeasure1D>& measures,
                                                       const std::vector<std::size_t>& ordering);

struct EquitabilityOutcome {
  Allocation allocation;
  std::vector<std::size_t> ordering;
  RootEnclosure common_value;
  std::vector<std::string> infeasible_orderings;
};

/// Best feasible ordering by common value; ties go to the lexicographically
/// smallest ordering. Throws Error("NoFeasibleOrdering").
EquitabilityOutcome equitability_procedure(const std::vector<ValueMeasure1D>& measures);

enum class StromquistVariant { stromquist1980, paper_example7 };
std::string to_string(StromquistVariant v);
StromquistVariant stromquist_variant_from_string(const std::string& s);

struct StromquistOutcome {
  Allocation allocation;
  Rational sword;
  std::vector<Rational> knives;
  Rational median_knife;
  std::size_t shouter;
};

/// Event-driven simulation of the four-knife procedure for three players with
/// piecewise-constant densities. stromquist1980: a player shouts once the
/// left piece is worth at least both pieces the median knife would make;
/// paper_example7: a player shouts once the left piece reaches 1/3.
/// Throws Error("UnsupportedDensityDegree").
StromquistOutcome stromquist(const std::vector<ValueMeasure1D>& measures, StromquistVariant variant,
                             TieBreak tie = TieBreak::lowest_player_index);

}  // namespace fairdiv
