#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fairdiv/measure.hpp"
#include "fairdiv/procedures.hpp"

namespace fairdiv {

/// Reported measure with CDF F* = 1/2 -+ 2 (1/2 - F)^2 left / right of the
/// median; density 4 |F - 1/2| f. Needs an atomless piecewise-constant F.
/// Throws MultipleMedians(0), InvalidMeasure("DegreeTooHigh"), Error("AtomsPresent").
ValueMeasure1D star_transform(const ValueMeasure1D& f);

enum class Procedure { sp, ep, cut_and_choose, moving_knife };
std::string to_string(Procedure p);
Procedure procedure_from_string(const std::string& s);

struct ReportProfile {
  std::vector<ValueMeasure1D> reported;
  std::vector<ValueMeasure1D> truth;
};

struct MisreportOutcome {
  Allocation allocation;
  /// true values, irrational cuts evaluated at their representative
  std::vector<Rational> values;
  /// enclosures of the true values over the cut brackets
  std::vector<std::pair<Rational, Rational>> bounds;
};

MisreportOutcome misreport_outcome(Procedure proc, const ReportProfile& profile);

struct OpponentFamily {
  std::string name;
  std::vector<ValueMeasure1D> members;
};

/// Presets: "median-grid" (medians k/8, k = 1..7), "median:b1,b2,...",
/// "identical" (the truthful player's own measure).
OpponentFamily family_preset(const std::string& preset, const ValueMeasure1D& truth);

struct StrategyDelta {
  Rational truthful, misreport, delta;
  /// -1, 0, +1; decided from the value enclosures when they are conclusive
  int sign;
};

struct StrategyVerdict {
  bool holds;
  std::vector<StrategyDelta> deltas;
};

/// Every other player reports the family member; player `who` reports truth
/// or the misreport. Players default to two, or more for ep and moving_knife.
std::vector<StrategyDelta> strategy_deltas(Procedure proc, std::size_t who, const ValueMeasure1D& truth,
                                           const ValueMeasure1D& misreport, const OpponentFamily& family,
                                           std::size_t players = 2);

/// Strictly better against every member.
StrategyVerdict assuredly_better_check(Procedure proc, std::size_t who, const ValueMeasure1D& truth,
                                       const ValueMeasure1D& misreport, const OpponentFamily& family,
                                       std::size_t players = 2);

/// Never worse, strictly better against some member.
StrategyVerdict weakly_better_check(Procedure proc, std::size_t who, const ValueMeasure1D& truth,
                                    const ValueMeasure1D& misreport, const OpponentFamily& family,
                                    std::size_t players = 2);

}  // namespace fairdiv
