#pragma once

#include <map>
#include <string>
#include <vector>

#include "fairdiv/fairness.hpp"
#include "fairdiv/io.hpp"
#include "fairdiv/strategy.hpp"

namespace fairdiv {

enum class ClaimStatus { confirmed, refuted, discrepancy };
std::string to_string(ClaimStatus s);
ClaimStatus claim_status_from_string(const std::string& s);

/// Values are rational strings "p/q" or symbolic labels.
using ValueMap = std::map<std::string, std::vector<std::string>>;

struct Witness {
  std::string label;
  /// portion per player, in Portion::str() form (or a rectangle description)
  std::vector<std::string> portions;
  std::vector<std::string> values;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Claim {
  std::string id;
  ClaimStatus status = ClaimStatus::confirmed;
  std::string statement;
  ValueMap computed;
  /// filled for discrepancy entries
  ValueMap stated;
  std::vector<Witness> witnesses;
  std::vector<std::string> notes;
  friend bool operator==(const Claim&, const Claim&) = default;
};

struct VerdictReport {
  std::string subject;
  std::vector<Claim> claims;

  /// No claim refuted.
  bool ok() const;
  int exit_code() const { return ok() ? 0 : 1; }
  friend bool operator==(const VerdictReport&, const VerdictReport&) = default;
};

enum class ReportFormat { json, text };
ReportFormat report_format_from_string(const std::string& s);

io::Json report_to_json(const VerdictReport& r);
VerdictReport report_from_json(const io::Json& j);
/// Deterministic: json with sorted keys, or text with one line per claim.
std::string emit_report(const VerdictReport& r, ReportFormat f);

std::vector<std::string> strs(const std::vector<Rational>& v);
Witness make_witness(const std::string& label, const Allocation& a, const std::vector<Rational>& values);

VerdictReport proportionality_report(const ProportionalityVerdict& v);
VerdictReport envy_report(const EnvyVerdict& v);
VerdictReport pareto_report(const ParetoVerdict& v, const Allocation& a, const std::vector<ValueMeasure1D>& measures,
                            ParetoClass cls);
VerdictReport strategy_report(const StrategyVerdict& v, const std::string& claim_id);

/// Scripted reproduction of reference example `id` against golden values.
/// Throws DomainError unless 1 <= id <= 10.
VerdictReport verify_example(int id);

}  // namespace fairdiv
