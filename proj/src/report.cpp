#include "fairdiv/report.hpp"

#include <sstream>

namespace fairdiv {

namespace {

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::string map_text(const ValueMap& m) {
  std::vector<std::string> parts;
  for (const auto& [k, v] : m) parts.push_back(k + "=" + join(v, ","));
  return join(parts, "; ");
}

io::Json map_to_json(const ValueMap& m) {
  io::Json out = io::Json::object();
  for (const auto& [k, v] : m) out[k] = v;
  return out;
}

std::vector<std::string> string_list(const io::Json& j, const std::string& path) {
  if (!j.is_array()) throw io::InputError("WrongType", path, "expected an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw io::InputError("WrongType", path, "expected an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

ValueMap map_from_json(const io::Json& j, const std::string& path) {
  if (!j.is_object()) throw io::InputError("WrongType", path, "expected an object");
  ValueMap m;
  for (const auto& [k, v] : j.items()) m[k] = string_list(v, path + "/" + k);
  return m;
}

}  // namespace

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::confirmed: return "confirmed";
    case ClaimStatus::refuted: return "refuted";
    case ClaimStatus::discrepancy: break;
  }
  return "discrepancy";
}

ClaimStatus claim_status_from_string(const std::string& s) {
  if (s == "confirmed") return ClaimStatus::confirmed;
  if (s == "refuted") return ClaimStatus::refuted;
  if (s == "discrepancy") return ClaimStatus::discrepancy;
  throw io::InputError("WrongType", "", "unknown claim status '" + s + "'");
}

bool VerdictReport::ok() const {
  for (const auto& c : claims)
    if (c.status == ClaimStatus::refuted) return false;
  return true;
}

ReportFormat report_format_from_string(const std::string& s) {
  if (s == "json") return ReportFormat::json;
  if (s == "text") return ReportFormat::text;
  throw DomainError("unknown format '" + s + "'");
}

io::Json report_to_json(const VerdictReport& r) {
  io::Json claims = io::Json::array();
  for (const auto& c : r.claims) {
    io::Json w = io::Json::array();
    for (const auto& x : c.witnesses) w.push_back({{"label", x.label}, {"portions", x.portions}, {"values", x.values}});
    claims.push_back({{"id", c.id},
                      {"status", to_string(c.status)},
                      {"statement", c.statement},
                      {"computed", map_to_json(c.computed)},
                      {"stated", map_to_json(c.stated)},
                      {"witnesses", w},
                      {"notes", c.notes}});
  }
  return {{"subject", r.subject}, {"ok", r.ok()}, {"claims", claims}};
}

VerdictReport report_from_json(const io::Json& j) {
  if (!j.is_object() || !j.contains("claims") || !j["claims"].is_array())
    throw io::InputError("MissingField", "/claims", "report needs a claims array");
  VerdictReport r;
  r.subject = j.value("subject", "");
  for (std::size_t i = 0; i < j["claims"].size(); ++i) {
    const auto& cj = j["claims"][i];
    const std::string path = "/claims/" + std::to_string(i);
    Claim c;
    c.id = cj.at("id").get<std::string>();
    c.status = claim_status_from_string(cj.at("status").get<std::string>());
    c.statement = cj.value("statement", "");
    if (cj.contains("computed")) c.computed = map_from_json(cj["computed"], path + "/computed");
    if (cj.contains("stated")) c.stated = map_from_json(cj["stated"], path + "/stated");
    if (cj.contains("notes")) c.notes = string_list(cj["notes"], path + "/notes");
    if (cj.contains("witnesses"))
      for (const auto& wj : cj["witnesses"])
        c.witnesses.push_back({wj.at("label").get<std::string>(), string_list(wj.at("portions"), path + "/witnesses"),
                               string_list(wj.at("values"), path + "/witnesses")});
    r.claims.push_back(std::move(c));
  }
  return r;
}

std::string emit_report(const VerdictReport& r, ReportFormat f) {
  if (f == ReportFormat::json) return io::dump(report_to_json(r));
  std::ostringstream out;
  for (const auto& c : r.claims) {
    std::vector<std::string> parts{c.id + " " + to_string(c.status)};
    if (!c.statement.empty()) parts.push_back(c.statement);
    if (!c.computed.empty()) parts.push_back("computed: " + map_text(c.computed));
    if (!c.stated.empty()) parts.push_back("stated: " + map_text(c.stated));
    for (const auto& w : c.witnesses)
      parts.push_back("witness " + w.label + ": " + join(w.portions, " ") + " values=" + join(w.values, ","));
    for (const auto& n : c.notes) parts.push_back("note: " + n);
    out << join(parts, " | ") << "\n";
  }
  return out.str();
}

std::vector<std::string> strs(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

Witness make_witness(const std::string& label, const Allocation& a, const std::vector<Rational>& values) {
  Witness w{label, {}, strs(values)};
  for (std::size_t i = 0; i < a.players(); ++i) w.portions.push_back(std::to_string(i + 1) + ":" + a.portion_of(i).str());
  return w;
}

VerdictReport proportionality_report(const ProportionalityVerdict& v) {
  Claim c{"proportional", v.pass ? ClaimStatus::confirmed : ClaimStatus::refuted,
          "every player's own value is at least 1/n", {{"values", strs(v.values)}, {"share", {v.share.str()}}}, {}, {}, {}};
  for (std::size_t i = 0; i < v.values.size(); ++i)
    if (v.values[i] < v.share) c.notes.push_back("player " + std::to_string(i + 1) + " below share");
  return {"proportionality", {c}};
}

VerdictReport envy_report(const EnvyVerdict& v) {
  Claim c{"envy_free", v.pass() ? ClaimStatus::confirmed : ClaimStatus::refuted, "no player prefers another piece", {}, {}, {}, {}};
  for (std::size_t i = 0; i < v.matrix.size(); ++i) c.computed["row_" + std::to_string(i + 1)] = strs(v.matrix[i]);
  for (const auto& e : v.envies)
    c.notes.push_back("player " + std::to_string(e.who + 1) + " envies player " + std::to_string(e.of + 1) + " (" +
                      e.own.str() + " < " + e.other.str() + ")");
  return {"envy", {c}};
}

VerdictReport pareto_report(const ParetoVerdict& v, const Allocation& a, const std::vector<ValueMeasure1D>& measures,
                            ParetoClass cls) {
  Claim c{"pareto_" + to_string(cls), v.status == ParetoStatus::strongly_po ? ClaimStatus::confirmed : ClaimStatus::refuted,
          "no allocation in the class improves someone without hurting anyone", {}, {}, {}, v.notes};
  c.computed["status"] = {to_string(v.status)};
  c.computed["values"] = strs(realized_values(a, measures));
  c.computed["complete"] = {v.complete ? "true" : "false"};
  if (v.weak_optimum) c.computed["weak_lp_optimum"] = {v.weak_optimum->str()};
  if (v.strong_optimum) c.computed["strong_lp_optimum"] = {v.strong_optimum->str()};
  if (v.witness) {
    c.witnesses.push_back(make_witness("improvement", *v.witness, realized_values(*v.witness, measures)));
    if (v.witness_dominance) {
      c.computed["witness_kind"] = {to_string(v.witness_dominance->kind)};
      c.computed["witness_deltas"] = strs(v.witness_dominance->deltas);
    }
  }
  return {"pareto", {c}};
}

VerdictReport strategy_report(const StrategyVerdict& v, const std::string& claim_id) {
  Claim c{claim_id, v.holds ? ClaimStatus::confirmed : ClaimStatus::refuted, "misreport against the opponent family", {}, {}, {}, {}};
  std::vector<std::string> t, m, d, s;
  for (const auto& x : v.deltas) {
    t.push_back(x.truthful.str());
    m.push_back(x.misreport.str());
    d.push_back(x.delta.str());
    s.push_back(std::to_string(x.sign));
  }
  c.computed = {{"truthful", t}, {"misreport", m}, {"delta", d}, {"sign", s}};
  return {"strategy", {c}};
}

}  // namespace fairdiv
