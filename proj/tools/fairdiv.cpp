// fairdiv command line: example verification, procedures, checks.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fairdiv/cake2d.hpp"
#include "fairdiv/report.hpp"

using namespace fairdiv;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
auto as_usage(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw UsageError(e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

cake2d::SweepDirection parse_direction(const std::string& s) {
  return as_usage([&] {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw DomainError("direction must be dx,dy");
    return cake2d::SweepDirection(Rational::parse(s.substr(0, comma)), Rational::parse(s.substr(comma + 1)));
  });
}

std::vector<ValueMeasure1D> interval_measures(const io::ProfileFile& p, const std::string& direction) {
  if (p.kind == io::CakeKind::interval) return p.intervals;
  if (direction.empty()) throw UsageError("a rectangle profile needs --direction dx,dy");
  const auto d = parse_direction(direction);
  std::vector<ValueMeasure1D> out;
  for (const auto& m : p.rectangles) out.push_back(cake2d::sweep_project(m, d).measure);
  return out;
}

void need_players(const std::vector<ValueMeasure1D>& m, std::size_t n, const std::string& what) {
  if (m.size() != n)
    throw io::InputError("WrongPlayerCount", "/players", what + " needs " + std::to_string(n) + " players, profile has " +
                                                             std::to_string(m.size()));
}

void print(const VerdictReport& r, ReportFormat f) { std::cout << emit_report(r, f); }

io::Json values_json(const std::vector<Rational>& v) {
  io::Json out = io::Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

int cmd_run(const std::string& proc, const std::string& profile, const std::string& variant, const std::string& tie_s,
            const std::string& direction, ReportFormat fmt) {
  const TieBreak tie = as_usage([&] { return tie_break_from_string(tie_s); });
  const auto m = interval_measures(io::load_profile(profile), direction);
  io::Json doc{{"procedure", proc}};
  Allocation a;
  if (proc == "cutchoose") {
    need_players(m, 2, proc);
    const auto r = cut_and_choose(m[0], m[1], m, tie);
    a = r.allocation;
  } else if (proc == "movingknife") {
    const auto r = moving_knife(m, tie);
    a = r.allocation;
    doc["fair"] = r.fair;
  } else if (proc == "sp") {
    need_players(m, 2, proc);
    const auto r = surplus_procedure(m[0], m[1], m);
    a = r.allocation;
    doc["cut"] = io::enclosure_to_json(r.cut);
    doc["left_player"] = r.left_player + 1;
  } else if (proc == "ep") {
    const auto r = equitability_procedure(m);
    a = r.allocation;
    doc["common_value"] = io::enclosure_to_json(r.common_value);
    io::Json ord = io::Json::array();
    for (auto i : r.ordering) ord.push_back(i + 1);
    doc["ordering"] = ord;
    doc["infeasible_orderings"] = r.infeasible_orderings;
  } else if (proc == "stromquist") {
    need_players(m, 3, proc);
    const auto v = as_usage([&] { return stromquist_variant_from_string(variant); });
    const auto r = stromquist(m, v, tie);
    a = r.allocation;
    doc["variant"] = to_string(v);
    doc["sword"] = r.sword.str();
    doc["median_knife"] = r.median_knife.str();
    doc["knives"] = values_json(r.knives);
    doc["shouter"] = r.shouter + 1;
  } else {
    throw UsageError("unknown procedure '" + proc + "'");
  }
  const auto values = realized_values(a, m);
  doc["allocation"] = io::allocation_to_json(a);
  doc["values"] = values_json(values);
  if (fmt == ReportFormat::json) {
    std::cout << io::dump(doc);
  } else {
    std::cout << "procedure " << proc << "\n";
    for (const auto& c : a.cut_points) std::cout << "cut " << c.str() << "\n";
    for (std::size_t i = 0; i < a.players(); ++i)
      std::cout << "player " << i + 1 << " " << a.portion_of(i).str() << " value " << values[i].str() << "\n";
    for (const auto& t : a.trace) std::cout << "trace " << t << "\n";
  }
  return 0;
}

int cmd_check(const std::string& kind, const std::string& profile, const std::string& allocation, const std::string& cls_s,
              int refine, const std::string& direction, ReportFormat fmt) {
  const auto m = interval_measures(io::load_profile(profile), direction);
  const auto a = io::load_allocation(allocation);
  validate_allocation(a, m.size());
  VerdictReport r;
  if (kind == "proportional") {
    r = proportionality_report(proportionality_check(a, m));
  } else if (kind == "envy") {
    r = envy_report(envy_check(a, m));
  } else if (kind == "pareto") {
    const auto cls = as_usage([&] { return pareto_class_from_string(cls_s); });
    if (refine < 0) throw UsageError("--grid-refine must be nonnegative");
    r = pareto_report(pareto_optimal(a, m, cls, refine), a, m, cls);
  } else {
    throw UsageError("unknown check '" + kind + "'");
  }
  print(r, fmt);
  return r.exit_code();
}

ValueMeasure1D single_measure(const std::string& path) {
  const auto p = io::load_profile(path);
  if (p.kind != io::CakeKind::interval) throw io::InputError("WrongType", "/cake", "expected an interval profile");
  if (p.players() != 1) throw io::InputError("WrongPlayerCount", "/players", "expected exactly one player");
  return p.intervals[0];
}

int cmd_strategy(const std::string& proc_s, const std::string& truth_p, const std::string& mis_p, const std::string& fam,
                 const std::string& mode, int player, int players, ReportFormat fmt) {
  const Procedure proc = as_usage([&] { return procedure_from_string(proc_s); });
  if (player < 1 || players < 2 || player > players) throw UsageError("need 1 <= --player <= --players and --players >= 2");
  const auto truth = single_measure(truth_p);
  const auto mis = single_measure(mis_p);
  OpponentFamily family;
  if (fam.rfind("file:", 0) == 0) {
    const auto p = io::load_profile(fam.substr(5));
    if (p.kind != io::CakeKind::interval) throw io::InputError("WrongType", "/cake", "expected an interval profile");
    family = {fam, p.intervals};
  } else {
    family = as_usage([&] { return family_preset(fam, truth); });
  }
  const auto who = static_cast<std::size_t>(player - 1), n = static_cast<std::size_t>(players);
  StrategyVerdict v;
  if (mode == "assuredly") v = assuredly_better_check(proc, who, truth, mis, family, n);
  else if (mode == "weakly") v = weakly_better_check(proc, who, truth, mis, family, n);
  else throw UsageError("--mode must be assuredly or weakly");
  auto r = strategy_report(v, mode + "_better");
  r.claims[0].computed["procedure"] = {to_string(proc)};
  r.claims[0].computed["family"] = {family.name};
  print(r, fmt);
  return r.exit_code();
}

int cmd_sweep(const std::string& profile, const std::string& direction, const std::string& emit, ReportFormat fmt) {
  const auto p = io::load_profile(profile);
  if (p.kind != io::CakeKind::rectangle) throw io::InputError("WrongType", "/cake", "sweep needs a rectangle profile");
  const auto d = parse_direction(direction);
  std::vector<ValueMeasure1D> proj;
  Claim c{"sweep_projection", ClaimStatus::confirmed, "projection onto the sweep coordinate", {}, {}, {}, {}};
  c.computed["direction"] = {d.str()};
  for (std::size_t i = 0; i < p.players(); ++i) {
    const auto s = cake2d::sweep_project(p.rectangles[i], d);
    std::vector<std::string> atoms;
    for (const auto& at : s.measure.atoms()) atoms.push_back(at.at.str() + ":" + at.mass.str());
    c.computed["atoms_player_" + std::to_string(i + 1)] = atoms;
    c.computed["level_player_" + std::to_string(i + 1)] = {s.offset.str(), s.scale.str()};
    proj.push_back(s.measure);
  }
  const auto mk = moving_knife(proj);
  Claim f{"moving_knife_fair", mk.fair ? ClaimStatus::confirmed : ClaimStatus::refuted,
          "moving knife along the sweep gives everyone at least 1/n", {{"values", strs(mk.values)}}, {}, {}, {}};
  f.witnesses.push_back(make_witness("moving_knife", mk.allocation, mk.values));
  if (!emit.empty()) {
    std::ofstream out(emit);
    if (!out) throw io::InputError("FileNotFound", "", "cannot write '" + emit + "'");
    auto pf = io::make_profile(proj);
    pf.names = p.names;
    out << io::dump_profile(pf);
  }
  const VerdictReport r{"sweep", {c, f}};
  print(r, fmt);
  return r.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact fair division toolkit"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  int example = 0;
  auto* verify = app.add_subcommand("verify-example", "Reproduce a reference example (1..10)");
  verify->add_option("id", example, "Example number")->required();

  std::string proc, profile, variant = "stromquist1980", tie = "lowest_player_index", direction;
  auto* run = app.add_subcommand("run", "Run a procedure on a profile");
  run->add_option("procedure", proc, "cutchoose | movingknife | sp | ep | stromquist")->required();
  run->add_option("--profile", profile, "Profile file")->required();
  run->add_option("--variant", variant, "stromquist1980 | paper_example7");
  run->add_option("--tie", tie, "lowest_player_index | highest_player_index");
  run->add_option("--direction", direction, "Sweep direction dx,dy for rectangle profiles");

  std::string kind, allocation, cls = "unrestricted";
  int refine = 0;
  auto* check = app.add_subcommand("check", "Check an allocation");
  check->add_option("kind", kind, "proportional | envy | pareto")->required();
  check->add_option("--profile", profile, "Profile file")->required();
  check->add_option("--allocation", allocation, "Allocation file")->required();
  check->add_option("--class", cls, "unrestricted | contiguous");
  check->add_option("--grid-refine", refine, "Contiguous grid refinement rounds");
  check->add_option("--direction", direction, "Sweep direction dx,dy for rectangle profiles");

  std::string sproc, truth, mis, family, mode = "assuredly";
  int player = 1, players = 2;
  auto* strat = app.add_subcommand("strategy", "Compare a misreport with truth-telling");
  strat->add_option("--procedure", sproc, "sp | ep | cutchoose | movingknife")->required();
  strat->add_option("--true", truth, "One-player profile with the true measure")->required();
  strat->add_option("--misreport", mis, "One-player profile with the reported measure")->required();
  strat->add_option("--family", family, "median-grid | median:b1,b2,... | identical | file:PATH")->required();
  strat->add_option("--mode", mode, "assuredly | weakly");
  strat->add_option("--player", player, "Position of the misreporting player (1-based)");
  strat->add_option("--players", players, "Number of players");

  std::string emit;
  auto* sweep = app.add_subcommand("sweep", "Project a square profile along a sweep direction");
  sweep->add_option("--profile", profile, "Rectangle profile file")->required();
  sweep->add_option("--direction", direction, "dx,dy")->required();
  sweep->add_option("--emit-profile", emit, "Write the projected interval profile here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const ReportFormat fmt = report_format_from_string(format);
  try {
    if (*verify) {
      if (example < 1 || example > 10) throw UsageError("example id must be 1..10");
      const auto r = verify_example(example);
      print(r, fmt);
      return r.exit_code();
    }
    if (*run) return cmd_run(proc, profile, variant, tie, direction, fmt);
    if (*check) return cmd_check(kind, profile, allocation, cls, refine, direction, fmt);
    if (*strat) return cmd_strategy(sproc, truth, mis, family, mode, player, players, fmt);
    if (*sweep) return cmd_sweep(profile, direction, emit, fmt);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "input error [" << e.code() << "]: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
