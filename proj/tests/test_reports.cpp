#include "doctest.h"

#include <filesystem>
#include <regex>

#include "fairdiv/io.hpp"
#include "fairdiv/report.hpp"
#include "fairdiv/scenarios.hpp"
#include "generators.hpp"

using namespace fairdiv;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

std::string data(const std::string& name) { return std::string(FAIRDIV_DATA_DIR) + "/" + name; }

std::string code_of(const std::string& text) {
  try {
    io::parse_profile(text);
  } catch (const io::InputError& e) {
    return e.code() + " @ " + e.path();
  }
  return "ok";
}

const char* kUniform = R"({"cake": "interval", "players": [{"name": "a", "pieces": [{"lo": "0", "hi": "1", "density": ["1"]}]}]})";

// Tokens made of word characters and dots that read as float literals.
std::vector<std::string> float_tokens(const std::string& doc) {
  static const std::regex word("[A-Za-z0-9_.+-]+");
  static const std::regex flt(R"(^[-+]?(\d+\.\d*|\.\d+)([eE][-+]?\d+)?$|^[-+]?\d+[eE][-+]?\d+$)");
  std::vector<std::string> out;
  for (auto it = std::sregex_iterator(doc.begin(), doc.end(), word); it != std::sregex_iterator(); ++it)
    if (std::regex_match(it->str(), flt)) out.push_back(it->str());
  return out;
}

}  // namespace

TEST_CASE("bundled profiles load to the reference measures") {
  CHECK(io::load_profile(data("example4.json")).intervals == scenarios::example4());
  CHECK(io::load_profile(data("example2.json")).intervals == scenarios::example2());
  CHECK(io::load_profile(data("example5.json")).intervals == scenarios::example5());
  CHECK(io::load_profile(data("example6.json")).intervals == scenarios::example6());
  CHECK(io::load_profile(data("example7.json")).intervals == scenarios::example7());
  CHECK(io::load_profile(data("example8_truth.json")).intervals == scenarios::example8_truth());
  const auto ex3 = io::load_profile(data("example3.json"));
  CHECK(ex3.kind == io::CakeKind::rectangle);
  CHECK(ex3.rectangles == scenarios::example3());
  CHECK(io::load_profile(data("frosting3.json")).rectangles == scenarios::frosting(3));
}

TEST_CASE("round trip on every bundled profile") {
  for (const auto& entry : std::filesystem::directory_iterator(FAIRDIV_DATA_DIR)) {
    if (entry.path().extension() != ".json") continue;
    CAPTURE(entry.path().string());
    const std::string text = io::read_file(entry.path().string());
    const auto p = io::parse_profile(text);
    CHECK(io::dump_profile(p) == text);
    CHECK(io::parse_profile(io::dump_profile(p)) == p);
    CHECK(float_tokens(text).empty());
  }
}

TEST_CASE("profile errors carry codes and field paths") {
  CHECK(code_of(kUniform) == "ok");
  CHECK(code_of(R"({"cake": "interval", "players": [{"pieces": [{"lo": "0", "hi": "1", "density": ["2"]}]}]})") ==
        "MassNotOne @ /players/0");
  CHECK(code_of(R"({"cake": "interval", "players": [{"pieces": [{"lo": "0", "hi": "1", "density": [0.5]}]}]})") ==
        "FloatLiteral @ /players/0/pieces/0/density/0");
  CHECK(code_of(R"({"cake": "interval", "players": [{"pieces": [{"lo": "0", "hi": 1e0, "density": ["1"]}]}]})") ==
        "FloatLiteral @ /players/0/pieces/0/hi");
  CHECK(code_of(R"({"cake": "interval", "players": [{"pieces": [{"lo": "0", "hi": "0.5", "density": ["2"]}]}]})") ==
        "MalformedRational @ /players/0/pieces/0/hi");
  CHECK(code_of(R"({"cake": "interval", "players": [{"pieces": [{"lo": "0", "hi": "1/0", "density": ["1"]}]}]})") ==
        "MalformedRational @ /players/0/pieces/0/hi");
  CHECK(code_of(R"({"cake": "interval", "players": [{"pieces": [{"lo": "0", "hi": "2/3", "density": ["1"]},
                                                                  {"lo": "1/3", "hi": "1", "density": ["1/2"]}]}]})") ==
        "OverlappingPieces @ /players/0");
  CHECK(code_of(R"({"cake": "interval", "players": [{"pieces": [{"lo": "0", "hi": "1", "density": ["1"]}], "colour": "x"}]})") ==
        "UnknownField @ /players/0/colour");
  CHECK(code_of(R"({"cake": "interval", "players": [{"pieces": [{"lo": "0", "density": ["1"]}]}]})") ==
        "MissingField @ /players/0/pieces/0/hi");
  CHECK(code_of(R"({"cake": "interval", "players": []})") == "EmptyProfile @ /players");
  CHECK(code_of(R"({"cake": "sphere", "players": []})") == "WrongType @ /cake");
  CHECK(code_of("{\"cake\": \"interval\",\n  \"players\": [\n  }") == "SyntaxError @ line 3, column 3");
  CHECK(code_of(R"({"cake": "rectangle", "players": [{"regions": [{"x0": "0", "x1": "1", "y0": "0", "y1": "1", "density": "2"}]}]})") ==
        "MassNotOne @ /players/0");
  CHECK_THROWS_AS(io::load_profile(data("missing.json")), io::InputError);
}

TEST_CASE("atoms and quadratic pieces survive the round trip") {
  const ValueMeasure1D m({PolyPiece{q(0), q(1, 2), Polynomial{q(0), q(3)}}, PolyPiece{q(1, 2), q(1), Polynomial{q(1, 4)}}},
                         {Atom{q(1, 3), q(3, 8)}, Atom{q(1), q(1, 8)}});
  const auto p = io::make_profile(std::vector<ValueMeasure1D>{m});
  CHECK(io::parse_profile(io::dump_profile(p)) == p);
  testgen::Engine rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<ValueMeasure1D> ms{testgen::random_piecewise_constant(rng, 1 + trial % 6, trial % 3 == 0)};
    const auto rp = io::make_profile(ms);
    CHECK(io::parse_profile(io::dump_profile(rp)) == rp);
  }
}

TEST_CASE("allocation round trip") {
  const auto ex5 = scenarios::example5();
  const auto ep = equitability_procedure(ex5).allocation;
  CHECK(io::parse_allocation(io::dump(io::allocation_to_json(ep))) == ep);
  const auto sp = surplus_procedure(star_transform(ValueMeasure1D::uniform()), scenarios::uniform_with_median(q(3, 4)), {});
  CHECK_FALSE(sp.cut.is_exact());
  const auto back = io::parse_allocation(io::dump(io::allocation_to_json(sp.allocation)));
  CHECK(back == sp.allocation);
  CHECK(back.trace == sp.allocation.trace);
  Allocation odd;
  odd.pieces.push_back({0, Portion::from_parts({Interval{q(0), q(1, 2), false, true}}, {q(3, 4)}, {q(1, 4)})});
  odd.pieces.push_back({1, odd.pieces[0].portion.complement()});
  CHECK(io::parse_allocation(io::dump(io::allocation_to_json(odd))) == odd);
  const io::Json wrapped{{"allocation", io::allocation_to_json(odd)}, {"values", {"1/2"}}};
  CHECK(io::allocation_from_json(wrapped) == odd);
  CHECK_THROWS_AS(io::parse_allocation(R"({"pieces": [{"player": 0, "portion": {"intervals": []}}]})"), io::InputError);
  CHECK_THROWS_AS(io::parse_allocation(R"({"pieces": [{"player": 1.0, "portion": {"intervals": []}}]})"), io::InputError);
}

TEST_CASE("every example verifies") {
  for (int id = 1; id <= 10; ++id) {
    CAPTURE(id);
    const auto r = verify_example(id);
    CHECK(r.exit_code() == 0);
    CHECK_FALSE(r.claims.empty());
    for (const auto& c : r.claims) {
      CAPTURE(c.id);
      CHECK(c.status != ClaimStatus::refuted);
      if (c.status == ClaimStatus::discrepancy) {
        CHECK_FALSE(c.stated.empty());
        for (const auto& [k, v] : c.stated) CHECK(c.computed.count(k) == 1);
      }
    }
  }
  CHECK_THROWS_AS(verify_example(0), DomainError);
  CHECK_THROWS_AS(verify_example(11), DomainError);
}

TEST_CASE("discrepancies are where expected") {
  for (int id = 1; id <= 10; ++id) {
    std::vector<std::string> ids;
    for (const auto& c : verify_example(id).claims)
      if (c.status == ClaimStatus::discrepancy) ids.push_back(c.id);
    CAPTURE(id);
    if (id == 6) CHECK(ids == std::vector<std::string>{"ex6.weak_label"});
    else if (id == 7) CHECK(ids == std::vector<std::string>{"ex7.beneficiary", "ex7.stated_envy"});
    else CHECK(ids.empty());
  }
  const auto r7 = verify_example(7);
  const auto json = emit_report(r7, ReportFormat::json);
  for (const auto& c : r7.claims)
    if (c.id == "ex7.beneficiary") {
      CHECK(c.stated.at("strict_gain") == std::vector<std::string>{"player 3"});
      CHECK(c.computed.at("strict_gain") == std::vector<std::string>{"player 1"});
    }
  CHECK(json.find("\"player 3\"") != std::string::npos);
  CHECK(json.find("\"player 1\"") != std::string::npos);
}

TEST_CASE("emission is deterministic, exact and round-trips") {
  for (int id = 1; id <= 10; ++id) {
    CAPTURE(id);
    const auto r = verify_example(id);
    const auto json = emit_report(r, ReportFormat::json);
    const auto text = emit_report(r, ReportFormat::text);
    CHECK(json == emit_report(verify_example(id), ReportFormat::json));
    CHECK(report_from_json(io::parse_json(json)) == r);
    CHECK(std::count(text.begin(), text.end(), '\n') == static_cast<long>(r.claims.size()));
    CHECK(float_tokens(json).empty());
    CHECK(float_tokens(text).empty());
  }
}

TEST_CASE("float scan oracle") {
  CHECK(float_tokens("value 0.5 and 1e3 and .4") == std::vector<std::string>{"0.5", "1e3", ".4"});
  CHECK(float_tokens("ex1.A1 1/2 3/4 2199023255552 player 3").empty());
}

TEST_CASE("check reports") {
  const auto ex8 = scenarios::example8_truth();
  const auto halves = contiguous_allocation({0, 1}, {q(1, 2)});
  const auto pr = proportionality_report(proportionality_check(halves, ex8));
  CHECK(pr.exit_code() == 1);
  CHECK(pr.claims[0].computed.at("values") == std::vector<std::string>{"0", "0"});
  const auto ex4 = scenarios::example4();
  const auto sp = surplus_procedure(ex4[0], ex4[1], ex4).allocation;
  const auto par = pareto_report(pareto_optimal(sp, ex4, ParetoClass::unrestricted), sp, ex4, ParetoClass::unrestricted);
  CHECK(par.claims[0].computed.at("status") == std::vector<std::string>{"not_weakly_PO"});
  CHECK(par.claims[0].witnesses.size() == 1);
  CHECK(float_tokens(emit_report(par, ReportFormat::json)).empty());
  const auto env = envy_report(envy_check(sp, ex4));
  CHECK(env.exit_code() == 0);
}
