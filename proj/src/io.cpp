#include "fairdiv/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace fairdiv::io {

namespace {

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

void reject_floats(const Json& j, const std::string& path) {
  if (j.is_number_float()) throw InputError("FloatLiteral", path, "floating-point literals are not allowed; write \"p/q\"");
  if (j.is_object())
    for (const auto& [k, v] : j.items()) reject_floats(v, child(path, k));
  if (j.is_array())
    for (std::size_t i = 0; i < j.size(); ++i) reject_floats(j[i], child(path, i));
}

const Json& expect_object(const Json& j, const std::string& path, const std::set<std::string>& allowed) {
  if (!j.is_object()) throw InputError("WrongType", path, "expected an object");
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) throw InputError("UnknownField", child(path, k), "unknown field");
  return j;
}

const Json& field(const Json& obj, const std::string& key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw InputError("MissingField", child(path, key), "required field missing");
  return *it;
}

const Json& array_field(const Json& obj, const std::string& key, const std::string& path, bool required) {
  static const Json empty = Json::array();
  const auto it = obj.find(key);
  if (it == obj.end()) {
    if (required) throw InputError("MissingField", child(path, key), "required field missing");
    return empty;
  }
  if (!it->is_array()) throw InputError("WrongType", child(path, key), "expected an array");
  return *it;
}

bool bool_field(const Json& obj, const std::string& key, const std::string& path) {
  const Json& v = field(obj, key, path);
  if (!v.is_boolean()) throw InputError("WrongType", child(path, key), "expected true or false");
  return v.get<bool>();
}

std::string string_field(const Json& obj, const std::string& key, const std::string& path) {
  const Json& v = field(obj, key, path);
  if (!v.is_string()) throw InputError("WrongType", child(path, key), "expected a string");
  return v.get<std::string>();
}

std::vector<Rational> rationals_from_json(const Json& arr, const std::string& path) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(rational_from_json(arr[i], child(path, i)));
  return out;
}

Json rationals_to_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(rational_to_json(r));
  return out;
}

ValueMeasure1D interval_player(const Json& pj, const std::string& path) {
  std::vector<PolyPiece> pieces;
  const Json& arr = array_field(pj, "pieces", path, true);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = child(child(path, "pieces"), i);
    const Json& o = expect_object(arr[i], p, {"lo", "hi", "density"});
    const Json& d = array_field(o, "density", p, true);
    pieces.push_back(PolyPiece{rational_from_json(field(o, "lo", p), child(p, "lo")),
                               rational_from_json(field(o, "hi", p), child(p, "hi")),
                               Polynomial(rationals_from_json(d, child(p, "density")))});
  }
  std::vector<Atom> atoms;
  const Json& aarr = array_field(pj, "atoms", path, false);
  for (std::size_t i = 0; i < aarr.size(); ++i) {
    const std::string p = child(child(path, "atoms"), i);
    const Json& o = expect_object(aarr[i], p, {"at", "mass"});
    atoms.push_back(Atom{rational_from_json(field(o, "at", p), child(p, "at")),
                         rational_from_json(field(o, "mass", p), child(p, "mass"))});
  }
  try {
    return ValueMeasure1D(std::move(pieces), std::move(atoms));
  } catch (const InvalidMeasure& e) {
    throw InputError(e.code(), path, e.what());
  }
}

cake2d::Point point_from_json(const Json& j, const std::string& path) {
  const Json& o = expect_object(j, path, {"x", "y"});
  return {rational_from_json(field(o, "x", path), child(path, "x")),
          rational_from_json(field(o, "y", path), child(path, "y"))};
}

cake2d::Cake2DMeasure rectangle_player(const Json& pj, const std::string& path) {
  std::vector<cake2d::Region> regions;
  const Json& rarr = array_field(pj, "regions", path, false);
  for (std::size_t i = 0; i < rarr.size(); ++i) {
    const std::string p = child(child(path, "regions"), i);
    const Json& o = expect_object(rarr[i], p, {"x0", "x1", "y0", "y1", "density"});
    auto r = [&](const char* k) { return rational_from_json(field(o, k, p), child(p, k)); };
    regions.push_back({{r("x0"), r("x1"), r("y0"), r("y1")}, r("density")});
  }
  std::vector<cake2d::Segment> segments;
  const Json& sarr = array_field(pj, "segments", path, false);
  for (std::size_t i = 0; i < sarr.size(); ++i) {
    const std::string p = child(child(path, "segments"), i);
    const Json& o = expect_object(sarr[i], p, {"from", "to", "mass"});
    segments.push_back({point_from_json(field(o, "from", p), child(p, "from")),
                        point_from_json(field(o, "to", p), child(p, "to")),
                        rational_from_json(field(o, "mass", p), child(p, "mass"))});
  }
  try {
    return cake2d::Cake2DMeasure(std::move(regions), std::move(segments));
  } catch (const InvalidMeasure& e) {
    throw InputError(e.code(), path, e.what());
  }
}

Json point_to_json(const cake2d::Point& p) { return {{"x", rational_to_json(p.x)}, {"y", rational_to_json(p.y)}}; }

}  // namespace

std::string to_string(CakeKind k) { return k == CakeKind::interval ? "interval" : "rectangle"; }

ProfileFile make_profile(const std::vector<ValueMeasure1D>& measures) {
  ProfileFile p;
  p.kind = CakeKind::interval;
  p.intervals = measures;
  for (std::size_t i = 0; i < measures.size(); ++i) p.names.push_back("player " + std::to_string(i + 1));
  return p;
}

ProfileFile make_profile(const std::vector<cake2d::Cake2DMeasure>& measures) {
  ProfileFile p;
  p.kind = CakeKind::rectangle;
  p.rectangles = measures;
  for (std::size_t i = 0; i < measures.size(); ++i) p.names.push_back("player " + std::to_string(i + 1));
  return p;
}

Json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_float()) throw InputError("FloatLiteral", path, "floating-point literals are not allowed; write \"p/q\"");
  if (!j.is_string()) throw InputError("MalformedRational", path, "expected a rational string \"p/q\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError("MalformedRational", path, e.what());
  }
}

Json portion_to_json(const Portion& p) {
  Json iv = Json::array();
  for (const auto& i : p.intervals())
    iv.push_back({{"lo", rational_to_json(i.lo)},
                  {"hi", rational_to_json(i.hi)},
                  {"lo_closed", i.lo_closed},
                  {"hi_closed", i.hi_closed}});
  return {{"intervals", iv}, {"added", rationals_to_json(p.added_points())}, {"removed", rationals_to_json(p.removed_points())}};
}

Portion portion_from_json(const Json& j, const std::string& path) {
  const Json& o = expect_object(j, path, {"intervals", "added", "removed"});
  std::vector<Interval> ivs;
  const Json& arr = array_field(o, "intervals", path, true);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = child(child(path, "intervals"), i);
    const Json& io = expect_object(arr[i], p, {"lo", "hi", "lo_closed", "hi_closed"});
    Interval iv{rational_from_json(field(io, "lo", p), child(p, "lo")),
                rational_from_json(field(io, "hi", p), child(p, "hi")), bool_field(io, "lo_closed", p),
                bool_field(io, "hi_closed", p)};
    if (!(iv.lo < iv.hi)) throw InputError("EmptyInterval", p, "needs lo < hi");
    ivs.push_back(iv);
  }
  return Portion::from_parts(ivs, rationals_from_json(array_field(o, "added", path, false), child(path, "added")),
                             rationals_from_json(array_field(o, "removed", path, false), child(path, "removed")));
}

Json enclosure_to_json(const RootEnclosure& e) {
  if (e.is_exact()) return {{"exact", rational_to_json(*e.exact)}};
  return {{"lo", rational_to_json(e.bracket->first)}, {"hi", rational_to_json(e.bracket->second)}};
}

RootEnclosure enclosure_from_json(const Json& j, const std::string& path) {
  const Json& o = expect_object(j, path, {"exact", "lo", "hi"});
  if (o.contains("exact")) {
    if (o.size() != 1) throw InputError("WrongType", path, "exact enclosure takes no bracket");
    return RootEnclosure::at(rational_from_json(o["exact"], child(path, "exact")));
  }
  const Rational lo = rational_from_json(field(o, "lo", path), child(path, "lo"));
  const Rational hi = rational_from_json(field(o, "hi", path), child(path, "hi"));
  if (!(lo < hi)) throw InputError("EmptyInterval", path, "bracket needs lo < hi");
  return RootEnclosure::between(lo, hi);
}

Json profile_to_json(const ProfileFile& p) {
  Json players = Json::array();
  for (std::size_t i = 0; i < p.players(); ++i) {
    Json pj{{"name", p.names[i]}};
    if (p.kind == CakeKind::interval) {
      const auto& m = p.intervals[i];
      Json pieces = Json::array(), atoms = Json::array();
      for (const auto& pc : m.pieces())
        pieces.push_back({{"lo", rational_to_json(pc.lo)},
                          {"hi", rational_to_json(pc.hi)},
                          {"density", rationals_to_json(pc.density.coefficients())}});
      for (const auto& a : m.atoms()) atoms.push_back({{"at", rational_to_json(a.at)}, {"mass", rational_to_json(a.mass)}});
      pj["pieces"] = pieces;
      pj["atoms"] = atoms;
    } else {
      const auto& m = p.rectangles[i];
      Json regions = Json::array(), segments = Json::array();
      for (const auto& r : m.regions())
        regions.push_back({{"x0", rational_to_json(r.rect.x0)},
                           {"x1", rational_to_json(r.rect.x1)},
                           {"y0", rational_to_json(r.rect.y0)},
                           {"y1", rational_to_json(r.rect.y1)},
                           {"density", rational_to_json(r.density)}});
      for (const auto& s : m.segments())
        segments.push_back({{"from", point_to_json(s.from)}, {"to", point_to_json(s.to)}, {"mass", rational_to_json(s.mass)}});
      pj["regions"] = regions;
      pj["segments"] = segments;
    }
    players.push_back(pj);
  }
  return {{"cake", to_string(p.kind)}, {"players", players}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string dump_profile(const ProfileFile& p) { return dump(profile_to_json(p)); }

Json parse_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    // byte offset -> line and column
    const std::size_t at = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError("SyntaxError", "line " + std::to_string(line) + ", column " + std::to_string(col), e.what());
  }
  reject_floats(j, "");
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("FileNotFound", "", "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ProfileFile parse_profile(const std::string& text) {
  const Json j = parse_json(text);
  const Json& o = expect_object(j, "", {"cake", "players"});
  ProfileFile p;
  const std::string kind = string_field(o, "cake", "");
  if (kind == "interval") p.kind = CakeKind::interval;
  else if (kind == "rectangle") p.kind = CakeKind::rectangle;
  else throw InputError("WrongType", "/cake", "expected \"interval\" or \"rectangle\"");
  const Json& players = array_field(o, "players", "", true);
  if (players.empty()) throw InputError("EmptyProfile", "/players", "at least one player is required");
  for (std::size_t i = 0; i < players.size(); ++i) {
    const std::string path = child("/players", i);
    const Json& pj = p.kind == CakeKind::interval ? expect_object(players[i], path, {"name", "pieces", "atoms"})
                                                  : expect_object(players[i], path, {"name", "regions", "segments"});
    p.names.push_back(pj.contains("name") ? string_field(pj, "name", path) : "player " + std::to_string(i + 1));
    if (p.kind == CakeKind::interval) p.intervals.push_back(interval_player(pj, path));
    else p.rectangles.push_back(rectangle_player(pj, path));
  }
  return p;
}

ProfileFile load_profile(const std::string& path) { return parse_profile(read_file(path)); }

Json allocation_to_json(const Allocation& a) {
  Json pieces = Json::array(), cuts = Json::array();
  for (const auto& pc : a.pieces) pieces.push_back({{"player", pc.player + 1}, {"portion", portion_to_json(pc.portion)}});
  for (const auto& c : a.cut_points) cuts.push_back(enclosure_to_json(c));
  return {{"pieces", pieces}, {"cuts", cuts}, {"trace", a.trace}};
}

Allocation allocation_from_json(const Json& j, const std::string& path) {
  if (j.is_object() && j.contains("allocation") && !j.contains("pieces"))
    return allocation_from_json(j["allocation"], child(path, "allocation"));
  const Json& o = expect_object(j, path, {"pieces", "cuts", "trace"});
  Allocation a;
  const Json& arr = array_field(o, "pieces", path, true);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = child(child(path, "pieces"), i);
    const Json& po = expect_object(arr[i], p, {"player", "portion"});
    const Json& pl = field(po, "player", p);
    if (!pl.is_number_unsigned() || pl.get<std::size_t>() == 0)
      throw InputError("WrongType", child(p, "player"), "expected a player number 1, 2, ...");
    a.pieces.push_back({pl.get<std::size_t>() - 1, portion_from_json(field(po, "portion", p), child(p, "portion"))});
  }
  const Json& cuts = array_field(o, "cuts", path, false);
  for (std::size_t i = 0; i < cuts.size(); ++i) a.cut_points.push_back(enclosure_from_json(cuts[i], child(child(path, "cuts"), i)));
  const Json& trace = array_field(o, "trace", path, false);
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (!trace[i].is_string()) throw InputError("WrongType", child(child(path, "trace"), i), "expected a string");
    a.trace.push_back(trace[i].get<std::string>());
  }
  return a;
}

Allocation parse_allocation(const std::string& text) { return allocation_from_json(parse_json(text)); }

Allocation load_allocation(const std::string& path) { return parse_allocation(read_file(path)); }

}  // namespace fairdiv::io
