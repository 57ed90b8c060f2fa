#pragma once

// JSON file formats. Every rational is a string "p/q" (or an integer
// string); JSON number literals other than small player indices are
// rejected, floats always.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fairdiv/cake2d.hpp"
#include "fairdiv/errors.hpp"
#include "fairdiv/measure.hpp"
#include "fairdiv/procedures.hpp"

namespace fairdiv::io {

using Json = nlohmann::json;

/// Malformed input. `path` is a JSON pointer to the offending field, or
/// "line L, column C" for syntax errors.
class InputError : public Error {
public:
  InputError(const std::string& code, const std::string& path, const std::string& what)
      : Error(code, path.empty() ? what : path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

private:
  std::string path_;
};

enum class CakeKind { interval, rectangle };
std::string to_string(CakeKind k);

struct ProfileFile {
  CakeKind kind = CakeKind::interval;
  std::vector<std::string> names;
  std::vector<ValueMeasure1D> intervals;          // kind == interval
  std::vector<cake2d::Cake2DMeasure> rectangles;  // kind == rectangle

  std::size_t players() const { return names.size(); }
  friend bool operator==(const ProfileFile&, const ProfileFile&) = default;
};

ProfileFile make_profile(const std::vector<ValueMeasure1D>& measures);
ProfileFile make_profile(const std::vector<cake2d::Cake2DMeasure>& measures);

/// Parses text; throws InputError (codes SyntaxError, FloatLiteral,
/// MalformedRational, MissingField, UnknownField, WrongType, EmptyProfile)
/// or InputError carrying a measure validation code (MassNotOne,
/// OverlappingPieces, NegativeDensity, ...).
ProfileFile parse_profile(const std::string& text);
/// Throws InputError("FileNotFound") when the file cannot be read.
ProfileFile load_profile(const std::string& path);
Json profile_to_json(const ProfileFile& p);
/// Canonical form: sorted keys, two-space indent, trailing newline.
std::string dump_profile(const ProfileFile& p);

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j, const std::string& path);
Json portion_to_json(const Portion& p);
Portion portion_from_json(const Json& j, const std::string& path);
Json enclosure_to_json(const RootEnclosure& e);
RootEnclosure enclosure_from_json(const Json& j, const std::string& path);

/// Players are 1-based in files.
Json allocation_to_json(const Allocation& a);
/// Accepts a bare allocation object or a document with an "allocation" member.
Allocation allocation_from_json(const Json& j, const std::string& path = "");
Allocation parse_allocation(const std::string& text);
Allocation load_allocation(const std::string& path);

/// Document text parsed with the float and syntax checks above.
Json parse_json(const std::string& text);
std::string read_file(const std::string& path);

/// Canonical JSON text (sorted keys, two-space indent, trailing newline).
std::string dump(const Json& j);

}  // namespace fairdiv::io
