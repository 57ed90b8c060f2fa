#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fairdiv {

class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& what) : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

/// Rejected at construction of a measure: mass != 1, negative density,
/// overlapping pieces, out-of-range support or bad atoms.
class InvalidMeasure : public Error {
public:
  InvalidMeasure(const std::string& code, const std::string& what) : Error(code, what) {}
};

class MultipleMedians : public Error {
public:
  explicit MultipleMedians(std::size_t player)
      : Error("MultipleMedians", "player " + std::to_string(player + 1) + " has no unique reported median"),
        player_(player) {}
  std::size_t player() const { return player_; }

private:
  std::size_t player_;
};

class DomainError : public Error {
public:
  explicit DomainError(const std::string& what) : Error("DomainError", what) {}
};

}  // namespace fairdiv
