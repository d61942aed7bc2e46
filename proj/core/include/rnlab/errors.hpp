#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rnlab {

// Permutations of different degree were combined.
class DegreeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A tree letter outside {1, ..., d}.
class LetterError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A bounded search ran out of room. The answer is unknown, never wrong;
// callers should raise the bound and retry.
class SearchBudgetExceeded : public std::runtime_error {
 public:
  SearchBudgetExceeded(const std::string& what, std::size_t bound)
      : std::runtime_error(what), bound_(bound) {}
  std::size_t bound() const noexcept { return bound_; }

 private:
  std::size_t bound_;
};

// The relator-application search found no filling within max_area.
class AreaBudgetExceeded : public std::runtime_error {
 public:
  AreaBudgetExceeded(const std::string& what, std::size_t bound)
      : std::runtime_error(what), bound_(bound) {}
  std::size_t bound() const noexcept { return bound_; }

 private:
  std::size_t bound_;
};

// rn_apply was handed a vertex shorter than every domain prefix on its path.
class NeedDeeperPrefix : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text input did not match the grammar. line() is 1-based, 0 if unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace rnlab
