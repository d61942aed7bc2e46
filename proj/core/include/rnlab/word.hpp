#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rnlab {

using Symbol = std::uint32_t;

/// A generator or its formal inverse.
struct Letter {
  Symbol symbol = 0;
  bool inverted = false;

  constexpr Letter inverse() const noexcept { return {symbol, !inverted}; }
  constexpr int sign() const noexcept { return inverted ? -1 : 1; }
  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter, Letter) = default;
};

constexpr Letter gen(Symbol s) { return {s, false}; }
constexpr Letter inv(Symbol s) { return {s, true}; }

/// A freely reduced word in the free group on an alphabet of symbols.
///
/// Every constructor reduces, so no value of this type ever holds an
/// adjacent pair x x^-1.
class GroupWord {
 public:
  GroupWord() = default;
  GroupWord(std::initializer_list<Letter> letters);
  explicit GroupWord(std::span<const Letter> letters);
  explicit GroupWord(std::vector<Letter> letters);

  static GroupWord power(Letter x, long long k);

  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  GroupWord inverse() const;
  GroupWord pow(long long k) const;
  /// Signed exponent sum of one symbol.
  long long exponent_sum(Symbol s) const noexcept;

  friend bool operator==(const GroupWord&, const GroupWord&) = default;
  friend auto operator<=>(const GroupWord&, const GroupWord&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Free product with reduction at the junction.
GroupWord word_multiply(const GroupWord& u, const GroupWord& v);
GroupWord word_inverse(const GroupWord& u);

inline GroupWord operator*(const GroupWord& u, const GroupWord& v) { return word_multiply(u, v); }

/// Reduces an arbitrary letter sequence in place (stack reduction).
void free_reduce(std::vector<Letter>& letters);

struct GroupWordHash {
  std::size_t operator()(const GroupWord& w) const noexcept;
};

/// Names for the symbols of an alphabet, used by every text format.
///
/// Words print as space separated names with a trailing apostrophe for
/// inverses; the empty word prints as "1".
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Symbol s) const { return names_.at(s); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  /// Throws std::out_of_range for unknown names.
  Symbol symbol(std::string_view name) const;
  bool contains(std::string_view name) const noexcept;

  /// Parses whitespace separated tokens like "b b a'". Also accepts "1" (or
  /// nothing) for the empty word. Throws ParseError on unknown names.
  GroupWord parse(std::string_view text) const;
  GroupWord parse_tokens(std::span<const std::string> tokens) const;
  std::string format(const GroupWord& w) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;
};

/// Valid state or generator name: [A-Za-z_][A-Za-z0-9_]*.
bool is_identifier(std::string_view s) noexcept;

}  // namespace rnlab

template <>
struct std::hash<rnlab::GroupWord> : rnlab::GroupWordHash {};
