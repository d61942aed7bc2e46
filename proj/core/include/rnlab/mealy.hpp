#pragma once

#include <cstddef>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "rnlab/permutation.hpp"
#include "rnlab/word.hpp"

namespace rnlab {

inline constexpr std::size_t kDefaultMaxTuples = 1'000'000;

/// A vertex of the rooted d-ary tree: a finite word over {1, ..., d}.
class TreeVertex {
 public:
  TreeVertex() = default;
  explicit TreeVertex(int arity, std::vector<int> letters = {});
  /// Digit string such as "133"; "" or "-" is the root. Requires d <= 9.
  static TreeVertex parse(int arity, std::string_view digits);

  int arity() const noexcept { return arity_; }
  std::size_t depth() const noexcept { return letters_.size(); }
  bool is_root() const noexcept { return letters_.empty(); }
  const std::vector<int>& letters() const noexcept { return letters_; }
  int operator[](std::size_t i) const { return letters_[i]; }

  TreeVertex child(int letter) const;
  TreeVertex concat(const TreeVertex& suffix) const;
  bool is_prefix_of(const TreeVertex& other) const noexcept;
  /// The part of `other` after this prefix. Requires is_prefix_of(other).
  TreeVertex suffix_of(const TreeVertex& other) const;

  /// Digit string, "-" for the root.
  std::string to_string() const;

  friend bool operator==(const TreeVertex&, const TreeVertex&) = default;
  friend auto operator<=>(const TreeVertex&, const TreeVertex&) = default;

 private:
  int arity_ = 2;
  std::vector<int> letters_;
};

/// A finite-state tree automorphism presentation: each state s carries its
/// root permutation and one section word per letter, s <-> perm(s)(s_1, ..., s_d).
///
/// Sections are words over the states rather than single states, so a
/// recursion like a <-> alpha(a, a, ba) is stored verbatim.
class MealyMachine {
 public:
  struct State {
    std::string name;
    Permutation perm;
    std::vector<GroupWord> sections;  // sections[i-1] is the section at letter i
  };

  /// Validates: arity >= 2, every perm of degree arity, every section word
  /// over declared states, one section per letter. Throws std::invalid_argument.
  MealyMachine(int arity, std::vector<State> states);

  int arity() const noexcept { return arity_; }
  std::size_t num_states() const noexcept { return states_.size(); }
  const State& state(Symbol s) const { return states_.at(s); }
  const std::vector<State>& states() const noexcept { return states_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }

  Permutation root_permutation(Letter x) const;
  GroupWord section(Letter x, int letter) const;

  /// rho(w): composes the letters' permutations, rightmost first.
  Permutation root_permutation(const GroupWord& w) const;
  /// w_i with w(i k) = rho(w)(i) w_i(k); uses (gh)_i = g_{rho(h)(i)} h_i.
  GroupWord section(const GroupWord& w, int letter) const;
  GroupWord section_along(const GroupWord& w, const TreeVertex& path) const;
  TreeVertex act(const GroupWord& w, const TreeVertex& v) const;

  /// Decides whether w acts trivially by exploring every word reachable by
  /// repeated sectioning. Throws SearchBudgetExceeded past max_words.
  bool is_trivial(const GroupWord& w, std::size_t max_words = kDefaultMaxTuples) const;
  bool equal(const GroupWord& u, const GroupWord& v, std::size_t max_words = kDefaultMaxTuples) const;

  friend bool operator==(const MealyMachine&, const MealyMachine&);

 private:
  void check_letter(int letter) const;

  int arity_;
  std::vector<State> states_;
  Alphabet alphabet_;
  std::vector<Permutation> inverse_perms_;
};

using MachinePtr = std::shared_ptr<const MealyMachine>;

/// A group element: a reduced word over the states of a shared machine.
struct Element {
  MachinePtr machine;
  GroupWord word;

  /// Parses a word in the machine's state names, e.g. "b b a'".
  static Element parse(MachinePtr machine, std::string_view text);
  std::string to_string() const { return machine->alphabet().format(word); }

  Element operator*(const Element& o) const;
  Element inverse() const { return {machine, word.inverse()}; }

  friend bool operator==(const Element& x, const Element& y) { return x.machine == y.machine && x.word == y.word; }
};

Permutation root_permutation(const Element& g);
/// Throws LetterError unless 1 <= letter <= d.
Element section(const Element& g, int letter);
TreeVertex act(const Element& g, const TreeVertex& v);
bool is_trivial(const Element& g, std::size_t max_tuples = kDefaultMaxTuples);
bool elements_equal(const Element& g, const Element& h, std::size_t max_tuples = kDefaultMaxTuples);

/// Representatives of the states of all seeds (seeds included), pairwise
/// distinct as automorphisms, in discovery order. Throws
/// SearchBudgetExceeded once more than max_states classes are found.
std::vector<Element> state_closure(const std::vector<Element>& seeds, std::size_t max_states = 10'000,
                                   std::size_t max_tuples = kDefaultMaxTuples);

/// The persistent extension to arity d+1: every root permutation fixes the new
/// letter and every state's section there is the state itself.
MealyMachine extend_persistent(const MealyMachine& m);

/// Exact state-level check (perms fix d, s_d = s) together with a sampled
/// word-level check: section(g, d) == g for `samples` random words of
/// length <= 6 drawn with `seed`.
bool is_persistent(const MealyMachine& m, std::size_t samples = 200, unsigned seed = 0);

/// Draws up to max_length uniform signed letters and freely reduces them.
GroupWord random_word(std::size_t num_symbols, std::size_t max_length, std::mt19937_64& rng);
TreeVertex random_vertex(int arity, std::size_t depth, std::mt19937_64& rng);

}  // namespace rnlab
