#include "rnlab/mealy.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "rnlab/errors.hpp"

namespace rnlab {

// ---------------------------------------------------------------------------
// TreeVertex

TreeVertex::TreeVertex(int arity, std::vector<int> letters) : arity_(arity), letters_(std::move(letters)) {
  if (arity < 2) throw std::invalid_argument("tree arity must be >= 2");
  for (int x : letters_) {
    if (x < 1 || x > arity) {
      throw LetterError("vertex letter " + std::to_string(x) + " outside {1,...," + std::to_string(arity) + "}");
    }
  }
}

TreeVertex TreeVertex::parse(int arity, std::string_view digits) {
  if (arity > 9) throw std::invalid_argument("digit-string vertices need arity <= 9");
  std::vector<int> letters;
  if (digits == "-") return TreeVertex(arity);
  for (char c : digits) {
    if (c < '1' || c > '9') throw ParseError(std::string("bad vertex digit '") + c + "'", 0);
    letters.push_back(c - '0');
  }
  return TreeVertex(arity, std::move(letters));
}

TreeVertex TreeVertex::child(int letter) const {
  auto letters = letters_;
  letters.push_back(letter);
  return TreeVertex(arity_, std::move(letters));
}

TreeVertex TreeVertex::concat(const TreeVertex& suffix) const {
  auto letters = letters_;
  letters.insert(letters.end(), suffix.letters_.begin(), suffix.letters_.end());
  return TreeVertex(arity_, std::move(letters));
}

bool TreeVertex::is_prefix_of(const TreeVertex& other) const noexcept {
  if (letters_.size() > other.letters_.size()) return false;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i] != other.letters_[i]) return false;
  }
  return true;
}

TreeVertex TreeVertex::suffix_of(const TreeVertex& other) const {
  if (!is_prefix_of(other)) throw std::invalid_argument(to_string() + " is not a prefix of " + other.to_string());
  return TreeVertex(arity_, std::vector<int>(other.letters_.begin() + static_cast<std::ptrdiff_t>(depth()),
                                             other.letters_.end()));
}

std::string TreeVertex::to_string() const {
  if (letters_.empty()) return "-";
  std::string out;
  for (int x : letters_) {
    if (arity_ <= 9) {
      out += static_cast<char>('0' + x);
    } else {
      if (!out.empty()) out += '.';
      out += std::to_string(x);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// MealyMachine

namespace {

Alphabet alphabet_of(const std::vector<MealyMachine::State>& states) {
  std::vector<std::string> names;
  names.reserve(states.size());
  for (const auto& s : states) names.push_back(s.name);
  return Alphabet(std::move(names));
}

}  // namespace

MealyMachine::MealyMachine(int arity, std::vector<State> states)
    : arity_(arity), states_(std::move(states)), alphabet_(alphabet_of(states_)) {
  if (arity_ < 2) throw std::invalid_argument("machine arity must be >= 2");
  if (states_.empty()) throw std::invalid_argument("machine needs at least one state");
  for (const auto& s : states_) {
    if (s.perm.degree() != arity_) {
      throw std::invalid_argument("state '" + s.name + "' has a permutation of degree " +
                                  std::to_string(s.perm.degree()) + ", expected " + std::to_string(arity_));
    }
    if (static_cast<int>(s.sections.size()) != arity_) {
      throw std::invalid_argument("state '" + s.name + "' has " + std::to_string(s.sections.size()) +
                                  " sections, expected " + std::to_string(arity_));
    }
    for (const auto& w : s.sections) {
      for (const Letter& x : w) {
        if (x.symbol >= states_.size()) {
          throw std::invalid_argument("state '" + s.name + "' has a section over an undeclared state");
        }
      }
    }
    inverse_perms_.push_back(s.perm.inverse());
  }
}

bool operator==(const MealyMachine& x, const MealyMachine& y) {
  if (x.arity_ != y.arity_ || x.states_.size() != y.states_.size()) return false;
  for (std::size_t i = 0; i < x.states_.size(); ++i) {
    const auto& s = x.states_[i];
    const auto& t = y.states_[i];
    if (s.name != t.name || s.perm != t.perm || s.sections != t.sections) return false;
  }
  return true;
}

void MealyMachine::check_letter(int letter) const {
  if (letter < 1 || letter > arity_) {
    throw LetterError("letter " + std::to_string(letter) + " outside {1,...," + std::to_string(arity_) + "}");
  }
}

Permutation MealyMachine::root_permutation(Letter x) const {
  return x.inverted ? inverse_perms_.at(x.symbol) : states_.at(x.symbol).perm;
}

GroupWord MealyMachine::section(Letter x, int letter) const {
  check_letter(letter);
  const State& s = states_.at(x.symbol);
  if (!x.inverted) return s.sections[static_cast<std::size_t>(letter - 1)];
  // (s^-1)_i = (s_{rho(s)^-1(i)})^-1
  const int j = inverse_perms_[x.symbol](letter);
  return s.sections[static_cast<std::size_t>(j - 1)].inverse();
}

Permutation MealyMachine::root_permutation(const GroupWord& w) const {
  Permutation p = Permutation::identity(arity_);
  for (const Letter& x : w) p = compose(p, root_permutation(x));
  return p;
}

GroupWord MealyMachine::section(const GroupWord& w, int letter) const {
  check_letter(letter);
  const auto& letters = w.letters();
  // Walk right to left; pieces[j] is the section of letters[j] at the point
  // where the suffix after j has moved `letter`.
  std::vector<const GroupWord*> pieces(letters.size());
  std::vector<GroupWord> inverted_storage;
  inverted_storage.reserve(letters.size());
  int cur = letter;
  std::size_t total = 0;
  for (std::size_t j = letters.size(); j-- > 0;) {
    const Letter x = letters[j];
    const State& s = states_[x.symbol];
    if (!x.inverted) {
      pieces[j] = &s.sections[static_cast<std::size_t>(cur - 1)];
      cur = s.perm.images()[static_cast<std::size_t>(cur - 1)];
    } else {
      const int pre = inverse_perms_[x.symbol].images()[static_cast<std::size_t>(cur - 1)];
      inverted_storage.push_back(s.sections[static_cast<std::size_t>(pre - 1)].inverse());
      pieces[j] = &inverted_storage.back();
      cur = pre;
    }
    total += pieces[j]->length();
  }
  std::vector<Letter> out;
  out.reserve(total);
  for (const GroupWord* piece : pieces) out.insert(out.end(), piece->begin(), piece->end());
  return GroupWord(std::move(out));
}

GroupWord MealyMachine::section_along(const GroupWord& w, const TreeVertex& path) const {
  GroupWord cur = w;
  for (int x : path.letters()) cur = section(cur, x);
  return cur;
}

TreeVertex MealyMachine::act(const GroupWord& w, const TreeVertex& v) const {
  if (v.arity() != arity_) throw std::invalid_argument("vertex arity does not match the machine");
  std::vector<int> out;
  out.reserve(v.depth());
  GroupWord cur = w;
  for (int x : v.letters()) {
    out.push_back(root_permutation(cur)(x));
    cur = section(cur, x);
  }
  return TreeVertex(arity_, std::move(out));
}

bool MealyMachine::is_trivial(const GroupWord& w, std::size_t max_words) const {
  std::unordered_set<GroupWord> seen;
  std::deque<GroupWord> queue;
  seen.insert(w);
  queue.push_back(w);
  while (!queue.empty()) {
    GroupWord cur = std::move(queue.front());
    queue.pop_front();
    if (cur.empty()) continue;
    if (!root_permutation(cur).is_identity()) return false;
    for (int i = 1; i <= arity_; ++i) {
      GroupWord next = section(cur, i);
      if (seen.insert(next).second) {
        if (seen.size() > max_words) {
          throw SearchBudgetExceeded("triviality search visited more than " + std::to_string(max_words) +
                                         " section words",
                                     max_words);
        }
        queue.push_back(std::move(next));
      }
    }
  }
  return true;
}

bool MealyMachine::equal(const GroupWord& u, const GroupWord& v, std::size_t max_words) const {
  if (u == v) return true;
  return is_trivial(u * v.inverse(), max_words);
}

// ---------------------------------------------------------------------------
// Element-level API

Element Element::parse(MachinePtr machine, std::string_view text) {
  GroupWord w = machine->alphabet().parse(text);
  return {std::move(machine), std::move(w)};
}

Element Element::operator*(const Element& o) const {
  if (machine != o.machine) throw std::invalid_argument("elements of different machines");
  return {machine, word * o.word};
}

Permutation root_permutation(const Element& g) { return g.machine->root_permutation(g.word); }

Element section(const Element& g, int letter) { return {g.machine, g.machine->section(g.word, letter)}; }

TreeVertex act(const Element& g, const TreeVertex& v) { return g.machine->act(g.word, v); }

bool is_trivial(const Element& g, std::size_t max_tuples) { return g.machine->is_trivial(g.word, max_tuples); }

bool elements_equal(const Element& g, const Element& h, std::size_t max_tuples) {
  if (g.machine != h.machine && !(*g.machine == *h.machine)) {
    throw std::invalid_argument("elements_equal needs elements of the same machine");
  }
  return g.machine->equal(g.word, h.word, max_tuples);
}

std::vector<Element> state_closure(const std::vector<Element>& seeds, std::size_t max_states,
                                   std::size_t max_tuples) {
  std::vector<Element> reps;
  std::deque<Element> queue(seeds.begin(), seeds.end());
  auto known = [&](const Element& g) {
    for (const Element& r : reps) {
      if (r.word == g.word) return true;
    }
    for (const Element& r : reps) {
      if (elements_equal(r, g, max_tuples)) return true;
    }
    return false;
  };
  while (!queue.empty()) {
    Element cur = std::move(queue.front());
    queue.pop_front();
    if (known(cur)) continue;
    reps.push_back(cur);
    if (reps.size() > max_states) {
      throw SearchBudgetExceeded("state closure exceeded " + std::to_string(max_states) + " classes", max_states);
    }
    for (int i = 1; i <= cur.machine->arity(); ++i) queue.push_back(section(cur, i));
  }
  return reps;
}

MealyMachine extend_persistent(const MealyMachine& m) {
  const int d = m.arity() + 1;
  std::vector<MealyMachine::State> states;
  for (std::size_t s = 0; s < m.num_states(); ++s) {
    MealyMachine::State st = m.state(static_cast<Symbol>(s));
    st.perm = st.perm.extended(d);
    st.sections.push_back(GroupWord{gen(static_cast<Symbol>(s))});
    states.push_back(std::move(st));
  }
  return MealyMachine(d, std::move(states));
}

bool is_persistent(const MealyMachine& m, std::size_t samples, unsigned seed) {
  const int d = m.arity();
  for (std::size_t s = 0; s < m.num_states(); ++s) {
    const auto& st = m.state(static_cast<Symbol>(s));
    if (st.perm(d) != d) return false;
    if (st.sections[static_cast<std::size_t>(d - 1)] != GroupWord{gen(static_cast<Symbol>(s))}) return false;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    const GroupWord g = random_word(m.num_states(), 6, rng);
    if (m.section(g, d) != g) return false;
  }
  return true;
}

GroupWord random_word(std::size_t num_symbols, std::size_t max_length, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_length);
  std::uniform_int_distribution<std::size_t> sym_dist(0, num_symbols - 1);
  std::bernoulli_distribution sign_dist(0.5);
  const std::size_t len = len_dist(rng);
  std::vector<Letter> letters;
  letters.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    letters.push_back({static_cast<Symbol>(sym_dist(rng)), sign_dist(rng)});
  }
  return GroupWord(std::move(letters));
}

TreeVertex random_vertex(int arity, std::size_t depth, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(1, arity);
  std::vector<int> letters(depth);
  for (auto& x : letters) x = dist(rng);
  return TreeVertex(arity, std::move(letters));
}

}  // namespace rnlab
