#include "rnlab/word.hpp"

#include <algorithm>
#include <sstream>

#include "rnlab/errors.hpp"

namespace rnlab {

void free_reduce(std::vector<Letter>& letters) {
  std::size_t top = 0;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (top > 0 && letters[top - 1] == letters[i].inverse()) {
      --top;
    } else {
      letters[top++] = letters[i];
    }
  }
  letters.resize(top);
}

GroupWord::GroupWord(std::initializer_list<Letter> letters) : letters_(letters) { free_reduce(letters_); }

GroupWord::GroupWord(std::span<const Letter> letters) : letters_(letters.begin(), letters.end()) {
  free_reduce(letters_);
}

GroupWord::GroupWord(std::vector<Letter> letters) : letters_(std::move(letters)) { free_reduce(letters_); }

GroupWord GroupWord::power(Letter x, long long k) {
  if (k < 0) {
    x = x.inverse();
    k = -k;
  }
  return GroupWord(std::vector<Letter>(static_cast<std::size_t>(k), x));
}

GroupWord GroupWord::inverse() const {
  GroupWord r;
  r.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.letters_.push_back(it->inverse());
  return r;
}

GroupWord GroupWord::pow(long long k) const {
  const GroupWord base = k < 0 ? inverse() : *this;
  const long long e = k < 0 ? -k : k;
  std::vector<Letter> letters;
  letters.reserve(base.length() * static_cast<std::size_t>(e));
  for (long long i = 0; i < e; ++i) letters.insert(letters.end(), base.begin(), base.end());
  return GroupWord(std::move(letters));
}

long long GroupWord::exponent_sum(Symbol s) const noexcept {
  long long sum = 0;
  for (const Letter& x : letters_) {
    if (x.symbol == s) sum += x.sign();
  }
  return sum;
}

GroupWord word_multiply(const GroupWord& u, const GroupWord& v) {
  const auto& a = u.letters();
  const auto& b = v.letters();
  std::size_t cancel = 0;
  while (cancel < a.size() && cancel < b.size() && a[a.size() - 1 - cancel] == b[cancel].inverse()) ++cancel;
  std::vector<Letter> out;
  out.reserve(a.size() + b.size() - 2 * cancel);
  out.insert(out.end(), a.begin(), a.end() - static_cast<std::ptrdiff_t>(cancel));
  out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(cancel), b.end());
  return GroupWord(std::move(out));
}

GroupWord word_inverse(const GroupWord& u) { return u.inverse(); }

std::size_t GroupWordHash::operator()(const GroupWord& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const Letter& x : w) {
    const std::size_t code = (static_cast<std::size_t>(x.symbol) << 1U) | (x.inverted ? 1U : 0U);
    h ^= code + 0x9e3779b97f4a7c15ULL + (h << 6U) + (h >> 2U);
  }
  return h;
}

bool is_identifier(std::string_view s) noexcept {
  if (s.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  if (!alpha(s.front())) return false;
  return std::all_of(s.begin(), s.end(), [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); });
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!is_identifier(names_[i])) throw std::invalid_argument("invalid symbol name '" + names_[i] + "'");
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw std::invalid_argument("duplicate symbol name '" + names_[i] + "'");
    }
  }
}

Symbol Alphabet::symbol(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<Symbol>(i);
  }
  throw std::out_of_range("unknown symbol '" + std::string(name) + "'");
}

bool Alphabet::contains(std::string_view name) const noexcept {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

GroupWord Alphabet::parse(std::string_view text) const {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  return parse_tokens(tokens);
}

GroupWord Alphabet::parse_tokens(std::span<const std::string> tokens) const {
  if (tokens.size() == 1 && tokens.front() == "1") return {};
  std::vector<Letter> letters;
  for (const std::string& tok : tokens) {
    std::string_view name = tok;
    bool inverted = false;
    if (!name.empty() && name.back() == '\'') {
      inverted = true;
      name.remove_suffix(1);
    }
    if (!contains(name)) throw ParseError("unknown symbol '" + std::string(name) + "'", 0);
    letters.push_back({symbol(name), inverted});
  }
  return GroupWord(std::move(letters));
}

std::string Alphabet::format(const GroupWord& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& x : w) {
    if (!out.empty()) out += ' ';
    out += name(x.symbol);
    if (x.inverted) out += '\'';
  }
  return out;
}

}  // namespace rnlab
