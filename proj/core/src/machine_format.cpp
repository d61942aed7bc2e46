#include "rnlab/machine_format.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "rnlab/errors.hpp"

namespace rnlab {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{number, {}};
    for (std::string tok; ls >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

int parse_int(const std::string& tok, std::size_t line) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + tok + "'", line);
  }
}

struct PendingState {
  std::string name;
  std::size_t line;
  std::optional<std::vector<int>> perm;
  std::size_t perm_line = 0;
  std::vector<std::optional<std::vector<std::string>>> sections;
  std::vector<std::size_t> section_lines;
};

}  // namespace

MealyMachine parse_machine(std::string_view text) {
  const auto lines = tokenize(text);
  std::optional<int> arity;
  std::vector<PendingState> pending;

  for (const Line& line : lines) {
    const auto& t = line.tokens;
    const std::string& kw = t.front();
    if (kw == "arity") {
      if (arity) throw ParseError("duplicate 'arity' line", line.number);
      if (t.size() != 2) throw ParseError("'arity' takes one value", line.number);
      arity = parse_int(t[1], line.number);
      if (*arity < 2) throw ParseError("arity must be >= 2", line.number);
    } else if (kw == "state") {
      if (!arity) throw ParseError("'state' before 'arity'", line.number);
      if (t.size() != 2) throw ParseError("'state' takes one name", line.number);
      if (!is_identifier(t[1]) || t[1] == "1") throw ParseError("invalid state name '" + t[1] + "'", line.number);
      for (const auto& p : pending) {
        if (p.name == t[1]) throw ParseError("duplicate state '" + t[1] + "'", line.number);
      }
      const auto d = static_cast<std::size_t>(*arity);
      pending.push_back({t[1], line.number, std::nullopt, 0, std::vector<std::optional<std::vector<std::string>>>(d),
                         std::vector<std::size_t>(d, 0)});
    } else if (kw == "perm") {
      if (pending.empty()) throw ParseError("'perm' outside a state block", line.number);
      auto& st = pending.back();
      if (st.perm) throw ParseError("duplicate 'perm' for state '" + st.name + "'", line.number);
      if (static_cast<int>(t.size()) != *arity + 1) {
        throw ParseError("'perm' needs " + std::to_string(*arity) + " images", line.number);
      }
      std::vector<int> images;
      for (std::size_t i = 1; i < t.size(); ++i) images.push_back(parse_int(t[i], line.number));
      st.perm = std::move(images);
      st.perm_line = line.number;
    } else if (kw == "section") {
      if (pending.empty()) throw ParseError("'section' outside a state block", line.number);
      auto& st = pending.back();
      if (t.size() < 3) throw ParseError("'section' needs a letter and a word", line.number);
      const int letter = parse_int(t[1], line.number);
      if (letter < 1 || letter > *arity) {
        throw ParseError("section letter " + std::to_string(letter) + " outside {1,...," + std::to_string(*arity) + "}",
                         line.number);
      }
      auto& slot = st.sections[static_cast<std::size_t>(letter - 1)];
      if (slot) throw ParseError("duplicate section " + std::to_string(letter) + " for state '" + st.name + "'", line.number);
      slot = std::vector<std::string>(t.begin() + 2, t.end());
      st.section_lines[static_cast<std::size_t>(letter - 1)] = line.number;
    } else {
      throw ParseError("unknown keyword '" + kw + "'", line.number);
    }
  }

  if (!arity) throw ParseError("missing 'arity' line", 0);
  if (pending.empty()) throw ParseError("no states declared", 0);

  std::vector<std::string> names;
  for (const auto& p : pending) names.push_back(p.name);
  const Alphabet alphabet(names);

  std::vector<MealyMachine::State> states;
  for (const auto& p : pending) {
    if (!p.perm) throw ParseError("state '" + p.name + "' has no 'perm'", p.line);
    MealyMachine::State st;
    st.name = p.name;
    try {
      st.perm = Permutation::from_images(*p.perm);
    } catch (const std::invalid_argument& e) {
      throw ParseError("state '" + p.name + "': " + e.what(), p.perm_line);
    }
    for (std::size_t i = 0; i < p.sections.size(); ++i) {
      if (!p.sections[i]) {
        throw ParseError("state '" + p.name + "' is missing section " + std::to_string(i + 1), p.line);
      }
      try {
        st.sections.push_back(alphabet.parse_tokens(*p.sections[i]));
      } catch (const ParseError& e) {
        throw ParseError("state '" + p.name + "' section " + std::to_string(i + 1) + ": " + e.what(),
                         p.section_lines[i]);
      }
    }
    states.push_back(std::move(st));
  }
  return MealyMachine(*arity, std::move(states));
}

std::string serialize_machine(const MealyMachine& m) {
  std::ostringstream out;
  out << "arity " << m.arity() << '\n';
  for (const auto& st : m.states()) {
    out << "state " << st.name << '\n';
    out << "  perm";
    for (int x : st.perm.images()) out << ' ' << x;
    out << '\n';
    for (std::size_t i = 0; i < st.sections.size(); ++i) {
      out << "  section " << i + 1 << ' ' << m.alphabet().format(st.sections[i]) << '\n';
    }
  }
  return out.str();
}

MealyMachine load_machine(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open machine file '" + path + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_machine(buf.str());
}

}  // namespace rnlab
