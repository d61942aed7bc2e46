#include "rnlab/rn_format.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "rnlab/errors.hpp"

namespace rnlab {

RNElement parse_rn_element(std::string_view text, MachinePtr machine) {
  const int d = machine->arity();
  if (d > 9) throw ParseError("element files support arity <= 9", 0);
  RNElement e{machine, {}};
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  bool seen_arity = false;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> t;
    for (std::string tok; ls >> tok;) t.push_back(tok);
    if (t.empty()) continue;
    if (t.front() == "arity") {
      if (seen_arity || !e.entries.empty()) throw ParseError("'arity' must come first, once", number);
      if (t.size() != 2 || t[1] != std::to_string(d)) {
        throw ParseError("element arity does not match the machine arity " + std::to_string(d), number);
      }
      seen_arity = true;
      continue;
    }
    if (t.size() < 3) throw ParseError("expected 'dom ran word'", number);
    try {
      RNEntry entry{TreeVertex::parse(d, t[0]), TreeVertex::parse(d, t[1]),
                    machine->alphabet().parse_tokens(std::vector<std::string>(t.begin() + 2, t.end()))};
      e.entries.push_back(std::move(entry));
    } catch (const ParseError& err) {
      throw ParseError(err.what(), number);
    } catch (const std::exception& err) {
      throw ParseError(err.what(), number);
    }
  }
  if (e.entries.empty()) throw ParseError("element has no entries", 0);
  return e;
}

std::string serialize_rn_element(const RNElement& e) {
  std::ostringstream out;
  out << "arity " << e.arity() << '\n';
  for (const auto& entry : e.entries) {
    out << entry.dom.to_string() << ' ' << entry.ran.to_string() << ' ' << e.machine->alphabet().format(entry.label)
        << '\n';
  }
  return out.str();
}

RNElement load_rn_element(const std::string& path, MachinePtr machine) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open element file '" + path + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_rn_element(buf.str(), std::move(machine));
}

}  // namespace rnlab
