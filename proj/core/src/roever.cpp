#include "rnlab/roever.hpp"

#include <algorithm>
#include <stdexcept>

#include "rnlab/errors.hpp"
#include "rnlab/npower_rational.hpp"

namespace rnlab {

std::string PrefixCode::violation() const {
  if (prefixes.empty()) return "prefix code is empty";
  std::size_t max_depth = 0;
  for (const auto& p : prefixes) {
    if (p.arity() != arity) return "prefix " + p.to_string() + " has the wrong arity";
    max_depth = std::max(max_depth, p.depth());
  }
  for (std::size_t i = 0; i < prefixes.size(); ++i) {
    for (std::size_t j = 0; j < prefixes.size(); ++j) {
      if (i != j && prefixes[i].is_prefix_of(prefixes[j])) {
        return "not an antichain: " + prefixes[i].to_string() + " is a prefix of " + prefixes[j].to_string();
      }
    }
  }
  // An antichain is complete iff its cone measures sum to 1.
  BigInt total = 0;
  for (const auto& p : prefixes) total += ipow(arity, static_cast<unsigned long>(max_depth - p.depth()));
  if (total != ipow(arity, static_cast<unsigned long>(max_depth))) return "not complete: the cones do not cover the boundary";
  return {};
}

void PrefixCode::expand(std::size_t index) {
  const TreeVertex p = prefixes.at(index);
  prefixes.erase(prefixes.begin() + static_cast<std::ptrdiff_t>(index));
  std::vector<TreeVertex> kids;
  for (int i = 1; i <= arity; ++i) kids.push_back(p.child(i));
  prefixes.insert(prefixes.begin() + static_cast<std::ptrdiff_t>(index), kids.begin(), kids.end());
}

PrefixCode RNElement::domain_code() const {
  PrefixCode c{arity(), {}};
  for (const auto& e : entries) c.prefixes.push_back(e.dom);
  return c;
}

PrefixCode RNElement::range_code() const {
  PrefixCode c{arity(), {}};
  for (const auto& e : entries) c.prefixes.push_back(e.ran);
  return c;
}

Validation rn_validate(const RNElement& e) {
  if (!e.machine) return {false, "element has no machine"};
  if (e.entries.empty()) return {false, "element has no entries"};
  if (auto v = e.domain_code().violation(); !v.empty()) return {false, "domain code " + v};
  if (auto v = e.range_code().violation(); !v.empty()) return {false, "range code " + v};
  for (const auto& entry : e.entries) {
    for (const Letter& x : entry.label) {
      if (x.symbol >= e.machine->num_states()) return {false, "label uses a symbol that is not a machine state"};
    }
  }
  return {};
}

RNElement rn_identity(MachinePtr machine) { return rn_from_group(std::move(machine), {}); }

RNElement rn_from_group(MachinePtr machine, GroupWord g) {
  const int d = machine->arity();
  return {std::move(machine), {{TreeVertex(d), TreeVertex(d), std::move(g)}}};
}

TreeVertex rn_apply(const RNElement& e, const TreeVertex& v) {
  for (const auto& entry : e.entries) {
    if (entry.dom.is_prefix_of(v)) {
      return entry.ran.concat(e.machine->act(entry.label, entry.dom.suffix_of(v)));
    }
  }
  throw NeedDeeperPrefix("no domain prefix is an initial segment of " + v.to_string());
}

namespace {

void expand_into(const MealyMachine& m, const RNEntry& entry, std::vector<RNEntry>& out) {
  const Permutation rho = m.root_permutation(entry.label);
  for (int i = 1; i <= m.arity(); ++i) {
    out.push_back({entry.dom.child(i), entry.ran.child(rho(i)), m.section(entry.label, i)});
  }
}

}  // namespace

RNElement rn_expand_entry(const RNElement& e, std::size_t index) {
  if (index >= e.entries.size()) throw std::out_of_range("entry index out of range");
  RNElement out{e.machine, {}};
  for (std::size_t k = 0; k < e.entries.size(); ++k) {
    if (k == index) {
      expand_into(*e.machine, e.entries[k], out.entries);
    } else {
      out.entries.push_back(e.entries[k]);
    }
  }
  return out;
}

RNElement rn_compose(const RNElement& f, const RNElement& h) {
  if (f.arity() != h.arity() || !(f.machine == h.machine || *f.machine == *h.machine)) {
    throw std::invalid_argument("rn_compose needs elements over the same machine");
  }
  const MealyMachine& m = *f.machine;
  RNElement out{f.machine, {}};
  std::vector<RNEntry> stack(h.entries.rbegin(), h.entries.rend());
  while (!stack.empty()) {
    RNEntry cur = std::move(stack.back());
    stack.pop_back();
    const RNEntry* host = nullptr;
    for (const auto& fe : f.entries) {
      if (fe.dom.is_prefix_of(cur.ran)) {
        host = &fe;
        break;
      }
    }
    if (host == nullptr) {
      // cur.ran is strictly shorter than the f-domain cones below it.
      std::vector<RNEntry> kids;
      expand_into(m, cur, kids);
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(std::move(*it));
      continue;
    }
    const TreeVertex rest = host->dom.suffix_of(cur.ran);
    out.entries.push_back({cur.dom, host->ran.concat(m.act(host->label, rest)),
                           m.section_along(host->label, rest) * cur.label});
  }
  return out;
}

RNElement rn_inverse(const RNElement& e) {
  RNElement out{e.machine, {}};
  out.entries.reserve(e.entries.size());
  for (const auto& entry : e.entries) out.entries.push_back({entry.ran, entry.dom, entry.label.inverse()});
  return out;
}

bool rn_is_identity(const RNElement& e, std::size_t max_tuples) {
  // The identity sends each cone onto itself, so dom == ran is forced; the
  // label must then act trivially on the whole subtree.
  for (const auto& entry : e.entries) {
    if (entry.dom != entry.ran) return false;
  }
  for (const auto& entry : e.entries) {
    if (!e.machine->is_trivial(entry.label, max_tuples)) return false;
  }
  return true;
}

bool rn_equal(const RNElement& x, const RNElement& y, std::size_t max_tuples) {
  return rn_is_identity(rn_compose(x, rn_inverse(y)), max_tuples);
}

RNElement iota(const TreeVertex& w, const RNElement& h) {
  const int d = h.arity();
  if (w.arity() != d) throw std::invalid_argument("prefix arity does not match the element");
  RNElement out{h.machine, {}};
  // Complement of the cone of w: siblings of every vertex on the path to w.
  TreeVertex path(d);
  for (int x : w.letters()) {
    for (int j = 1; j <= d; ++j) {
      if (j != x) {
        const TreeVertex c = path.child(j);
        out.entries.push_back({c, c, {}});
      }
    }
    path = path.child(x);
  }
  for (const auto& entry : h.entries) out.entries.push_back({w.concat(entry.dom), w.concat(entry.ran), entry.label});
  return out;
}

RNElement iota(const TreeVertex& w, MachinePtr machine, const GroupWord& g) {
  return iota(w, rn_from_group(std::move(machine), g));
}

namespace {

// Leaves of the path to w, plus w itself last.
std::vector<TreeVertex> code_around(const TreeVertex& w) {
  std::vector<TreeVertex> code;
  TreeVertex path(w.arity());
  for (int x : w.letters()) {
    for (int j = 1; j <= w.arity(); ++j) {
      if (j != x) code.push_back(path.child(j));
    }
    path = path.child(x);
  }
  code.push_back(w);
  return code;
}

void grow_to(std::vector<TreeVertex>& code, std::size_t size) {
  // Expands the first non-target leaf; the target stays last.
  while (code.size() < size) {
    const TreeVertex leaf = code.front();
    code.erase(code.begin());
    for (int i = leaf.arity(); i >= 1; --i) code.insert(code.begin(), leaf.child(i));
  }
}

}  // namespace

RNElement conjugator(const TreeVertex& w, const TreeVertex& w_prime, MachinePtr machine) {
  const int d = machine->arity();
  if (w.arity() != d || w_prime.arity() != d) throw std::invalid_argument("prefix arity does not match the machine");
  if (w.is_root() != w_prime.is_root()) throw std::invalid_argument("conjugator needs both prefixes non-empty");
  auto dom = code_around(w);
  auto ran = code_around(w_prime);
  const std::size_t size = std::max(dom.size(), ran.size());
  grow_to(dom, size);
  grow_to(ran, size);
  RNElement out{std::move(machine), {}};
  for (std::size_t i = 0; i < size; ++i) out.entries.push_back({dom[i], ran[i], {}});
  return out;
}

RNElement cone_swap(MachinePtr machine, int i, int j) {
  const int d = machine->arity();
  if (i < 1 || i > d || j < 1 || j > d) throw LetterError("cone_swap letter out of range");
  RNElement out{std::move(machine), {}};
  for (int x = 1; x <= d; ++x) {
    const int y = x == i ? j : (x == j ? i : x);
    out.entries.push_back({TreeVertex(d, {x}), TreeVertex(d, {y}), {}});
  }
  return out;
}

bool verify_sigma_identity(Symbol s, MachinePtr machine, std::size_t max_tuples) {
  const int d = machine->arity();
  const MealyMachine& m = *machine;
  const GroupWord gs{gen(s)};
  const TreeVertex one(d, {1});

  RNElement sigma{machine, {}};
  const Permutation rho = m.root_permutation(gs);
  for (int i = 1; i <= d; ++i) sigma.entries.push_back({one.child(i), one.child(rho(i)), {}});
  for (int j = 2; j <= d; ++j) sigma.entries.push_back({TreeVertex(d, {j}), TreeVertex(d, {j}), {}});

  RNElement rhs = sigma;
  for (int i = 1; i <= d; ++i) rhs = rn_compose(rhs, iota(one.child(i), machine, m.section(gs, i)));
  return rn_equal(iota(one, machine, gs), rhs, max_tuples);
}

}  // namespace rnlab
