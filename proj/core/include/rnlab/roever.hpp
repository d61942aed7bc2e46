#pragma once

#include <string>
#include <vector>

#include "rnlab/mealy.hpp"

namespace rnlab {

/// A finite antichain of vertices whose cones partition the boundary.
struct PrefixCode {
  int arity = 2;
  std::vector<TreeVertex> prefixes;

  static PrefixCode trivial(int arity) { return {arity, {TreeVertex(arity)}}; }
  /// Empty string when valid, otherwise the violated invariant.
  std::string violation() const;
  bool valid() const { return violation().empty(); }
  /// Replaces prefixes[index] by its d children, in place.
  void expand(std::size_t index);
};

/// One row of an element table: the cone of `dom` is sent onto the cone of
/// `ran` by dom k -> ran label(k).
struct RNEntry {
  TreeVertex dom;
  TreeVertex ran;
  GroupWord label;

  friend bool operator==(const RNEntry&, const RNEntry&) = default;
};

/// An element of V_d(G) given by a bijection between two complete prefix
/// codes with G-labels. Tables are not reduced; two tables may describe the
/// same homeomorphism, which rn_equal decides.
struct RNElement {
  MachinePtr machine;
  std::vector<RNEntry> entries;

  int arity() const { return machine->arity(); }
  PrefixCode domain_code() const;
  PrefixCode range_code() const;
};

struct Validation {
  bool ok = true;
  std::string diagnostic;
  explicit operator bool() const noexcept { return ok; }
};

/// Checks that domains and ranges are complete prefix codes in bijection
/// and that labels only use machine states.
Validation rn_validate(const RNElement& e);

RNElement rn_identity(MachinePtr machine);
/// Singleton table [(root, root, g)].
RNElement rn_from_group(MachinePtr machine, GroupWord g);

/// Image of a finite prefix. Throws NeedDeeperPrefix when no domain prefix
/// is an initial segment of v.
TreeVertex rn_apply(const RNElement& e, const TreeVertex& v);

/// Replaces entry (u, v, g) by the d entries (u i, v rho(g)(i), g_i).
RNElement rn_expand_entry(const RNElement& e, std::size_t index);

/// f o h: first h, then f. Only entries of h that straddle a finer domain
/// cone of f are expanded.
RNElement rn_compose(const RNElement& f, const RNElement& h);
RNElement rn_inverse(const RNElement& e);

/// True iff e is the identity: every entry maps a cone onto itself with a
/// trivial label. Throws SearchBudgetExceeded from the label tests.
bool rn_is_identity(const RNElement& e, std::size_t max_tuples = kDefaultMaxTuples);
bool rn_equal(const RNElement& x, const RNElement& y, std::size_t max_tuples = kDefaultMaxTuples);

/// Acts like h on the cone of w (after prefixing) and fixes the rest.
RNElement iota(const TreeVertex& w, const RNElement& h);
RNElement iota(const TreeVertex& w, MachinePtr machine, const GroupWord& g);

/// A label-free element mapping w k -> w' k. Both prefixes must be
/// non-empty, or both empty.
RNElement conjugator(const TreeVertex& w, const TreeVertex& w_prime, MachinePtr machine);

/// Swaps the cones of two distinct letters i and j at the root.
RNElement cone_swap(MachinePtr machine, int i, int j);

/// Checks iota_1(s) == sigma o iota_11(s_1) o ... o iota_1d(s_d), where
/// sigma sends 1 i k to 1 rho(s)(i) k and fixes the cones 2, ..., d.
bool verify_sigma_identity(Symbol s, MachinePtr machine, std::size_t max_tuples = kDefaultMaxTuples);

}  // namespace rnlab
