#pragma once

#include <string>
#include <vector>

#include "rnlab/mealy.hpp"
#include "rnlab/npower_rational.hpp"
#include "rnlab/permutation.hpp"
#include "rnlab/word.hpp"

namespace rnlab::bs {

// Words for BS(1,n) = <a, b | a b a^-1 = b^n> use symbol 0 for a and 1 for b.
inline constexpr Symbol kA = 0;
inline constexpr Symbol kB = 1;

const Alphabet& alphabet();
/// Parses "a b' b" style text over {a, b}.
GroupWord parse(std::string_view text);
std::string format(const GroupWord& w);

/// The defining relator a b a^-1 b^-n.
GroupWord relator(int n);
/// b^-1 a^-1 b^n a, trivial iff the recursion respects the relation.
GroupWord relation_check_word(int n);

/// (2 n+1)(3 n)(4 n-1)... on {1, ..., n+1}; fixes 1.
Permutation build_alpha(int n);
/// The (n+1)-cycle (1 2 ... n+1).
Permutation build_beta(int n);

/// States {a, b} on the (n+1)-ary tree with
///   a <-> alpha(a, a, ba, b^2 a, ..., b^(n-1) a),  b <-> beta(1, ..., 1, b).
MachinePtr build_machine(int n);
/// extend_persistent(build_machine(n)), on the (n+2)-ary tree.
MachinePtr build_persistent_machine(int n);

/// Re-labels a word over {a, b} onto the symbols of a machine whose states
/// include ones named "a" and "b" (and back).
GroupWord to_machine(const GroupWord& w, const MealyMachine& m);
GroupWord from_machine(const GroupWord& w, const MealyMachine& m);

/// The affine map x -> n^p x + offset. a is x -> n x and b is x -> x + 1,
/// a faithful model of BS(1,n) in which a b a^-1 = b^n holds.
struct AffineForm {
  long long p = 0;
  NPowerRational offset;

  static AffineForm identity(int n) { return {0, NPowerRational(n)}; }
  int base() const noexcept { return offset.base(); }
  /// (*this) o g, i.e. apply g first.
  AffineForm after(const AffineForm& g) const;
  AffineForm inverse() const;
  std::string to_string() const;

  friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

AffineForm affine_of_word(const GroupWord& w, int n);
bool bs_equal(const GroupWord& u, const GroupWord& v, int n);

/// Exponents (k, q, l) with w = a^-k b^q a^l, k, l >= 0 and k minimal.
struct NormalForm {
  long long k = 0;
  BigInt q;
  long long l = 0;
};
NormalForm normal_form(const GroupWord& w, int n);

/// Image in G/[G,G] = Z + Z/(n-1).
struct AbelImage {
  long long a_exp = 0;
  long long b_exp = 0;  // in [0, n-1); always 0 when n == 2

  AbelImage plus(const AbelImage& o, int n) const;
  /// The torsion part is the Z/(n-1) factor.
  bool finite_order() const noexcept { return a_exp == 0; }
  friend bool operator==(const AbelImage&, const AbelImage&) = default;
};

AbelImage abelianize(const GroupWord& w, int n);

struct WeakDiagonalLine {
  std::string generator;
  int letter = 0;
  GroupWord quotient;  // section(s, letter) * s^-1, over {a, b}
  AbelImage image;
};

struct WeakDiagonalReport {
  std::vector<WeakDiagonalLine> lines;
  bool verdict = false;
};

/// For each generator s and letter i, abelianizes s_i s^-1 and checks that
/// it has finite order. `gens` are state names of the machine.
WeakDiagonalReport check_weakly_diagonal(const MealyMachine& m, const std::vector<std::string>& gens, int n);

}  // namespace rnlab::bs
