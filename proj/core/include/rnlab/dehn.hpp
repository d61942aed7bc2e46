#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rnlab/npower_rational.hpp"
#include "rnlab/word.hpp"

namespace rnlab::dehn {

/// <generators | relators>; relators are reduced and non-empty.
struct Presentation {
  Alphabet generators;
  std::vector<GroupWord> relators;
};

/// <a, b | a b a^-1 b^-n>, symbols as in rnlab::bs.
Presentation bs_presentation(int n);

enum class AreaMethod { oracle, strategy };

/// `exact` is false when the value is only an upper bound: always for the
/// strategy, and for the oracle when the intermediate length cap pruned a
/// branch below the reported depth.
struct AreaResult {
  GroupWord word;
  BigInt area;
  AreaMethod method = AreaMethod::oracle;
  bool exact = false;
  std::size_t nodes = 0;
};

std::size_t word_length(const GroupWord& w);
bool is_relation(const GroupWord& w, int n);

/// [a^k b a^-k, b] = a^k b a^-k b a^k b^-1 a^-k b^-1, of length 4k + 4.
GroupWord witness_word(int k, int n);

/// Relator applications used by the corridor strategy on w: repeatedly
/// rewrite the leftmost a b^m a^-1 to b^(nm) at cost |m| (and a^-1 b^m a to
/// b^(m/n) when n | m, at cost |m/n|), then freely reduce. Throws
/// std::domain_error if the word is not emptied this way.
BigInt corridor_area(const GroupWord& w, int n);
/// corridor_area(witness_word(k, n)), an upper bound on its area.
AreaResult area_strategy(int k, int n);
/// 2 (n^k - 1) / (n - 1).
BigInt strategy_closed_form(int k, int n);

struct AreaLimits {
  std::size_t max_area = 6;
  std::size_t max_len = 20;
};

/// Minimum number of relator applications that trivialize w.
///
/// Iterative deepening over cyclically reduced words taken up to rotation
/// and inversion (area is invariant under both). A move inserts a cyclic
/// rotation of a relator or its inverse at some point and cancels at least
/// one letter. Words longer than max_len are not explored. Throws
/// AreaBudgetExceeded if nothing is found within max_area moves.
AreaResult area_oracle(const Presentation& pres, const GroupWord& w, AreaLimits limits = {});
/// Same, for BS(1,n). Throws std::invalid_argument unless is_relation(w, n).
AreaResult area_oracle(const GroupWord& w, int n, AreaLimits limits = {});

struct GrowthRow {
  int k = 0;
  std::size_t length = 0;
  BigInt area;
};

std::vector<GrowthRow> growth_table(int n, int k_max);

/// num / den rounded half up to 4 decimals, e.g. "2.1429".
std::string ratio_string(const BigInt& num, const BigInt& den);
std::string format_growth_text(const std::vector<GrowthRow>& rows);
std::string format_growth_csv(const std::vector<GrowthRow>& rows);

}  // namespace rnlab::dehn
