#include "rnlab/dehn.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "rnlab/bs_selfsim.hpp"
#include "rnlab/errors.hpp"

namespace rnlab::dehn {

using bs::kA;
using bs::kB;

Presentation bs_presentation(int n) { return {bs::alphabet(), {bs::relator(n)}}; }

std::size_t word_length(const GroupWord& w) { return w.length(); }

bool is_relation(const GroupWord& w, int n) { return bs::bs_equal(w, {}, n); }

GroupWord witness_word(int k, int n) {
  if (k < 1) throw std::invalid_argument("witness_word needs k >= 1");
  if (n < 2) throw std::invalid_argument("BS(1,n) needs n >= 2");
  const GroupWord ak = GroupWord::power(gen(kA), k);
  const GroupWord conj = ak * GroupWord{gen(kB)} * ak.inverse();
  const GroupWord b{gen(kB)};
  return conj * b * conj.inverse() * b.inverse();
}

// ---------------------------------------------------------------------------
// Corridor strategy

namespace {

struct Syllable {
  Symbol symbol;
  BigInt exp;
};

void merge(std::vector<Syllable>& s) {
  std::vector<Syllable> out;
  for (auto& x : s) {
    if (x.exp == 0) continue;
    if (!out.empty() && out.back().symbol == x.symbol) {
      out.back().exp += x.exp;
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(std::move(x));
    }
  }
  s = std::move(out);
}

}  // namespace

BigInt corridor_area(const GroupWord& w, int n) {
  if (n < 2) throw std::invalid_argument("BS(1,n) needs n >= 2");
  std::vector<Syllable> s;
  for (const Letter& x : w) s.push_back({x.symbol, x.inverted ? -1 : 1});
  merge(s);
  BigInt cost = 0;
  for (;;) {
    bool moved = false;
    for (std::size_t i = 1; i + 1 < s.size() && !moved; ++i) {
      if (s[i].symbol != kB || s[i - 1].symbol != kA || s[i + 1].symbol != kA) continue;
      if (s[i - 1].exp > 0 && s[i + 1].exp < 0) {
        cost += abs(s[i].exp);
        s[i].exp *= n;
        s[i - 1].exp -= 1;
        s[i + 1].exp += 1;
        moved = true;
      } else if (s[i - 1].exp < 0 && s[i + 1].exp > 0 && s[i].exp % n == 0) {
        s[i].exp /= n;
        cost += abs(s[i].exp);
        s[i - 1].exp += 1;
        s[i + 1].exp -= 1;
        moved = true;
      }
    }
    if (!moved) break;
    merge(s);
  }
  if (!s.empty()) throw std::domain_error("corridor strategy cannot empty this word");
  return cost;
}

BigInt strategy_closed_form(int k, int n) {
  return 2 * (ipow(n, static_cast<unsigned long>(k)) - 1) / (n - 1);
}

AreaResult area_strategy(int k, int n) {
  AreaResult r;
  r.word = witness_word(k, n);
  r.area = corridor_area(r.word, n);
  r.method = AreaMethod::strategy;
  r.exact = false;
  return r;
}

// ---------------------------------------------------------------------------
// Exact oracle

namespace {

// Letters packed into chars: 2*symbol + inverted, so x ^ 1 is the inverse.
using Code = std::string;

char pack(Letter x) { return static_cast<char>(2 * x.symbol + (x.inverted ? 1 : 0)); }
char inv_code(char c) { return static_cast<char>(c ^ 1); }

Code encode(const GroupWord& w) {
  Code c;
  for (const Letter& x : w) c.push_back(pack(x));
  return c;
}

Code invert(const Code& c) {
  Code r(c.rbegin(), c.rend());
  for (char& x : r) x = inv_code(x);
  return r;
}

Code cyclic_reduce(const Code& in) {
  Code s;
  s.reserve(in.size());
  for (char c : in) {
    if (!s.empty() && s.back() == inv_code(c)) {
      s.pop_back();
    } else {
      s.push_back(c);
    }
  }
  std::size_t lo = 0;
  std::size_t hi = s.size();
  while (hi - lo >= 2 && s[lo] == inv_code(s[hi - 1])) {
    ++lo;
    --hi;
  }
  return s.substr(lo, hi - lo);
}

Code min_rotation(const Code& s) {
  Code best = s;
  Code doubled = s + s;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (doubled.compare(i, s.size(), best) < 0) best = doubled.substr(i, s.size());
  }
  return best;
}

// Canonical representative of a cyclic word up to rotation and inversion.
Code canonical(const Code& cyc) {
  if (cyc.empty()) return cyc;
  return std::min(min_rotation(cyc), min_rotation(invert(cyc)));
}

class AreaSearch {
 public:
  AreaSearch(const Presentation& pres, AreaLimits limits) : limits_(limits) {
    for (const GroupWord& r : pres.relators) {
      if (r.empty()) throw std::invalid_argument("relators must be non-empty");
      for (const Code& base : {cyclic_reduce(encode(r)), cyclic_reduce(invert(encode(r)))}) {
        for (std::size_t i = 0; i < base.size(); ++i) {
          Code rot = base.substr(i) + base.substr(0, i);
          if (std::find(rotations_.begin(), rotations_.end(), rot) == rotations_.end()) rotations_.push_back(rot);
        }
        unit_area_.insert(canonical(base));
      }
    }
  }

  // Returns the depth found; sets exact_.
  std::size_t run(const Code& start) {
    bool cap_before = false;
    for (std::size_t depth = 0; depth <= limits_.max_area; ++depth) {
      cap_hit_ = false;
      if (dfs(start, depth)) {
        exact_ = !cap_before;
        return depth;
      }
      cap_before = cap_before || cap_hit_;
    }
    throw AreaBudgetExceeded("no filling with at most " + std::to_string(limits_.max_area) + " relator applications" +
                                 (cap_before ? " within the length cap " + std::to_string(limits_.max_len) : ""),
                             limits_.max_area);
  }

  bool exact() const noexcept { return exact_; }
  std::size_t nodes() const noexcept { return nodes_; }

 private:
  bool dfs(const Code& word, std::size_t budget) {
    ++nodes_;
    if (word.empty()) return true;
    if (budget == 0) return false;
    if (budget == 1) return unit_area_.contains(word);
    if (auto it = failed_.find(word); it != failed_.end() && it->second >= budget) return false;

    std::vector<Code> kids;
    std::unordered_set<Code> seen;
    const std::size_t m = word.size();
    for (std::size_t p = 0; p < m; ++p) {
      const Code t = word.substr(p) + word.substr(0, p);
      for (const Code& r : rotations_) {
        // r sits between t.back() and t.front(); require a cancellation.
        if (r.back() != inv_code(t.front()) && r.front() != inv_code(t.back())) continue;
        Code child = cyclic_reduce(r + t);
        if (child.size() > limits_.max_len) {
          cap_hit_ = true;
          continue;
        }
        child = canonical(child);
        if (seen.insert(child).second) kids.push_back(std::move(child));
      }
    }
    std::stable_sort(kids.begin(), kids.end(), [](const Code& x, const Code& y) { return x.size() < y.size(); });
    for (const Code& child : kids) {
      if (dfs(child, budget - 1)) return true;
    }
    failed_[word] = std::max(failed_[word], budget);
    return false;
  }

  AreaLimits limits_;
  std::vector<Code> rotations_;
  std::unordered_set<Code> unit_area_;
  std::unordered_map<Code, std::size_t> failed_;
  bool cap_hit_ = false;
  bool exact_ = false;
  std::size_t nodes_ = 0;
};

}  // namespace

AreaResult area_oracle(const Presentation& pres, const GroupWord& w, AreaLimits limits) {
  if (pres.generators.size() > 60) throw std::invalid_argument("area_oracle supports at most 60 generators");
  AreaSearch search(pres, limits);
  AreaResult r;
  r.word = w;
  r.method = AreaMethod::oracle;
  r.area = search.run(canonical(cyclic_reduce(encode(w))));
  r.exact = search.exact();
  r.nodes = search.nodes();
  return r;
}

AreaResult area_oracle(const GroupWord& w, int n, AreaLimits limits) {
  if (!is_relation(w, n)) throw std::invalid_argument("word is not a relation of BS(1," + std::to_string(n) + ")");
  return area_oracle(bs_presentation(n), w, limits);
}

// ---------------------------------------------------------------------------
// Growth table

std::vector<GrowthRow> growth_table(int n, int k_max) {
  if (k_max < 2) throw std::invalid_argument("growth_table needs k_max >= 2");
  std::vector<GrowthRow> rows;
  for (int k = 1; k <= k_max; ++k) {
    const AreaResult r = area_strategy(k, n);
    rows.push_back({k, word_length(r.word), r.area});
  }
  return rows;
}

std::string ratio_string(const BigInt& num, const BigInt& den) {
  if (den <= 0 || num < 0) throw std::invalid_argument("ratio_string needs num >= 0, den > 0");
  const BigInt scaled = (2 * num * 10000 + den) / (2 * den);
  const BigInt whole = scaled / 10000;
  const BigInt frac = scaled % 10000;
  std::string f = frac.str();
  return whole.str() + "." + std::string(4 - f.size(), '0') + f;
}

std::string format_growth_text(const std::vector<GrowthRow>& rows) {
  std::vector<std::string> areas;
  std::size_t width = 4;
  for (const auto& r : rows) {
    areas.push_back(r.area.str());
    width = std::max(width, areas.back().size());
  }
  std::ostringstream out;
  out << std::setw(4) << "k" << "  " << std::setw(6) << "length" << "  " << std::setw(static_cast<int>(width))
      << "area" << "  " << "ratio" << '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << std::setw(4) << rows[i].k << "  " << std::setw(6) << rows[i].length << "  "
        << std::setw(static_cast<int>(width)) << areas[i] << "  "
        << (i == 0 ? std::string("-") : ratio_string(rows[i].area, rows[i - 1].area)) << '\n';
  }
  return out.str();
}

std::string format_growth_csv(const std::vector<GrowthRow>& rows) {
  std::ostringstream out;
  out << "k,length,strategy_area,ratio\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << rows[i].k << ',' << rows[i].length << ',' << rows[i].area.str() << ','
        << (i == 0 ? std::string() : ratio_string(rows[i].area, rows[i - 1].area)) << '\n';
  }
  return out.str();
}

}  // namespace rnlab::dehn
