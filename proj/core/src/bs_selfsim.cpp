#include "rnlab/bs_selfsim.hpp"

#include <sstream>
#include <stdexcept>

namespace rnlab::bs {

namespace {

void check_n(int n) {
  if (n < 2) throw std::invalid_argument("BS(1,n) needs n >= 2");
}

}  // namespace

const Alphabet& alphabet() {
  static const Alphabet ab({"a", "b"});
  return ab;
}

GroupWord parse(std::string_view text) { return alphabet().parse(text); }

std::string format(const GroupWord& w) { return alphabet().format(w); }

GroupWord relator(int n) {
  check_n(n);
  return GroupWord{gen(kA), gen(kB), inv(kA)} * GroupWord::power(inv(kB), n);
}

GroupWord relation_check_word(int n) {
  check_n(n);
  return GroupWord{inv(kB), inv(kA)} * GroupWord::power(gen(kB), n) * GroupWord{gen(kA)};
}

Permutation build_alpha(int n) {
  check_n(n);
  // i <-> n+3-i on {2, ..., n+1}: the transpositions (2 n+1)(3 n)...
  std::vector<std::vector<int>> cycles;
  for (int i = 2; i < n + 3 - i; ++i) cycles.push_back({i, n + 3 - i});
  return Permutation::from_cycles(n + 1, cycles);
}

Permutation build_beta(int n) {
  check_n(n);
  std::vector<int> cycle;
  for (int i = 1; i <= n + 1; ++i) cycle.push_back(i);
  return Permutation::from_cycles(n + 1, {cycle});
}

MachinePtr build_machine(int n) {
  check_n(n);
  const int d = n + 1;
  MealyMachine::State a{"a", build_alpha(n), {}};
  a.sections.push_back(GroupWord{gen(kA)});
  for (int k = 0; k <= n - 1; ++k) a.sections.push_back(GroupWord::power(gen(kB), k) * GroupWord{gen(kA)});
  MealyMachine::State b{"b", build_beta(n), std::vector<GroupWord>(static_cast<std::size_t>(d))};
  b.sections.back() = GroupWord{gen(kB)};
  return std::make_shared<const MealyMachine>(d, std::vector<MealyMachine::State>{std::move(a), std::move(b)});
}

MachinePtr build_persistent_machine(int n) { return std::make_shared<const MealyMachine>(extend_persistent(*build_machine(n))); }

GroupWord to_machine(const GroupWord& w, const MealyMachine& m) {
  const Symbol a = m.alphabet().symbol("a");
  const Symbol b = m.alphabet().symbol("b");
  std::vector<Letter> out;
  for (const Letter& x : w) out.push_back({x.symbol == kA ? a : b, x.inverted});
  return GroupWord(std::move(out));
}

GroupWord from_machine(const GroupWord& w, const MealyMachine& m) {
  const Symbol a = m.alphabet().symbol("a");
  const Symbol b = m.alphabet().symbol("b");
  std::vector<Letter> out;
  for (const Letter& x : w) {
    if (x.symbol == a) {
      out.push_back({kA, x.inverted});
    } else if (x.symbol == b) {
      out.push_back({kB, x.inverted});
    } else {
      throw std::invalid_argument("state '" + m.alphabet().name(x.symbol) + "' is not a or b");
    }
  }
  return GroupWord(std::move(out));
}

// ---------------------------------------------------------------------------
// Affine model

AffineForm AffineForm::after(const AffineForm& g) const {
  // n^p (n^q x + c) + e = n^(p+q) x + n^p c + e
  return {p + g.p, g.offset.scaled(p) + offset};
}

AffineForm AffineForm::inverse() const {
  // y = n^p x + c  =>  x = n^-p y - n^-p c
  return {-p, (-offset).scaled(-p)};
}

std::string AffineForm::to_string() const {
  std::ostringstream out;
  out << "x -> " << base() << "^" << p << " x + " << offset.to_string();
  return out.str();
}

AffineForm affine_of_word(const GroupWord& w, int n) {
  check_n(n);
  const AffineForm a{1, NPowerRational(n)};
  const AffineForm b{0, NPowerRational(n, 1)};
  const AffineForm a_inv = a.inverse();
  const AffineForm b_inv = b.inverse();
  AffineForm result = AffineForm::identity(n);
  for (const Letter& x : w) {
    if (x.symbol != kA && x.symbol != kB) throw std::invalid_argument("word is not over {a, b}");
    const AffineForm& f = x.symbol == kA ? (x.inverted ? a_inv : a) : (x.inverted ? b_inv : b);
    result = result.after(f);
  }
  return result;
}

bool bs_equal(const GroupWord& u, const GroupWord& v, int n) { return affine_of_word(u, n) == affine_of_word(v, n); }

NormalForm normal_form(const GroupWord& w, int n) {
  // a^-k b^q a^l is x -> n^(l-k) x + q / n^k.
  const AffineForm f = affine_of_word(w, n);
  const auto e = static_cast<long long>(f.offset.exponent());
  const long long k = std::max(e, -f.p);
  NormalForm nf;
  nf.k = k;
  nf.l = f.p + k;
  nf.q = f.offset.numerator() * ipow(n, static_cast<unsigned long>(k - e));
  return nf;
}

// ---------------------------------------------------------------------------
// Abelianization and weak diagonality

AbelImage AbelImage::plus(const AbelImage& o, int n) const {
  const long long m = n - 1;
  return {a_exp + o.a_exp, ((b_exp + o.b_exp) % m + m) % m};
}

AbelImage abelianize(const GroupWord& w, int n) {
  check_n(n);
  const long long m = n - 1;
  return {w.exponent_sum(kA), ((w.exponent_sum(kB) % m) + m) % m};
}

WeakDiagonalReport check_weakly_diagonal(const MealyMachine& m, const std::vector<std::string>& gens, int n) {
  WeakDiagonalReport report;
  report.verdict = true;
  for (const std::string& name : gens) {
    const Symbol s = m.alphabet().symbol(name);
    const GroupWord s_inv{inv(s)};
    for (int i = 1; i <= m.arity(); ++i) {
      const GroupWord q = from_machine(m.section(GroupWord{gen(s)}, i) * s_inv, m);
      const AbelImage img = abelianize(q, n);
      report.lines.push_back({name, i, q, img});
      report.verdict = report.verdict && img.finite_order();
    }
  }
  return report;
}

}  // namespace rnlab::bs
