#include <gtest/gtest.h>

#include <random>
#include <set>

#include "rnlab/bs_selfsim.hpp"

namespace rnlab::bs {
namespace {

GroupWord b_pow(long long k) { return GroupWord::power(gen(kB), k); }
GroupWord b_pow_a(long long k) { return b_pow(k) * GroupWord{gen(kA)}; }

TEST(Alpha, SmallCases) {
  EXPECT_EQ(build_alpha(2), Permutation::from_cycles(3, {{2, 3}}));
  EXPECT_EQ(build_alpha(3), Permutation::from_cycles(4, {{2, 4}}));
  EXPECT_EQ(build_alpha(5), Permutation::from_cycles(6, {{2, 6}, {3, 5}}));
  EXPECT_EQ(build_alpha(4), Permutation::from_cycles(5, {{2, 5}, {3, 4}}));
}

TEST(Alpha, FixesOneAndConjugatesBetaToItsNthPower) {
  for (int n = 2; n <= 12; ++n) {
    const auto alpha = build_alpha(n);
    const auto beta = build_beta(n);
    EXPECT_EQ(alpha(1), 1);
    EXPECT_EQ(compose(alpha, compose(beta, alpha.inverse())), beta.pow(n)) << "n=" << n;
  }
}

TEST(Machine, SectionRowsAtNTwo) {
  const auto m = build_machine(2);
  ASSERT_EQ(m->arity(), 3);
  const auto& al = m->alphabet();
  EXPECT_EQ(al.format(m->state(kA).sections[0]), "a");
  EXPECT_EQ(al.format(m->state(kA).sections[1]), "a");
  EXPECT_EQ(al.format(m->state(kA).sections[2]), "b a");
  EXPECT_EQ(al.format(m->state(kB).sections[0]), "1");
  EXPECT_EQ(al.format(m->state(kB).sections[1]), "1");
  EXPECT_EQ(al.format(m->state(kB).sections[2]), "b");
}

TEST(Machine, BPowerASectionFormula) {
  // b^k a <-> beta^k alpha (a, ba, ..., b^k a, b^k a, ..., b^(n-1) a)
  for (int n = 2; n <= 6; ++n) {
    const auto m = build_machine(n);
    for (int k = 0; k < n; ++k) {
      const GroupWord g = b_pow_a(k);
      EXPECT_EQ(m->root_permutation(g), compose(build_beta(n).pow(k), build_alpha(n)));
      std::vector<GroupWord> expected{b_pow_a(0)};
      for (int j = 1; j <= k; ++j) expected.push_back(b_pow_a(j));
      for (int j = k; j <= n - 1; ++j) expected.push_back(b_pow_a(j));
      ASSERT_EQ(expected.size(), static_cast<std::size_t>(n + 1));
      for (int i = 1; i <= n + 1; ++i) {
        EXPECT_TRUE(m->equal(m->section(g, i), expected[static_cast<std::size_t>(i - 1)]))
            << "n=" << n << " k=" << k << " i=" << i;
      }
    }
  }
}

TEST(Affine, Generators) {
  const auto fa = affine_of_word(parse("a"), 3);
  EXPECT_EQ(fa.p, 1);
  EXPECT_TRUE(fa.offset.is_zero());
  const auto fb = affine_of_word(parse("b"), 3);
  EXPECT_EQ(fb.p, 0);
  EXPECT_EQ(fb.offset, NPowerRational(3, 1));
}

TEST(Affine, RelationHolds) {
  for (int n = 2; n <= 8; ++n) {
    const auto ab = affine_of_word(parse("a b"), n);
    EXPECT_EQ(ab.p, 1);
    EXPECT_EQ(ab.offset, NPowerRational(n, n));
    EXPECT_EQ(ab, affine_of_word(b_pow_a(n), n));
    EXPECT_EQ(affine_of_word(relation_check_word(n), n), AffineForm::identity(n));
    EXPECT_EQ(affine_of_word(relator(n), n), AffineForm::identity(n));
  }
}

TEST(Affine, HomomorphismOnRandomPairs) {
  std::mt19937_64 rng(4);
  for (int n : {2, 3, 4}) {
    for (int t = 0; t < 500; ++t) {
      const GroupWord u = random_word(2, 10, rng);
      const GroupWord v = random_word(2, 10, rng);
      EXPECT_EQ(affine_of_word(u * v, n), affine_of_word(u, n).after(affine_of_word(v, n)));
      EXPECT_EQ(affine_of_word(u.inverse(), n), affine_of_word(u, n).inverse());
    }
  }
}

TEST(BsEqual, Examples) {
  for (int n = 2; n <= 6; ++n) {
    EXPECT_TRUE(bs_equal(parse("a b"), b_pow_a(n), n));
    // a^-1 b a is x -> x + 1/n, not x -> x + 1.
    EXPECT_FALSE(bs_equal(parse("a' b a"), parse("b"), n));
  }
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    const GroupWord w = random_word(2, 12, rng);
    EXPECT_TRUE(bs_equal(w, w, 3));
  }
}

TEST(NormalFormTest, ReconstructsEveryWord) {
  std::mt19937_64 rng(6);
  for (int n : {2, 3, 4}) {
    for (int t = 0; t < 300; ++t) {
      const GroupWord w = random_word(2, 10, rng);
      const NormalForm nf = normal_form(w, n);
      ASSERT_GE(nf.k, 0);
      ASSERT_GE(nf.l, 0);
      ASSERT_LT(abs(nf.q), 1'000'000);
      const GroupWord rebuilt = GroupWord::power(inv(kA), nf.k) *
                                GroupWord::power(gen(kB), static_cast<long long>(nf.q)) *
                                GroupWord::power(gen(kA), nf.l);
      EXPECT_TRUE(bs_equal(w, rebuilt, n)) << format(w);
    }
  }
}

TEST(NormalFormTest, LargeExponentStaysSymbolic) {
  // a^40 b a^-40 = b^(3^40); q is far outside machine integers.
  const GroupWord w = GroupWord::power(gen(kA), 40) * parse("b") * GroupWord::power(inv(kA), 40);
  const NormalForm nf = normal_form(w, 3);
  EXPECT_EQ(nf.k, 0);
  EXPECT_EQ(nf.l, 0);
  EXPECT_EQ(nf.q, ipow(3, 40));
}

TEST(Abelianize, Examples) {
  for (int n = 2; n <= 6; ++n) {
    EXPECT_EQ(abelianize(b_pow(n - 1), n), (AbelImage{0, 0}));
    EXPECT_EQ(abelianize(parse("a"), n), (AbelImage{1, 0}));
    const AbelImage img = abelianize(parse("b a a'"), n);
    EXPECT_EQ(img.a_exp, 0);
    EXPECT_EQ(img.b_exp, n == 2 ? 0 : 1);
    EXPECT_TRUE(img.finite_order());
    EXPECT_EQ(abelianize(relator(n), n), (AbelImage{0, 0}));
  }
}

TEST(Abelianize, Additive) {
  std::mt19937_64 rng(12);
  for (int n : {2, 3, 5}) {
    for (int t = 0; t < 200; ++t) {
      const GroupWord u = random_word(2, 8, rng);
      const GroupWord v = random_word(2, 8, rng);
      EXPECT_EQ(abelianize(u * v, n), abelianize(u, n).plus(abelianize(v, n), n));
    }
  }
}

TEST(WeakDiagonal, BsMachinesPass) {
  for (int n = 2; n <= 6; ++n) {
    EXPECT_TRUE(check_weakly_diagonal(*build_machine(n), {"a", "b"}, n).verdict) << n;
    EXPECT_TRUE(check_weakly_diagonal(*build_persistent_machine(n), {"a", "b"}, n).verdict) << n;
  }
}

TEST(WeakDiagonal, ReportsAThreeIsBNotCoarselyDiagonal) {
  const auto r = check_weakly_diagonal(*build_machine(2), {"a"}, 2);
  ASSERT_EQ(r.lines.size(), 3U);
  EXPECT_EQ(format(r.lines[2].quotient), "b");
}

TEST(WeakDiagonal, ArtificialCounterexample) {
  // a_1 = a a, so a_1 a^-1 = a has infinite order.
  const MealyMachine m(2, {{"a", Permutation::identity(2), {parse("a a"), parse("a")}},
                           {"b", Permutation::identity(2), {parse("1"), parse("b")}}});
  const auto r = check_weakly_diagonal(m, {"a", "b"}, 3);
  EXPECT_FALSE(r.verdict);
  EXPECT_FALSE(r.lines[0].image.finite_order());
}

TEST(OracleAgreement, AutomatonMatchesAffineModel) {
  std::mt19937_64 rng(0);
  for (int n : {2, 3, 4}) {
    const auto m = build_machine(n);
    int disagreements = 0;
    int equal_pairs = 0;
    for (int t = 0; t < 500; ++t) {
      const GroupWord u = random_word(2, 8, rng);
      // Every fifth pair is forced equal through the relation.
      const GroupWord v = t % 5 == 0 ? u * relation_check_word(n) * u : random_word(2, 8, rng);
      const GroupWord v2 = t % 5 == 0 ? u * u : v;
      const bool affine = bs_equal(v, v2, n);
      equal_pairs += affine ? 1 : 0;
      disagreements += affine != m->equal(v, v2) ? 1 : 0;
      disagreements += bs_equal(u, v, n) != m->equal(u, v) ? 1 : 0;
    }
    EXPECT_EQ(disagreements, 0) << "n=" << n;
    EXPECT_GE(equal_pairs, 100);
  }
}

TEST(StateClosure, ExactlyNPlusTwoClasses) {
  for (int n = 2; n <= 6; ++n) {
    const auto m = build_machine(n);
    const auto reps = state_closure({{m, parse("a")}, {m, parse("b")}});
    ASSERT_EQ(reps.size(), static_cast<std::size_t>(n + 2));
    std::vector<GroupWord> targets{GroupWord{}, b_pow(1)};
    for (int k = 0; k < n; ++k) targets.push_back(b_pow_a(k));
    std::set<std::size_t> hit;
    for (const auto& r : reps) {
      for (std::size_t i = 0; i < targets.size(); ++i) {
        if (bs_equal(r.word, targets[i], n)) hit.insert(i);
      }
    }
    EXPECT_EQ(hit.size(), targets.size());
  }
}

}  // namespace
}  // namespace rnlab::bs
