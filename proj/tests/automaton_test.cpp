#include <gtest/gtest.h>

#include <random>
#include <set>

#include "rnlab/bs_selfsim.hpp"
#include "rnlab/errors.hpp"
#include "rnlab/mealy.hpp"
#include "test_support.hpp"

namespace rnlab {
namespace {

Element el(const MachinePtr& m, std::string_view text) { return Element::parse(m, text); }

TEST(RootPermutation, EmptyWordIsIdentity) {
  const auto m = bs::build_machine(2);
  EXPECT_TRUE(root_permutation(el(m, "1")).is_identity());
}

TEST(RootPermutation, GeneratorsAtNTwo) {
  const auto m = bs::build_machine(2);
  EXPECT_EQ(root_permutation(el(m, "a")), Permutation::from_cycles(3, {{2, 3}}));
  EXPECT_EQ(root_permutation(el(m, "b")), Permutation::from_cycles(3, {{1, 2, 3}}));
}

TEST(RootPermutation, RelationWordIsIdentity) {
  const auto m = bs::build_machine(2);
  EXPECT_TRUE(root_permutation(el(m, "b' a' b b a")).is_identity());
}

TEST(Section, PaperRecursionEntries) {
  const auto m = bs::build_machine(2);
  EXPECT_EQ(section(el(m, "a"), 3).to_string(), "b a");
  EXPECT_EQ(section(el(m, "b"), 1).to_string(), "1");
  EXPECT_EQ(section(el(m, "b"), 2).to_string(), "1");
  EXPECT_EQ(section(el(m, "b"), 3).to_string(), "b");
  EXPECT_EQ(section(el(m, "a b"), 3).to_string(), "a b");
}

TEST(Section, ProductRecursionForAB) {
  // ab <-> alpha beta (a, ba, ..., b^(n-1) a, ab)
  for (int n = 2; n <= 6; ++n) {
    const auto m = bs::build_machine(n);
    const Element ab = el(m, "a b");
    for (int i = 1; i <= n; ++i) {
      EXPECT_EQ(section(ab, i).word, GroupWord::power(gen(bs::kB), i - 1) * GroupWord{gen(bs::kA)});
    }
    EXPECT_EQ(section(ab, n + 1).to_string(), "a b");
  }
}

TEST(Section, LetterOutOfRangeThrows) {
  const auto m = bs::build_machine(2);
  EXPECT_THROW(section(el(m, "a"), 0), LetterError);
  EXPECT_THROW(section(el(m, "a"), 4), LetterError);
}

TEST(Section, HomomorphismLaws) {
  std::mt19937_64 rng(5);
  for (int n : {2, 3, 4}) {
    const auto m = bs::build_machine(n);
    for (int t = 0; t < 500; ++t) {
      const GroupWord g = random_word(2, 6, rng);
      const GroupWord h = random_word(2, 6, rng);
      const Permutation rg = m->root_permutation(g);
      const Permutation rh = m->root_permutation(h);
      EXPECT_EQ(m->root_permutation(g * h), compose(rg, rh));
      for (int i = 1; i <= n + 1; ++i) {
        EXPECT_EQ(m->section(g * h, i), m->section(g, rh(i)) * m->section(h, i));
        EXPECT_EQ(m->section(g.inverse(), i), m->section(g, rg.inverse()(i)).inverse());
      }
    }
  }
}

TEST(Act, IdentityFixesVertices) {
  const auto m = bs::build_machine(3);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    const auto v = random_vertex(4, 7, rng);
    EXPECT_EQ(act(el(m, "1"), v), v);
  }
}

TEST(Act, AddingMachineOnLastLetter) {
  // b(333) = 1 b(33) = 1 1 b(3) = 111
  const auto m = bs::build_machine(2);
  EXPECT_EQ(act(el(m, "b"), TreeVertex::parse(3, "333")), TreeVertex::parse(3, "111"));
}

TEST(Act, PreservesDepthAndMatchesNaiveUnrolling) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::size_t> depth(0, 9);
  for (int n : {2, 3, 5}) {
    const auto m = bs::build_machine(n);
    for (int t = 0; t < 100; ++t) {
      const GroupWord g = random_word(2, 6, rng);
      const TreeVertex v = random_vertex(n + 1, depth(rng), rng);
      const TreeVertex image = m->act(g, v);
      EXPECT_EQ(image.depth(), v.depth());
      EXPECT_EQ(image.letters(), testing::naive_act(*m, g, v.letters()));
    }
  }
}

TEST(Act, ConsistentWithSectionsAlongPaths) {
  std::mt19937_64 rng(17);
  const auto m = bs::build_machine(3);
  for (int t = 0; t < 200; ++t) {
    const GroupWord g = random_word(2, 6, rng);
    const TreeVertex v = random_vertex(4, 4, rng);
    const TreeVertex w = random_vertex(4, 5, rng);
    const TreeVertex lhs = m->act(g, v.concat(w));
    const TreeVertex rhs = m->act(g, v).concat(m->act(m->section_along(g, v), w));
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(IsTrivial, EmptyWord) {
  const auto m = bs::build_machine(2);
  EXPECT_TRUE(is_trivial(el(m, "1")));
}

TEST(IsTrivial, RelationWordForSeveralN) {
  for (int n = 2; n <= 6; ++n) {
    const auto m = bs::build_machine(n);
    EXPECT_TRUE(is_trivial({m, bs::relation_check_word(n)})) << "n=" << n;
  }
}

TEST(IsTrivial, PowersOfBAreNotTrivial) {
  const auto m = bs::build_machine(2);
  for (int k = 1; k <= 100; ++k) {
    EXPECT_FALSE(is_trivial({m, GroupWord::power(gen(bs::kB), k)})) << "k=" << k;
  }
}

TEST(IsTrivial, TrivialImpliesFixesEveryShallowVertex) {
  std::mt19937_64 rng(3);
  const auto m = bs::build_machine(2);
  const GroupWord r = bs::relation_check_word(2);
  const auto verts = testing::all_vertices(3, 7);
  for (int t = 0; t < 10; ++t) {
    const GroupWord c = random_word(2, 4, rng);
    const GroupWord g = c * r * c.inverse();
    ASSERT_TRUE(m->is_trivial(g));
    for (const auto& v : verts) ASSERT_EQ(testing::naive_act(*m, g, v.letters()), v.letters());
  }
  // One deep spot check at depth 10.
  for (int t = 0; t < 50; ++t) {
    const auto v = random_vertex(3, 10, rng);
    EXPECT_EQ(m->act(r, v), v);
  }
}

TEST(IsTrivial, BudgetExceededIsReported) {
  const auto m = bs::build_machine(2);
  EXPECT_THROW(m->is_trivial(bs::relation_check_word(2) * bs::relation_check_word(2).pow(2), 1),
               SearchBudgetExceeded);
}

TEST(ElementsEqual, RelationAndCounterexample) {
  for (int n = 2; n <= 6; ++n) {
    const auto m = bs::build_machine(n);
    const Element ab = el(m, "a b");
    const Element bna{m, GroupWord::power(gen(bs::kB), n) * GroupWord{gen(bs::kA)}};
    EXPECT_TRUE(elements_equal(ab, bna));
  }
  const auto m = bs::build_machine(2);
  EXPECT_FALSE(elements_equal(el(m, "a"), el(m, "b a")));
}

TEST(ElementsEqual, IsAnEquivalenceRelation) {
  std::mt19937_64 rng(8);
  const auto m = bs::build_machine(2);
  // Small pool with forced coincidences via the relation.
  std::vector<GroupWord> pool;
  for (int t = 0; t < 12; ++t) {
    const GroupWord g = random_word(2, 4, rng);
    pool.push_back(g);
    pool.push_back(g * bs::relation_check_word(2));
  }
  for (const auto& x : pool) {
    EXPECT_TRUE(m->equal(x, x));
    for (const auto& y : pool) {
      const bool xy = m->equal(x, y);
      EXPECT_EQ(xy, m->equal(y, x));
      if (!xy) continue;
      for (const auto& z : pool) {
        if (m->equal(y, z)) {
          EXPECT_TRUE(m->equal(x, z));
        }
      }
    }
  }
}

TEST(StateClosure, OfB) {
  const auto m = bs::build_machine(2);
  const auto reps = state_closure({el(m, "b")});
  ASSERT_EQ(reps.size(), 2U);
  std::set<std::string> names;
  for (const auto& r : reps) names.insert(r.to_string());
  EXPECT_EQ(names, (std::set<std::string>{"1", "b"}));
}

TEST(StateClosure, OfAIsTheBPowerFamily) {
  for (int n = 2; n <= 6; ++n) {
    const auto m = bs::build_machine(n);
    const auto reps = state_closure({el(m, "a")});
    ASSERT_EQ(reps.size(), static_cast<std::size_t>(n)) << "n=" << n;
    std::set<GroupWord> words;
    for (const auto& r : reps) words.insert(r.word);
    for (int k = 0; k < n; ++k) EXPECT_TRUE(words.contains(GroupWord::power(gen(bs::kB), k) * GroupWord{gen(bs::kA)}));
  }
}

TEST(StateClosure, OfIdentity) {
  const auto m = bs::build_machine(3);
  const auto reps = state_closure({el(m, "1")});
  ASSERT_EQ(reps.size(), 1U);
  EXPECT_TRUE(reps.front().word.empty());
}

TEST(StateClosure, BudgetExceeded) {
  const auto m = bs::build_machine(4);
  EXPECT_THROW(state_closure({el(m, "a")}, 2), SearchBudgetExceeded);
}

TEST(Persistent, ExtensionShape) {
  const auto m = bs::build_machine(2);
  const auto p = std::make_shared<const MealyMachine>(extend_persistent(*m));
  EXPECT_EQ(p->arity(), 4);
  EXPECT_EQ(section(el(p, "a"), 4).to_string(), "a");
  EXPECT_EQ(section(el(p, "b"), 4).to_string(), "b");
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(section(el(p, "a"), i).word, section(el(m, "a"), i).word);
  EXPECT_EQ(root_permutation(el(p, "a"))(4), 4);
}

TEST(Persistent, StateClosureUnchangedAsWords) {
  for (int n = 2; n <= 5; ++n) {
    const auto m = bs::build_machine(n);
    const auto p = std::make_shared<const MealyMachine>(extend_persistent(*m));
    std::set<GroupWord> original;
    std::set<GroupWord> extended;
    for (const auto& r : state_closure({el(m, "a"), el(m, "b")})) original.insert(r.word);
    for (const auto& r : state_closure({el(p, "a"), el(p, "b")})) extended.insert(r.word);
    EXPECT_EQ(original, extended);
  }
}

TEST(Persistent, RestrictionAgreesWithOriginal) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::size_t> depth(0, 8);
  const auto m = bs::build_machine(3);
  const auto p = extend_persistent(*m);
  for (int t = 0; t < 100; ++t) {
    const GroupWord g = random_word(2, 6, rng);
    const TreeVertex v = random_vertex(4, depth(rng), rng);
    EXPECT_EQ(p.act(g, TreeVertex(5, v.letters())).letters(), m->act(g, v).letters());
  }
}

TEST(Persistent, Detection) {
  const auto m = bs::build_machine(2);
  EXPECT_FALSE(is_persistent(*m));
  EXPECT_TRUE(is_persistent(extend_persistent(*m)));
  const MealyMachine trivial(2, {{"t", Permutation::identity(2), {GroupWord{gen(0)}, GroupWord{gen(0)}}}});
  EXPECT_TRUE(is_persistent(trivial));
}

TEST(MealyMachine, RejectsUndeclaredStatesAndBadDegrees) {
  EXPECT_THROW(MealyMachine(2, {{"s", Permutation::identity(2), {GroupWord{gen(1)}, GroupWord{}}}}),
               std::invalid_argument);
  EXPECT_THROW(MealyMachine(2, {{"s", Permutation::identity(3), {GroupWord{}, GroupWord{}}}}), std::invalid_argument);
  EXPECT_THROW(MealyMachine(2, {{"s", Permutation::identity(2), {GroupWord{}}}}), std::invalid_argument);
}

}  // namespace
}  // namespace rnlab
