#include <gtest/gtest.h>

#include <random>

#include "invol/constructions.hpp"
#include "invol/errors.hpp"
#include "invol/graph.hpp"
#include "invol/morphism.hpp"
#include "invol/semigroup.hpp"
#include "support/oracles.hpp"

using namespace invol;
namespace c = invol::construct;

namespace {

std::vector<Element> brute_atoms(const FiniteSemigroup& s) {
  const auto e = s.identity();
  std::vector<Element> out;
  for (Element a = 0; a < s.size(); ++a) {
    bool factors = false;
    for (Element b = 0; b < s.size() && !factors; ++b)
      for (Element d = 0; d < s.size() && !factors; ++d)
        factors = b != e && d != e && s.product(b, d) == a;
    // The identity of a monoid factors as 1*1, so it is never an atom.
    if (!factors && a != e) out.push_back(a);
  }
  return out;
}

std::vector<FiniteSemigroup> small_corpus() {
  std::mt19937_64 rng(7);
  std::vector<FiniteSemigroup> out{c::cyclic_group(5), c::klein_four(), c::full_transformation_monoid(2),
                                   c::full_transformation_monoid(3), c::rectangular_band(2, 3), c::zero_semigroup(3),
                                   c::symmetric_inverse_monoid(2), c::partition_monoid(2), c::sym_group_table(3),
                                   c::doubled_semigroup(c::left_zero(2))};
  for (int i = 0; i < 20; ++i) out.push_back(oracle::random_associative_table(3, rng));
  return out;
}

}  // namespace

TEST(Validate, CyclicTwoHasIdentityZero) {
  auto s = FiniteSemigroup::validate({{0, 1}, {1, 0}});
  ASSERT_TRUE(s.identity());
  EXPECT_EQ(*s.identity(), 0u);
}

TEST(Validate, ReportsAssociativityWitness) {
  const std::vector<std::vector<Element>> t{{0, 0}, {1, 0}};
  // (1*1)*1 = 0*1 = 0 but 1*(1*1) = 1*0 = 1.
  EXPECT_NE(t[t[1][1]][1], t[1][t[1][1]]);
  try {
    FiniteSemigroup::validate({{0, 0}, {1, 0}});
    FAIL() << "expected NotAssociative";
  } catch (const NotAssociative& e) {
    EXPECT_NE(t[t[e.i][e.j]][e.k], t[e.i][t[e.j][e.k]]);
    // Lexicographically first failing triple.
    EXPECT_EQ(std::tuple(e.i, e.j, e.k), std::tuple(std::size_t{1}, std::size_t{0}, std::size_t{1}));
  }
}

TEST(Validate, LeftZeroHasNoIdentity) {
  auto s = FiniteSemigroup::validate({{0, 0}, {1, 1}});
  EXPECT_FALSE(s.identity());
}

TEST(Validate, RejectsOutOfRangeAndRaggedTables) {
  EXPECT_THROW(FiniteSemigroup::validate({{0, 2}, {1, 0}}), IndexOutOfRange);
  EXPECT_THROW(FiniteSemigroup::validate({{0, -1}, {1, 0}}), IndexOutOfRange);
  EXPECT_THROW(FiniteSemigroup::validate({{0, 1}, {1}}), InputError);
  EXPECT_THROW(FiniteSemigroup::validate({}), InputError);
}

TEST(Commutative, Examples) {
  EXPECT_TRUE(is_commutative(c::cyclic_group(5)));
  EXPECT_FALSE(is_commutative(c::left_zero(2)));
  EXPECT_FALSE(is_commutative(c::rectangular_band(2, 2)));
}

TEST(Atoms, Examples) {
  EXPECT_EQ(atoms(frucht_semigroup(SimpleGraph::complete(3))), (std::vector<Element>{0, 1, 2}));
  EXPECT_EQ(atoms(c::cyclic_group(2)), (std::vector<Element>{1}));
  EXPECT_TRUE(atoms(c::cyclic_group(5)).empty());
}

TEST(Atoms, MatchBruteForce) {
  for (const auto& s : small_corpus()) EXPECT_EQ(atoms(s), brute_atoms(s));
}

TEST(Green, RectangularBand) {
  auto g = green_relations(c::rectangular_band(2, 3));
  EXPECT_EQ(g.r_classes.size(), 2u);
  for (auto& cl : g.r_classes) EXPECT_EQ(cl.size(), 3u);
  EXPECT_EQ(g.l_classes.size(), 3u);
  for (auto& cl : g.l_classes) EXPECT_EQ(cl.size(), 2u);
  EXPECT_EQ(g.h_classes.size(), 6u);
  EXPECT_EQ(g.d_classes.size(), 1u);
}

TEST(Green, T2SplitsByRank) {
  auto g = green_relations(c::full_transformation_monoid(2));
  // Elements by image tuple: 00, 01, 10, 11.
  EXPECT_EQ(g.d_classes, (std::vector<std::vector<Element>>{{0, 3}, {1, 2}}));
}

TEST(Green, GroupIsOneClass) {
  auto g = green_relations(c::sym_group_table(3));
  for (auto* p : {&g.r_classes, &g.l_classes, &g.h_classes, &g.d_classes, &g.j_classes}) EXPECT_EQ(p->size(), 1u);
}

TEST(Green, DEqualsJAndHRefines) {
  for (const auto& s : small_corpus()) {
    auto g = green_relations(s);
    EXPECT_EQ(g.d_classes, g.j_classes);
    for (Element a = 0; a < s.size(); ++a)
      for (Element b = 0; b < s.size(); ++b)
        if (g.h_of[a] == g.h_of[b]) {
          EXPECT_EQ(g.r_of[a], g.r_of[b]);
          EXPECT_EQ(g.l_of[a], g.l_of[b]);
        }
  }
}

TEST(GeneratingSet, GeneratesEverything) {
  EXPECT_EQ(generating_set(c::cyclic_group(6)).size(), 1u);
  EXPECT_EQ(generating_set(c::zero_semigroup(3)), (std::vector<Element>{0, 1, 2}));
  EXPECT_LE(generating_set(c::full_transformation_monoid(3)).size(), 4u);
  for (const auto& s : small_corpus()) {
    auto gens = generating_set(s);
    EXPECT_EQ(subsemigroup_closure(s, gens).size(), s.size());
  }
}

TEST(Fingerprints, Examples) {
  auto t3 = c::full_transformation_monoid(3);
  auto f = fingerprints(t3);
  const Element id = *t3.identity();
  EXPECT_TRUE(f[id].is_idempotent);
  EXPECT_EQ(f[id].index, 1u);
  EXPECT_EQ(f[id].period, 1u);
  EXPECT_TRUE(f[0].is_idempotent);  // constant map 000
  EXPECT_EQ(f[0].right_mult_rank, 1u);
  auto z6 = fingerprints(c::cyclic_group(6));
  EXPECT_EQ(z6[1].index, 1u);
  EXPECT_EQ(z6[1].period, 6u);
}

TEST(Fingerprints, PreservedByMorphisms) {
  for (const auto& s : small_corpus()) {
    auto f = fingerprints(s);
    for (const auto& a : enumerate_automorphisms(s).elements)
      for (Element x = 0; x < s.size(); ++x) EXPECT_EQ(f[a(x)], f[x]);
    for (const auto& a : enumerate_anti_automorphisms(s).elements)
      for (Element x = 0; x < s.size(); ++x) EXPECT_EQ(f[a(x)], f[x].swapped());
  }
}

TEST(Fingerprints, DualSwaps) {
  for (const auto& s : small_corpus()) {
    auto f = fingerprints(s);
    auto g = fingerprints(s.dual());
    for (Element x = 0; x < s.size(); ++x) EXPECT_EQ(g[x], f[x].swapped());
  }
}

TEST(IndexPeriod, MatchesPowerIteration) {
  for (const auto& s : small_corpus()) {
    for (Element x = 0; x < s.size(); ++x) {
      std::vector<Element> powers{x};
      while (std::find(powers.begin(), powers.end() - 1, powers.back()) == powers.end() - 1 || powers.size() == 1)
        powers.push_back(s.product(powers.back(), x));
      const auto first = static_cast<std::uint32_t>(std::find(powers.begin(), powers.end(), powers.back()) - powers.begin());
      const auto [i, p] = index_and_period(s, x);
      EXPECT_EQ(i, first + 1);
      EXPECT_EQ(p, powers.size() - 1 - first);
    }
  }
}

TEST(Dual, Involutive) {
  auto s = c::rectangular_band(2, 3);
  EXPECT_EQ(s.dual().dual(), s);
  EXPECT_EQ(c::left_zero(3).dual(), c::right_zero(3));
  EXPECT_EQ(c::cyclic_group(4).dual(), c::cyclic_group(4));
}
