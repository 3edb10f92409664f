#include <gtest/gtest.h>

#include "invol/constructions.hpp"
#include "invol/errors.hpp"
#include "invol/permgroup.hpp"
#include "support/oracles.hpp"

using namespace invol;
namespace c = invol::construct;

namespace {

Permutation cyc(std::string_view text, std::size_t degree) { return Permutation::parse_cycles(text, degree); }

std::vector<Permutation> to_vector(const std::set<Permutation>& s) { return {s.begin(), s.end()}; }

}  // namespace

TEST(Closure, Examples) {
  EXPECT_EQ(closure(4, {}).order(), 1u);
  EXPECT_EQ(closure(3, {cyc("(0 1)", 3), cyc("(1 2)", 3)}).order(), 6u);
  auto klein = closure(4, {cyc("(0 1)(2 3)", 4), cyc("(0 2)(1 3)", 4)});
  EXPECT_EQ(klein.order(), 4u);
  EXPECT_TRUE(is_isomorphic_to(klein, c::klein_four()));
}

TEST(Closure, MatchesNaiveClosureAndIsIdempotent) {
  std::vector<std::vector<Permutation>> gen_sets{
      {cyc("(0 1 2 3 4)", 5), cyc("(0 1)", 5)},
      {cyc("(0 1 2)", 5), cyc("(2 3 4)", 5)},
      {cyc("(0 1)(2 3)", 6), cyc("(3 4 5)", 6)},
  };
  for (const auto& gens : gen_sets) {
    auto g = closure(gens.front().degree(), gens);
    EXPECT_EQ(g.elements(), to_vector(oracle::naive_closure(gens.front().degree(), gens)));
    EXPECT_EQ(closure(g.degree(), g.elements()).elements(), g.elements());
  }
}

TEST(Closure, OrderBudget) {
  ClosureOptions tight;
  tight.order_budget = 10;
  EXPECT_THROW(closure(5, {cyc("(0 1 2 3 4)", 5), cyc("(0 1)", 5)}, tight), OrderBudgetExceeded);
}

TEST(Closure, DegreeMismatch) {
  EXPECT_THROW(closure(3, {cyc("(0 1)", 4)}), DegreeMismatch);
}

TEST(CGroup, Examples) {
  EXPECT_EQ(c_group(c::klein_four()).order(), 6u);
  EXPECT_EQ(c_group(c::full_transformation_monoid(3)).order(), 1u);
  EXPECT_EQ(c_group(c::rectangular_band(3, 3)).order(), 36u);
}

TEST(GGroup, Examples) {
  EXPECT_EQ(g_group(c::sym_group_table(3)).order(), 6u);
  EXPECT_EQ(g_group(c::cyclic_group(8)).order(), 4u);
  EXPECT_EQ(g_group(c::cyclic_group(1)).order(), 1u);
}

TEST(SignedAut, Examples) {
  EXPECT_EQ(signed_aut_group(c::cyclic_group(12)).order(), 4u);
  EXPECT_EQ(signed_aut_group(c::sym_group_table(4)).order(), 48u);
  EXPECT_EQ(signed_aut_group(c::rectangular_band(2, 2)).order(), 8u);
}

TEST(Derived, Examples) {
  auto s3 = closure(3, {cyc("(0 1)", 3), cyc("(0 1 2)", 3)});
  EXPECT_EQ(derived_subgroup(s3).order(), 3u);
  auto s4 = closure(4, {cyc("(0 1)", 4), cyc("(0 1 2 3)", 4)});
  auto a4 = derived_subgroup(s4);
  EXPECT_EQ(a4.order(), 12u);
  for (const auto& p : a4.elements()) EXPECT_EQ(p.sign(), 1);
  EXPECT_EQ(derived_subgroup(closure(4, {cyc("(0 1 2 3)", 4)})).order(), 1u);
}

TEST(Derived, MatchesAllCommutatorPairs) {
  std::vector<PermGroup> groups{closure(4, {cyc("(0 1)", 4), cyc("(0 1 2 3)", 4)}),
                                closure(5, {cyc("(0 1 2 3 4)", 5), cyc("(1 4)(2 3)", 5)}),
                                closure(6, {cyc("(0 1 2 3 4 5)", 6), cyc("(1 5)(2 4)", 6)}),
                                closure(6, {cyc("(0 1 2)", 6), cyc("(3 4)(0 1)", 6), cyc("(4 5)", 6)})};
  for (const auto& g : groups) {
    std::set<Permutation> comm_set;
    for (const auto& a : g.elements())
      for (const auto& b : g.elements()) comm_set.insert(compose(compose(a, b), compose(a.inverse(), b.inverse())));
    const std::vector<Permutation> comms(comm_set.begin(), comm_set.end());
    auto d = derived_subgroup(g);
    EXPECT_EQ(d.elements(), to_vector(oracle::naive_closure(g.degree(), comms)));
    EXPECT_EQ(g.order() % d.order(), 0u);
  }
}

TEST(Fingerprint, Examples) {
  auto z2s3 = closure(5, {cyc("(0 1)", 5), cyc("(2 3)", 5), cyc("(2 3 4)", 5)});
  auto f = fingerprint(z2s3);
  EXPECT_EQ(f.order, 12u);
  EXPECT_EQ(f.element_orders, (std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 7}, {3, 2}, {6, 2}}));
  auto k = fingerprint(closure(4, {cyc("(0 1)(2 3)", 4), cyc("(0 2)(1 3)", 4)}));
  EXPECT_TRUE(k.abelian);
  EXPECT_EQ(k.exponent, 2u);
  EXPECT_EQ(k.element_orders, (std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 3}}));
  auto s4 = fingerprint(closure(4, {cyc("(0 1)", 4), cyc("(0 1 2 3)", 4)}));
  EXPECT_EQ(s4.order, 24u);
  EXPECT_EQ(s4.center_order, 1u);
  EXPECT_EQ(s4.derived_order, 12u);
}

TEST(Fingerprint, TableAgreesWithPermGroup) {
  auto g = closure(5, {cyc("(0 1)", 5), cyc("(2 3)", 5), cyc("(2 3 4)", 5)});
  EXPECT_EQ(group_table_fingerprint(to_cayley_table(g)), fingerprint(g));
  EXPECT_EQ(group_table_fingerprint(c::sym_group_table(4)),
            fingerprint(closure(4, {cyc("(0 1)", 4), cyc("(0 1 2 3)", 4)})));
  EXPECT_THROW(group_table_fingerprint(c::left_zero(2)), NotAGroup);
}

TEST(CayleyTable, Examples) {
  auto trivial = to_cayley_table(closure(3, {}));
  EXPECT_EQ(trivial.size(), 1u);
  EXPECT_TRUE(is_isomorphic_to(closure(4, {cyc("(0 1 2 3)", 4)}), c::cyclic_group(4)));
  EXPECT_TRUE(is_isomorphic_to(c_group(c::cyclic_group(12)), c::klein_four()));
  EXPECT_THROW(to_cayley_table(closure(5, {cyc("(0 1 2 3 4)", 5), cyc("(0 1)", 5)}), 100), OrderBudgetExceeded);
}

TEST(KGroup, Examples) {
  auto z2 = k_group(c::cyclic_group(2));
  EXPECT_EQ(z2.elements, (std::vector<std::pair<Element, Element>>{{0, 0}, {1, 1}}));
  EXPECT_TRUE(z2.matches());
  auto s3 = k_group(c::sym_group_table(3));
  EXPECT_EQ(s3.order(), 18u);
  EXPECT_TRUE(s3.matches());
  auto z5 = k_group(c::cyclic_group(5));
  EXPECT_EQ(z5.order(), 5u);
  for (auto [g, h] : z5.elements) EXPECT_EQ((g + h) % 5, 0u);
  EXPECT_THROW(k_group(c::full_transformation_monoid(2)), NotAGroup);
}

TEST(KGroup, CharacterizationFromBruteDerived) {
  for (auto g : {c::sym_group_table(3), c::sym_group_table(4), c::klein_four(), c::cyclic_group(6)}) {
    auto d = oracle::brute_derived(g);
    std::vector<std::pair<Element, Element>> expect;
    for (Element a = 0; a < g.size(); ++a)
      for (Element b = 0; b < g.size(); ++b)
        if (d.count(g.product(a, b))) expect.emplace_back(a, b);
    auto k = k_group(g);
    EXPECT_EQ(k.elements, expect);
    EXPECT_EQ(k.derived_order, d.size());
  }
}

TEST(Factorization, Examples) {
  auto [s0, t0] = two_involution_factorization(Permutation::identity(4));
  EXPECT_TRUE(s0.is_identity());
  EXPECT_TRUE(t0.is_identity());
  auto [s1, t1] = two_involution_factorization(cyc("(0 1 2)", 3));
  EXPECT_EQ(s1, cyc("(1 2)", 3));
  EXPECT_EQ(t1, cyc("(0 2)", 3));
  EXPECT_EQ(compose(s1, t1), cyc("(0 1 2)", 3));
  auto [s2, t2] = two_involution_factorization(cyc("(0 1)(2 3)", 4));
  EXPECT_TRUE(s2.is_identity());
  EXPECT_EQ(t2, cyc("(0 1)(2 3)", 4));
}

TEST(Factorization, ExhaustiveUpToSix) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<Element> v(n);
    std::iota(v.begin(), v.end(), Element{0});
    do {
      Permutation pi(v);
      auto [s, t] = two_involution_factorization(pi);
      EXPECT_TRUE(oracle::is_involutive(s));
      EXPECT_TRUE(oracle::is_involutive(t));
      EXPECT_EQ(compose(s, t), pi);
    } while (std::next_permutation(v.begin(), v.end()));
  }
}
