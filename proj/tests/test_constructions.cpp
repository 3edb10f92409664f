#include <gtest/gtest.h>

#include "invol/constructions.hpp"
#include "invol/errors.hpp"
#include "invol/morphism.hpp"
#include "invol/permgroup.hpp"
#include "support/oracles.hpp"

using namespace invol;
namespace c = invol::construct;

namespace {

std::size_t count_square_roots_of_one(std::size_t n) {
  std::size_t k = 0;
  for (std::size_t x = 0; x < n; ++x) k += (x * x) % n == 1 % n ? 1 : 0;
  return k;
}

std::vector<Permutation> all_perms(std::size_t n) {
  std::vector<Element> v(n);
  std::iota(v.begin(), v.end(), Element{0});
  std::vector<Permutation> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace

TEST(Builders, TablesAreAssociative) {
  for (const auto& s : {c::cyclic_group(7), c::klein_four(), c::sym_group_table(4), c::full_transformation_monoid(3),
                        c::symmetric_inverse_monoid(3), c::dual_symmetric_inverse_monoid(3), c::partition_monoid(2),
                        c::rectangular_band(2, 3), c::zero_semigroup(3), c::doubled_semigroup(c::full_transformation_monoid(2)),
                        c::direct_product(c::cyclic_group(2), c::sym_group_table(3))})
    EXPECT_TRUE(oracle::associative(oracle::table_of(s)));
}

TEST(Cyclic, Examples) {
  EXPECT_EQ(c::cyclic_group(1).size(), 1u);
  EXPECT_EQ(*c::cyclic_group(2).identity(), 0u);
  EXPECT_EQ(enumerate_automorphisms(c::cyclic_group(12)).size(), 4u);
}

TEST(ROfN, Examples) {
  EXPECT_EQ(c::r_of_n(12), 2u);
  EXPECT_EQ(c::r_of_n(8), 2u);
  EXPECT_EQ(c::r_of_n(15), 2u);
  EXPECT_THROW(c::r_of_n(1), InputError);
}

TEST(ROfN, CountsSquareRootsOfOne) {
  for (std::size_t n = 2; n <= 500; ++n) EXPECT_EQ(std::size_t{1} << c::r_of_n(n), count_square_roots_of_one(n)) << n;
}

TEST(Sizes, Families) {
  EXPECT_EQ(c::sym_group_table(3).size(), 6u);
  EXPECT_EQ(c::sym_group_table(5).size(), 120u);
  EXPECT_EQ(c::full_transformation_monoid(2).size(), 4u);
  EXPECT_EQ(c::full_transformation_monoid(3).size(), 27u);
  EXPECT_EQ(c::symmetric_inverse_monoid(1).size(), 2u);
  EXPECT_EQ(c::symmetric_inverse_monoid(2).size(), 7u);
  EXPECT_EQ(c::symmetric_inverse_monoid(3).size(), 34u);
  EXPECT_EQ(c::dual_symmetric_inverse_monoid(2).size(), 3u);
  EXPECT_EQ(c::dual_symmetric_inverse_monoid(3).size(), 25u);
  EXPECT_EQ(c::partition_monoid(1).size(), 2u);
  EXPECT_EQ(c::partition_monoid(2).size(), 15u);
  EXPECT_EQ(c::partition_monoid(3).size(), 203u);
  EXPECT_EQ(c::zero_semigroup(3).size(), 4u);
  EXPECT_EQ(c::doubled_semigroup(c::left_zero(2)).size(), 5u);
  EXPECT_EQ(c::doubled_semigroup(c::full_transformation_monoid(3)).size(), 55u);
}

TEST(Transformations, ComposeRightToLeft) {
  auto t = c::full_transformation_monoid(3);
  // Index of f is f(0)*9 + f(1)*3 + f(2).
  auto idx = [](int a, int b, int d) { return static_cast<Element>(a * 9 + b * 3 + d); };
  // f = 120 (cycle), g = 001: (fg)(x) = f(g(x)) = 1,1,2.
  EXPECT_EQ(t.product(idx(1, 2, 0), idx(0, 0, 1)), idx(1, 1, 2));
  EXPECT_EQ(*t.identity(), idx(0, 1, 2));
}

TEST(Partitions, StarIsAnAntiInvolution) {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto p = c::partition_monoid(n);
    auto star = c::star_map(n);
    EXPECT_TRUE(oracle::is_involutive(star));
    EXPECT_TRUE(is_anti_homomorphism(star, p, p));
    for (Element f = 0; f < p.size(); ++f) EXPECT_EQ(p.product(p.product(f, star(f)), f), f);
  }
  EXPECT_TRUE(is_proper_involution(c::star_map(2), c::partition_monoid(2)));
}

TEST(Partitions, BlockBijectionsAreClosed) {
  auto p = c::partition_monoid(3);
  auto i = c::dual_symmetric_inverse_monoid(3);
  EXPECT_TRUE(i.identity().has_value());
  EXPECT_EQ(enumerate_automorphisms(i).size(), 6u);
}

TEST(Bands, Examples) {
  EXPECT_TRUE(enumerate_anti_automorphisms(c::rectangular_band(2, 3)).empty());
  EXPECT_EQ(enumerate_automorphisms(c::rectangular_band(2, 2)).size(), 4u);
  EXPECT_EQ(c::rectangular_band(1, 1).size(), 1u);
  EXPECT_EQ(c::left_zero(3).product(1, 2), 1u);
  EXPECT_EQ(c::right_zero(3).product(1, 2), 2u);
}

TEST(Bands, SignedAutMatchesGammaDelta) {
  for (std::size_t n : {2, 3}) {
    auto b = c::rectangular_band(n, n);
    auto perms = all_perms(n);
    std::vector<Permutation> gammas, deltas;
    for (const auto& s : perms)
      for (const auto& t : perms) {
        gammas.push_back(c::band_gamma(s, t));
        deltas.push_back(c::band_delta(s, t));
      }
    std::sort(gammas.begin(), gammas.end());
    std::sort(deltas.begin(), deltas.end());
    EXPECT_EQ(enumerate_automorphisms(b).elements, gammas);
    EXPECT_EQ(enumerate_anti_automorphisms(b).elements, deltas);
    // gamma(s1,t1) gamma(s2,t2) = gamma(s1 s2, t1 t2); gamma delta = delta(s1 s2, t1 t2);
    // delta gamma = delta(s1 t2, t1 s2); delta delta = gamma(s1 t2, t1 s2).
    for (const auto& s1 : perms)
      for (const auto& t1 : perms)
        for (const auto& s2 : perms)
          for (const auto& t2 : perms) {
            EXPECT_EQ(compose(c::band_gamma(s1, t1), c::band_gamma(s2, t2)), c::band_gamma(compose(s1, s2), compose(t1, t2)));
            EXPECT_EQ(compose(c::band_gamma(s1, t1), c::band_delta(s2, t2)), c::band_delta(compose(s1, s2), compose(t1, t2)));
            EXPECT_EQ(compose(c::band_delta(s1, t1), c::band_gamma(s2, t2)), c::band_delta(compose(s1, t2), compose(t1, s2)));
            EXPECT_EQ(compose(c::band_delta(s1, t1), c::band_delta(s2, t2)), c::band_gamma(compose(s1, t2), compose(t1, s2)));
          }
  }
}

TEST(Zero, Examples) {
  EXPECT_EQ(c_group(c::zero_semigroup(3)).order(), 6u);
  EXPECT_EQ(c_group(c::zero_semigroup(1)).order(), 1u);
  EXPECT_EQ(oracle::brute_morphisms(c::zero_semigroup(2), false).size(), 2u);
  EXPECT_EQ(enumerate_automorphisms(c::zero_semigroup(2)).size(), 2u);
}

TEST(Doubled, Examples) {
  EXPECT_EQ(enumerate_automorphisms(c::doubled_semigroup(c::left_zero(2))).size(), 4u);
  auto d2 = c::doubled_semigroup(c::full_transformation_monoid(2));
  EXPECT_EQ(c_group(d2).order(), 4u);
  auto d3 = c::doubled_semigroup(c::full_transformation_monoid(3));
  EXPECT_EQ(enumerate_automorphisms(d3).size(), 36u);
  EXPECT_EQ(c_group(d3).order(), 36u);
}

TEST(Doubled, GammaDeltaAreMorphisms) {
  auto s = c::left_zero(3);
  auto d = c::doubled_semigroup(s);
  for (const auto& a : all_perms(3))
    for (const auto& b : all_perms(3)) {
      EXPECT_TRUE(is_homomorphism(c::doubled_gamma(a, b), d, d));
      EXPECT_TRUE(is_anti_homomorphism(c::doubled_delta(a, b), d, d));
    }
}

TEST(DirectProduct, Examples) {
  EXPECT_TRUE(find_isomorphism(c::direct_product(c::cyclic_group(2), c::cyclic_group(2)), c::klein_four()).has_value());
  EXPECT_TRUE(find_isomorphism(c::direct_product(c::cyclic_group(2), c::cyclic_group(3)), c::cyclic_group(6)).has_value());
  EXPECT_EQ(c::direct_product(c::cyclic_group(2), c::sym_group_table(3)).size(), 12u);
}

TEST(DualTable, Examples) {
  EXPECT_EQ(c::dual_table(c::cyclic_group(5)), c::cyclic_group(5));
  EXPECT_EQ(c::dual_table(c::left_zero(2)), c::right_zero(2));
  auto t = c::full_transformation_monoid(2);
  EXPECT_EQ(c::dual_table(c::dual_table(t)), t);
}

TEST(Builders, RejectOutOfRangeParameters) {
  EXPECT_THROW(c::cyclic_group(0), InputError);
  EXPECT_THROW(c::full_transformation_monoid(5), InputError);
  EXPECT_THROW(c::partition_monoid(4), InputError);
  EXPECT_THROW(c::sym_group_table(7), InputError);
  EXPECT_THROW(c::zero_semigroup(0), InputError);
}
