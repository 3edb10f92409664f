#include <gtest/gtest.h>

#include <random>

#include "invol/errors.hpp"
#include "invol/trace.hpp"
#include "support/oracles.hpp"

using namespace invol;

namespace {

std::shared_ptr<const TraceContext> ctx(std::size_t m, std::vector<std::pair<Element, Element>> edges) {
  return std::make_shared<const TraceContext>(SimpleGraph(m, edges));
}

std::string nf(const std::shared_ptr<const TraceContext>& c, std::string_view w) {
  return normal_form(TraceWord::parse(c, w)).to_string();
}

}  // namespace

TEST(NormalForm, Examples) {
  EXPECT_EQ(nf(ctx(2, {{0, 1}}), "ba"), "ab");
  EXPECT_EQ(nf(ctx(3, {}), "cabbac"), "cabbac");
  EXPECT_EQ(nf(ctx(3, {{0, 1}}), "bca"), "bca");
}

TEST(NormalForm, NoAdjacentSwapIsNotEnough) {
  // "cab" has no adjacent commuting inversion, yet "bca" is equivalent and smaller.
  auto c = ctx(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(nf(c, "cab"), "bca");
  EXPECT_TRUE(trace_equal(TraceWord::parse(c, "cab"), TraceWord::parse(c, "bca")));
}

TEST(NormalForm, LengthBudget) {
  auto c = std::make_shared<const TraceContext>(SimpleGraph(2, {{0, 1}}), 4);
  EXPECT_THROW(normal_form(TraceWord::parse(c, "ababa")), LengthBudgetExceeded);
}

TEST(NormalForm, MatchesBreadthFirstOracle) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t m = 1 + rng() % 5;
    std::vector<std::pair<Element, Element>> edges;
    for (Element a = 0; a < m; ++a)
      for (Element b = a + 1; b < m; ++b)
        if (rng() % 2) edges.emplace_back(a, b);
    auto c = ctx(m, edges);
    std::vector<Letter> w(1 + rng() % 8);
    for (auto& x : w) x = static_cast<Letter>(rng() % m);
    auto cls = oracle::trace_class(*c, w);
    EXPECT_EQ(normal_form(TraceWord(c, w)).letters(), *cls.begin());
    for (const auto& v : cls) EXPECT_TRUE(trace_equal(TraceWord(c, w), TraceWord(c, v)));
  }
}

TEST(TraceEqual, Examples) {
  auto with = ctx(2, {{0, 1}});
  auto without = ctx(2, {});
  EXPECT_TRUE(trace_equal(TraceWord::parse(with, "ab"), TraceWord::parse(with, "ba")));
  EXPECT_FALSE(trace_equal(TraceWord::parse(without, "ab"), TraceWord::parse(without, "ba")));
  EXPECT_TRUE(trace_equal(TraceWord::parse(without, "abba"), TraceWord::parse(without, "abba")));
  EXPECT_THROW(trace_equal(TraceWord::parse(with, "ab"), TraceWord::parse(without, "ab")), ContextMismatch);
}

TEST(TraceWord, RejectsBadInput) {
  auto c = ctx(2, {});
  EXPECT_THROW(TraceWord::parse(c, ""), InputError);
  EXPECT_THROW(TraceWord::parse(c, "abc"), InputError);
  EXPECT_THROW(TraceWord::parse(c, "aB"), ParseError);
}

TEST(Maps, Examples) {
  auto c = ctx(3, {});
  EXPECT_EQ(delta_map(Permutation::identity(3), TraceWord::parse(c, "abc")).to_string(), "cba");
  EXPECT_EQ(gamma_map(Permutation::identity(3), TraceWord::parse(c, "abc")).to_string(), "abc");
  auto e = ctx(2, {{0, 1}});
  auto swapped = gamma_map(Permutation({1, 0}), TraceWord::parse(e, "ab"));
  EXPECT_EQ(swapped.to_string(), "ba");
  EXPECT_TRUE(trace_equal(swapped, TraceWord::parse(e, "ab")));
}

TEST(Maps, RequireGraphAutomorphism) {
  auto c = ctx(3, {{0, 1}});
  EXPECT_THROW(gamma_map(Permutation({0, 2, 1}), TraceWord::parse(c, "ab")), NotGraphAutomorphism);
  EXPECT_THROW(delta_map(Permutation({0, 2, 1}), TraceWord::parse(c, "ab")), NotGraphAutomorphism);
}

TEST(Concatenation, JoinsWords) {
  auto c = ctx(3, {});
  EXPECT_EQ((TraceWord::parse(c, "ab") * TraceWord::parse(c, "c")).to_string(), "abc");
}
