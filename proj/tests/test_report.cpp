#include <gtest/gtest.h>

#include "invol/constructions.hpp"
#include "invol/errors.hpp"
#include "invol/io.hpp"
#include "invol/report.hpp"

using namespace invol;
namespace c = invol::construct;

namespace {

bool matched(const AnalysisReport& r, const std::string& label) {
  for (const auto& id : r.identifications)
    if (id.expected == label) return id.matched;
  return false;
}

}  // namespace

TEST(Io, RoundTrip) {
  for (const auto& s : {c::klein_four(), c::full_transformation_monoid(2), c::left_zero(3)}) {
    auto back = io::parse_semigroup(io::format_semigroup(s));
    EXPECT_EQ(back, s);
    EXPECT_EQ(back.names(), s.names());
    EXPECT_EQ(back.identity(), s.identity());
  }
  auto g = SimpleGraph::cycle(5);
  EXPECT_EQ(io::parse_graph(io::format_graph(g)), g);
}

TEST(Io, Errors) {
  EXPECT_THROW(io::parse_semigroup("{"), ParseError);
  EXPECT_THROW(io::parse_semigroup(R"({"table": [[0]]})"), ParseError);
  EXPECT_THROW(io::parse_semigroup(R"({"n": 2, "table": [[0, 1], [1]]})"), ParseError);
  EXPECT_THROW(io::parse_semigroup(R"({"n": 2, "table": [[0, 1], [1, 2]]})"), IndexOutOfRange);
  EXPECT_THROW(io::parse_semigroup(R"({"n": 2, "table": [[0, 0], [1, 0]]})"), NotAssociative);
  EXPECT_THROW(io::parse_semigroup(R"({"n": 2, "table": [[0, 1], [1, 0]], "identity": 1})"), InputError);
  EXPECT_THROW(io::parse_semigroup(R"({"n": 1, "table": [[0.5]]})"), ParseError);
  EXPECT_THROW(io::parse_graph(R"({"n": 2, "edges": [[0, 2]]})"), InputError);
}

TEST(Io, WhitespaceInsensitive) {
  auto s = io::parse_semigroup("  {\"table\":[[0,1],[1,0]],\n\"n\":2}  ");
  EXPECT_EQ(s, c::cyclic_group(2));
}

TEST(Analyze, Klein) {
  auto r = analyze(c::klein_four(), "klein");
  EXPECT_EQ(r.involutions, 3u);
  EXPECT_EQ(r.c_order, 6u);
  EXPECT_TRUE(matched(r, "Sym(3)"));
  EXPECT_FALSE(matched(r, "Z6"));
  EXPECT_TRUE(r.all_checks_pass());
}

TEST(Analyze, T3) {
  auto r = analyze(c::full_transformation_monoid(3), "T3");
  EXPECT_EQ(r.aut, 6u);
  EXPECT_EQ(r.anti, 0u);
  EXPECT_EQ(r.c_order, 1u);
  EXPECT_FALSE(r.proper_involution_exists);
}

TEST(Analyze, SquareBand) {
  auto r = analyze(c::rectangular_band(3, 3), "band");
  EXPECT_EQ(r.aut, 36u);
  EXPECT_EQ(r.signed_order, 72u);
  EXPECT_EQ(r.c_order, 36u);
  EXPECT_TRUE(r.proper_involution_exists);
  EXPECT_TRUE(r.all_checks_pass());
}

TEST(Analyze, CommutativeSignedOrderIsTheUnion) {
  auto r = analyze(c::cyclic_group(12), "Z12");
  EXPECT_EQ(r.aut, 4u);
  EXPECT_EQ(r.anti, 4u);
  EXPECT_EQ(r.signed_order, 4u);
  EXPECT_TRUE(matched(r, "Z2^2"));
}

TEST(Analyze, OutputIsDeterministicAcrossWorkerCounts) {
  GroupOptions parallel;
  parallel.search.jobs = 3;
  auto s = c::partition_monoid(2);
  EXPECT_EQ(to_text(analyze(s, "P2")), to_text(analyze(s, "P2", parallel)));
  EXPECT_EQ(to_json(analyze(s, "P2")), to_json(analyze(s, "P2", parallel)));
}
