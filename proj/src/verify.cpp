#include "invol/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "invol/constructions.hpp"
#include "invol/graph.hpp"
#include "invol/morphism.hpp"
#include "invol/permgroup.hpp"
#include "invol/trace.hpp"

namespace invol::verify {

namespace {

// Naive reference computations the battery compares the engines against.
namespace ref {

using Table = std::vector<std::vector<Element>>;

inline Table table_of(const FiniteSemigroup& s) { return s.rows(); }

inline bool associative(const Table& t) {
  const std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (t[t[i][j]][k] != t[i][t[j][k]]) return false;
  return true;
}

/// All bijections f of {0..n-1} with f(xy) = f(x)f(y) (or f(y)f(x) when anti).
inline std::vector<Permutation> brute_morphisms(const FiniteSemigroup& s, bool anti) {
  const std::size_t n = s.size();
  const Table t = table_of(s);
  std::vector<Element> f(n);
  std::iota(f.begin(), f.end(), Element{0});
  std::vector<Permutation> out;
  do {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y)
        ok = f[t[x][y]] == (anti ? t[f[y]][f[x]] : t[f[x]][f[y]]);
    if (ok) out.emplace_back(f);
  } while (std::next_permutation(f.begin(), f.end()));
  return out;
}

inline std::vector<Permutation> brute_graph_automorphisms(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Element> f(n);
  std::iota(f.begin(), f.end(), Element{0});
  std::vector<Permutation> out;
  do {
    bool ok = true;
    for (Element u = 0; u < n && ok; ++u)
      for (Element v = 0; v < n && ok; ++v)
        if (u != v) ok = g.adjacent(u, v) == g.adjacent(f[u], f[v]);
    if (ok) out.emplace_back(f);
  } while (std::next_permutation(f.begin(), f.end()));
  return out;
}

/// Naive closure: keep multiplying everything by everything until stable.
inline std::set<Permutation> naive_closure(std::size_t degree, const std::vector<Permutation>& gens) {
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::deque<Permutation> todo{Permutation::identity(degree)};
  while (!todo.empty()) {
    Permutation p = todo.front();
    todo.pop_front();
    for (const auto& g : gens) {
      Permutation q = compose(g, p);
      if (seen.insert(q).second) todo.push_back(q);
    }
  }
  return seen;
}

inline bool is_identity(const Permutation& p) {
  for (Element x = 0; x < p.degree(); ++x)
    if (p(x) != x) return false;
  return true;
}

inline bool is_involutive(const Permutation& p) { return is_identity(compose(p, p)); }

/// Commutator subgroup of a group table: subgroup generated by all ghg^-1h^-1.
inline std::set<Element> brute_derived(const FiniteSemigroup& g) {
  const std::size_t n = g.size();
  const Element e = *g.identity();
  std::vector<Element> inv(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (g.product(a, b) == e) inv[a] = b;
  std::set<Element> h{e};
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) h.insert(g.product(g.product(a, b), g.product(inv[a], inv[b])));
  bool grown = true;
  while (grown) {
    grown = false;
    std::vector<Element> cur(h.begin(), h.end());
    for (Element a : cur)
      for (Element b : cur) grown |= h.insert(g.product(a, b)).second;
  }
  return h;
}

/// Every word reachable from w by swapping adjacent commuting letters.
inline std::set<std::vector<Letter>> trace_class(const TraceContext& ctx,
                                                        const std::vector<Letter>& w) {
  std::set<std::vector<Letter>> seen{w};
  std::deque<std::vector<Letter>> todo{w};
  while (!todo.empty()) {
    auto u = todo.front();
    todo.pop_front();
    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
      if (u[i] == u[i + 1] || !ctx.commute(u[i], u[i + 1])) continue;
      auto v = u;
      std::swap(v[i], v[i + 1]);
      if (seen.insert(v).second) todo.push_back(std::move(v));
    }
  }
  return seen;
}

inline FiniteSemigroup relabel(const FiniteSemigroup& s, const std::vector<Element>& p) {
  const std::size_t n = s.size();
  std::vector<Element> flat(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) flat[p[a] * n + p[b]] = p[s.product(a, b)];
  return FiniteSemigroup::from_flat(n, std::move(flat));
}

inline FiniteSemigroup random_relabel(const FiniteSemigroup& s, std::mt19937_64& rng) {
  std::vector<Element> p(s.size());
  std::iota(p.begin(), p.end(), Element{0});
  std::shuffle(p.begin(), p.end(), rng);
  return relabel(s, p);
}

/// Uniformly random n x n table, redrawn until associative. Practical for n <= 3.
inline FiniteSemigroup random_associative_table(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  for (;;) {
    Table t(n, std::vector<Element>(n));
    for (auto& row : t)
      for (auto& x : row) x = pick(rng);
    if (!associative(t)) continue;
    std::vector<Element> flat;
    for (auto& row : t) flat.insert(flat.end(), row.begin(), row.end());
    return FiniteSemigroup::from_flat(n, std::move(flat));
  }
}

/// Restriction of s to a subset closed under the product, renumbered in order.
inline FiniteSemigroup restrict_to(const FiniteSemigroup& s, const std::vector<Element>& subset) {
  const std::size_t m = subset.size();
  std::vector<Element> flat(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Element p = s.product(subset[i], subset[j]);
      flat[i * m + j] = static_cast<Element>(std::lower_bound(subset.begin(), subset.end(), p) - subset.begin());
    }
  return FiniteSemigroup::from_flat(m, std::move(flat));
}

/// Subsemigroup of `s` generated by a few random elements, if it has at most
/// `max_size` elements.
inline std::optional<FiniteSemigroup> random_subsemigroup(const FiniteSemigroup& s, std::size_t max_size,
                                                          std::mt19937_64& rng) {
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(s.size() - 1));
  std::uniform_int_distribution<int> count(1, 3);
  std::set<Element> set;
  std::deque<Element> todo;
  for (int i = count(rng); i-- > 0;) {
    const Element g = pick(rng);
    if (set.insert(g).second) todo.push_back(g);
  }
  const std::vector<Element> gens(set.begin(), set.end());
  while (!todo.empty()) {
    const Element x = todo.front();
    todo.pop_front();
    for (Element g : gens) {
      for (Element y : {s.product(x, g), s.product(g, x)}) {
        if (set.insert(y).second) todo.push_back(y);
        if (set.size() > max_size) return std::nullopt;
      }
    }
  }
  return restrict_to(s, std::vector<Element>(set.begin(), set.end()));
}

/// Small graphs with at least one edge, named.
inline std::vector<std::pair<std::string, SimpleGraph>> graph_corpus() {
  std::vector<std::pair<std::string, SimpleGraph>> out;
  for (std::size_t n = 2; n <= 5; ++n) out.emplace_back("path" + std::to_string(n), SimpleGraph::path(n));
  for (std::size_t n = 3; n <= 6; ++n) out.emplace_back("cycle" + std::to_string(n), SimpleGraph::cycle(n));
  for (std::size_t n = 3; n <= 5; ++n) out.emplace_back("complete" + std::to_string(n), SimpleGraph::complete(n));
  out.emplace_back("star4", SimpleGraph(4, {{0, 1}, {0, 2}, {0, 3}}));
  out.emplace_back("edge+vertex", SimpleGraph(3, {{0, 1}}));
  out.emplace_back("two edges", SimpleGraph(4, {{0, 1}, {2, 3}}));
  out.emplace_back("paw", SimpleGraph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}));
  // Smallest asymmetric tree: branches of lengths 1, 2 and 3 at vertex 2.
  out.emplace_back("rigid tree 7", SimpleGraph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}}));
  out.emplace_back("rigid tree 8", SimpleGraph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 7}}));
  return out;
}

}  // namespace ref

GroupOptions opts;
bool stretch = false;
bool full = true;

struct Outcome {
  bool passed = true;
  std::string detail;
};

class Recorder {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && out_.passed) {
      out_.passed = false;
      out_.detail = "first failure: " + what;
    }
  }
  Outcome finish(const std::string& summary) {
    if (out_.passed) out_.detail = summary + " (" + std::to_string(checks_) + " checks)";
    return out_;
  }

 private:
  Outcome out_;
  std::size_t checks_ = 0;
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> run;
};

std::uint64_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::vector<Permutation> all_perms(std::size_t n) {
  std::vector<Element> v(n);
  std::iota(v.begin(), v.end(), Element{0});
  std::vector<Permutation> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<Permutation> sorted(std::vector<Permutation> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

FiniteSemigroup z2_times(const FiniteSemigroup& g) { return construct::direct_product(construct::cyclic_group(2), g); }

std::string str(std::size_t x) { return std::to_string(x); }

// ---------------------------------------------------------------------------

Outcome klein() {
  Recorder r;
  auto k = construct::klein_four();
  auto aut = enumerate_automorphisms(k, opts.search);
  auto inv = involutions(k, opts.search);
  auto cg = c_group(k, opts);
  r.expect(aut.size() == 6, "|Aut| = " + str(aut.size()));
  r.expect(inv.size() == 3, "|I| = " + str(inv.size()));
  r.expect(find_isomorphism(to_cayley_table(cg), construct::sym_group_table(3), opts.search).has_value(), "C(K) not isomorphic to Sym(3)");
  return r.finish("|Aut|=6, |I|=3, C = Sym(3)");
}

Outcome cyclic_sweep() {
  Recorder r;
  const std::size_t top = full ? 200 : 60;
  for (std::size_t n = 2; n <= top; ++n) {
    std::size_t roots = 0;
    for (std::size_t k = 0; k < n; ++k) roots += (k * k) % n == 1 ? 1 : 0;
    const std::size_t expected = std::size_t{1} << construct::r_of_n(n);
    r.expect(roots == expected, "n=" + str(n) + ": 2^R(n) disagrees with the count of k^2 = 1");
    auto inv = involutions(construct::cyclic_group(n), opts.search);
    auto cg = closure(n, inv.elements, opts.closure);
    r.expect(inv.size() + 1 == expected, "n=" + str(n) + ": |I| = " + str(inv.size()));
    r.expect(cg.order() == expected, "n=" + str(n) + ": |C| = " + str(cg.order()));
    for (const auto& g : cg.elements()) r.expect(ref::is_involutive(g), "n=" + str(n) + ": exponent > 2");
  }
  return r.finish("n = 2.." + str(top) + ": |C(Z_n)| = 2^R(n), exponent <= 2");
}

Outcome symmetric_groups() {
  Recorder r;
  for (std::size_t n : {3, 4, 5}) {
    auto cg = c_group(construct::sym_group_table(n), opts);
    r.expect(cg.order() == 2 * factorial(n), "Sym(" + str(n) + "): |C| = " + str(cg.order()));
    r.expect(is_isomorphic_to(cg, z2_times(construct::sym_group_table(n)), opts.search), "Sym(" + str(n) + "): C not Z2 x Sym(n)");
  }
  std::string summary = "C(Sym(n)) = Z2 x Sym(n) for n = 3, 4, 5";
  if (stretch) {
    auto aut = enumerate_automorphisms(construct::sym_group_table(6), opts.search);
    r.expect(aut.size() == 1440, "|Aut(Sym(6))| = " + str(aut.size()));
    summary += "; stretch |Aut(Sym(6))| = 1440";
  }
  return r.finish(summary);
}

Outcome transformations() {
  Recorder r;
  std::vector<std::size_t> sizes{2, 3};
  if (stretch) sizes.push_back(4);
  for (std::size_t n : sizes) {
    auto t = construct::full_transformation_monoid(n);
    auto aut = enumerate_automorphisms(t, opts.search);
    auto anti = enumerate_anti_automorphisms(t, opts.search);
    r.expect(anti.empty(), "T" + str(n) + ": anti-automorphisms found");
    r.expect(aut.size() == factorial(n), "T" + str(n) + ": |Aut| = " + str(aut.size()));
    r.expect(closure(t.size(), involutions_from(anti).elements, opts.closure).order() == 1, "T" + str(n) + ": C nontrivial");
  }
  return r.finish(std::string("Aut- empty, |Aut| = n!, C trivial for n = 2, 3") + (stretch ? ", 4" : ""));
}

Outcome inverse_monoids() {
  Recorder r;
  for (std::size_t n : {2, 3}) {
    auto cg = c_group(construct::symmetric_inverse_monoid(n), opts);
    r.expect(is_isomorphic_to(cg, z2_times(construct::sym_group_table(n)), opts.search), "I" + str(n) + ": C not Z2 x Sym(n)");
  }
  auto dual = construct::dual_symmetric_inverse_monoid(3);
  r.expect(dual.size() == 25, "|I*_3| = " + str(dual.size()));
  r.expect(enumerate_automorphisms(dual, opts.search).size() == 6, "|Aut(I*_3)| != 6");
  r.expect(c_group(dual, opts).order() == 12, "|C(I*_3)| != 12");
  return r.finish("C(I_n) = Z2 x Sym(n) for n = 2, 3; I*_3: |Aut|=6, |C|=12");
}

Outcome partition_monoids() {
  Recorder r;
  for (std::size_t n : {2, 3}) {
    auto p = construct::partition_monoid(n);
    auto star = construct::star_map(n);
    auto inv = involutions(p, opts.search);
    r.expect(inv.contains(star), "P" + str(n) + ": * is not an involution");
    r.expect(is_proper_involution(star, p), "P" + str(n) + ": * is a homomorphism");
    auto cg = closure(p.size(), inv.elements, opts.closure);
    r.expect(is_isomorphic_to(cg, z2_times(construct::sym_group_table(n)), opts.search), "P" + str(n) + ": C not Z2 x Sym(n)");
  }
  return r.finish("* proper involution, C(P_n) = Z2 x Sym(n) for n = 2, 3");
}

Outcome bands() {
  Recorder r;
  auto b23 = construct::rectangular_band(2, 3);
  r.expect(enumerate_anti_automorphisms(b23, opts.search).empty(), "2x3: anti-automorphisms found");
  r.expect(c_group(b23, opts).order() == 1, "2x3: C nontrivial");
  for (std::size_t n : {2, 3}) {
    const std::string tag = str(n) + "x" + str(n) + ": ";
    auto b = construct::rectangular_band(n, n);
    const std::uint64_t f2 = factorial(n) * factorial(n);
    r.expect(enumerate_automorphisms(b, opts.search).size() == f2, tag + "|Aut| != (n!)^2");
    r.expect(signed_aut_group(b, opts).order() == 2 * f2, tag + "|Aut+-| != 2(n!)^2");
    std::vector<Permutation> expected_inv, expected_c;
    for (const auto& s : all_perms(n)) {
      expected_inv.push_back(construct::band_delta(s, s.inverse()));
      for (const auto& t : all_perms(n)) {
        if (s.sign() * t.sign() != 1) continue;
        expected_c.push_back(construct::band_gamma(s, t));
        expected_c.push_back(construct::band_delta(s, t));
      }
    }
    auto inv = involutions(b, opts.search);
    r.expect(inv.elements == sorted(expected_inv), tag + "I(B) != {delta(s, s^-1)}");
    r.expect(inv.size() == factorial(n), tag + "|I(B)| != n!");
    auto cg = closure(b.size(), inv.elements, opts.closure);
    r.expect(cg.elements() == sorted(expected_c), tag + "C(B) != even-product set");
    r.expect(cg.order() == f2, tag + "|C| != (n!)^2");
  }
  return r.finish("2x3 rigid; square n = 2, 3: Aut, Aut+-, I(B), C(B) exact");
}

Outcome doubled() {
  Recorder r;
  const std::vector<std::pair<std::string, FiniteSemigroup>> bases{{"LZ2", construct::left_zero(2)},
                                                                   {"LZ3", construct::left_zero(3)},
                                                                   {"T2", construct::full_transformation_monoid(2)},
                                                                   {"T3", construct::full_transformation_monoid(3)}};
  for (const auto& [name, s] : bases) {
    auto d = construct::doubled_semigroup(s);
    auto aut_s = enumerate_automorphisms(s, opts.search);
    auto aut_d = enumerate_automorphisms(d, opts.search);
    r.expect(aut_d.size() == aut_s.size() * aut_s.size(), name + ": |Aut(D)| != |Aut(S)|^2");
    std::vector<Permutation> expected;
    for (const auto& a : aut_s.elements) expected.push_back(construct::doubled_delta(a, a.inverse()));
    auto inv = involutions(d, opts.search);
    r.expect(inv.elements == sorted(expected), name + ": I(D) != {delta(a, a^-1)}");
    auto k = k_group(to_cayley_table(closure(s.size(), aut_s.elements, opts.closure)));
    auto cg = closure(d.size(), inv.elements, opts.closure);
    r.expect(cg.order() == 2 * k.order(), name + ": |C(D)| = " + str(cg.order()) + ", |K| = " + str(k.order()));
  }
  return r.finish("S = LZ2, LZ3, T2, T3: |Aut(D)| = |Aut(S)|^2, I(D) exact, |C(D)| = 2|K|");
}

Outcome frucht() {
  Recorder r;
  const auto corpus = ref::graph_corpus();
  r.expect(corpus.size() >= 10, "corpus too small");
  for (const auto& [name, g] : corpus) {
    auto s = frucht_semigroup(g);
    auto brute = ref::brute_graph_automorphisms(g);
    auto aut_s = enumerate_automorphisms(s, opts.search);
    r.expect(aut_s.size() == brute.size(), name + ": |Aut(S)| = " + str(aut_s.size()) + ", |Aut(G)| = " + str(brute.size()));
    std::vector<Permutation> twos;
    for (const auto& p : brute)
      if (!p.is_identity() && ref::is_involutive(p)) twos.push_back(p);
    const auto expected = ref::naive_closure(g.vertex_count(), twos).size();
    r.expect(c_group(s, opts).order() == expected, name + ": |C(S)| != |<order-2 elements of Aut(G)>|");
  }
  return r.finish(str(corpus.size()) + " graphs: |Aut(S)| = |Aut(G)|, |C(S)| = |<involutions of Aut(G)>|");
}

Outcome factorization() {
  Recorder r;
  std::size_t total = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& pi : all_perms(n)) {
      auto [s, t] = two_involution_factorization(pi);
      r.expect(ref::is_involutive(s) && ref::is_involutive(t), pi.to_cycle_string() + ": factor not an involution");
      r.expect(compose(s, t) == pi, pi.to_cycle_string() + ": sigma o tau != pi");
      ++total;
    }
  }
  return r.finish(str(total) + " permutations of degree <= 6 factored");
}

FiniteSemigroup quaternion_group() {
  // Units +-1, +-i, +-j, +-k as 2q + (sign < 0).
  static const int basis[4][4][2] = {{{1, 0}, {1, 1}, {1, 2}, {1, 3}},
                                     {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
                                     {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
                                     {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}};
  std::vector<Element> flat(64);
  for (Element a = 0; a < 8; ++a)
    for (Element b = 0; b < 8; ++b) {
      const auto& m = basis[a / 2][b / 2];
      const bool negative = (m[0] < 0) != ((a % 2) != (b % 2));
      flat[a * 8 + b] = static_cast<Element>(2 * m[1] + (negative ? 1 : 0));
    }
  return FiniteSemigroup::from_flat(8, std::move(flat));
}

FiniteSemigroup perm_group_table(std::size_t degree, const std::vector<std::string>& gens) {
  std::vector<Permutation> ps;
  for (const auto& g : gens) ps.push_back(Permutation::parse_cycles(g, degree));
  return to_cayley_table(closure(degree, ps, opts.closure));
}

Outcome k_groups() {
  Recorder r;
  auto s3 = k_group(construct::sym_group_table(3));
  r.expect(s3.order() == 18, "|K_Sym(3)| = " + str(s3.order()));
  std::vector<std::pair<std::string, FiniteSemigroup>> corpus;
  for (std::size_t n = 1; n <= 24; ++n) corpus.emplace_back("Z" + str(n), construct::cyclic_group(n));
  auto z2 = construct::cyclic_group(2);
  corpus.emplace_back("Klein", construct::klein_four());
  corpus.emplace_back("Z2^3", construct::direct_product(z2, construct::klein_four()));
  corpus.emplace_back("Z2^4", construct::direct_product(construct::klein_four(), construct::klein_four()));
  corpus.emplace_back("Z2xZ4", construct::direct_product(z2, construct::cyclic_group(4)));
  corpus.emplace_back("Z3xZ3", construct::direct_product(construct::cyclic_group(3), construct::cyclic_group(3)));
  corpus.emplace_back("Sym(3)", construct::sym_group_table(3));
  corpus.emplace_back("Sym(4)", construct::sym_group_table(4));
  corpus.emplace_back("Z2xSym(3)", z2_times(construct::sym_group_table(3)));
  corpus.emplace_back("Z3xSym(3)", construct::direct_product(construct::cyclic_group(3), construct::sym_group_table(3)));
  corpus.emplace_back("Z4xSym(3)", construct::direct_product(construct::cyclic_group(4), construct::sym_group_table(3)));
  corpus.emplace_back("Q8", quaternion_group());
  corpus.emplace_back("Z2xQ8", z2_times(quaternion_group()));
  corpus.emplace_back("Z3xQ8", construct::direct_product(construct::cyclic_group(3), quaternion_group()));
  corpus.emplace_back("D4", perm_group_table(4, {"(0 1 2 3)", "(0 2)"}));
  corpus.emplace_back("Z2xD4", z2_times(perm_group_table(4, {"(0 1 2 3)", "(0 2)"})));
  corpus.emplace_back("D5", perm_group_table(5, {"(0 1 2 3 4)", "(1 4)(2 3)"}));
  corpus.emplace_back("D6", perm_group_table(6, {"(0 1 2 3 4 5)", "(1 5)(2 4)"}));
  corpus.emplace_back("Alt(4)", perm_group_table(4, {"(0 1 2)", "(0 1)(2 3)"}));
  corpus.emplace_back("Z2xAlt(4)", z2_times(perm_group_table(4, {"(0 1 2)", "(0 1)(2 3)"})));
  corpus.emplace_back("Z3:Z4", perm_group_table(7, {"(0 1 2)", "(1 2)(3 4 5 6)"}));
  for (const auto& [name, g] : corpus) {
    auto k = k_group(g);
    auto d = ref::brute_derived(g);
    std::vector<std::pair<Element, Element>> expected;
    for (Element a = 0; a < g.size(); ++a)
      for (Element b = 0; b < g.size(); ++b)
        if (d.count(g.product(a, b))) expected.emplace_back(a, b);
    r.expect(k.elements == expected, name + ": K_G != {(g, h) : gh in [G, G]}");
    r.expect(k.matches(), name + ": closure and characterization disagree");
  }
  return r.finish("|K_Sym(3)| = 18; law holds on " + str(corpus.size()) + " groups of order <= 24");
}

Outcome propositions() {
  Recorder r;
  std::vector<std::pair<std::string, FiniteSemigroup>> corpus{
      {"Klein", construct::klein_four()},
      {"Z12", construct::cyclic_group(12)},
      {"Sym(3)", construct::sym_group_table(3)},
      {"Sym(4)", construct::sym_group_table(4)},
      {"T2", construct::full_transformation_monoid(2)},
      {"T3", construct::full_transformation_monoid(3)},
      {"I2", construct::symmetric_inverse_monoid(2)},
      {"I3", construct::symmetric_inverse_monoid(3)},
      {"I*3", construct::dual_symmetric_inverse_monoid(3)},
      {"P2", construct::partition_monoid(2)},
      {"P3", construct::partition_monoid(3)},
      {"B2x3", construct::rectangular_band(2, 3)},
      {"B2x2", construct::rectangular_band(2, 2)},
      {"B3x3", construct::rectangular_band(3, 3)},
      {"D_LZ2", construct::doubled_semigroup(construct::left_zero(2))},
      {"D_LZ3", construct::doubled_semigroup(construct::left_zero(3))},
      {"D_T2", construct::doubled_semigroup(construct::full_transformation_monoid(2))},
      {"D_T3", construct::doubled_semigroup(construct::full_transformation_monoid(3))},
      {"zero3", construct::zero_semigroup(3)},
      {"Frucht(P3)", frucht_semigroup(SimpleGraph::path(3))},
  };
  std::size_t proper = 0, central = 0;
  for (const auto& [name, s] : corpus) {
    auto aut = enumerate_automorphisms(s, opts.search);
    auto anti = enumerate_anti_automorphisms(s, opts.search);
    auto inv = involutions_from(anti);
    auto two = order_two_from(aut);
    std::optional<Permutation> iota;
    bool has_proper = false;
    for (const auto& x : inv.elements) {
      if (is_homomorphism(x, s, s)) continue;
      has_proper = true;
      bool commutes = true;
      for (const auto& a : aut.elements) commutes = commutes && compose(a, x) == compose(x, a);
      if (commutes) {
        iota = x;
        break;
      }
    }
    if (!has_proper) continue;
    ++proper;
    auto cg = closure(s.size(), inv.elements, opts.closure);
    std::size_t in_aut = 0;
    for (const auto& x : cg.elements()) in_aut += aut.contains(x) ? 1 : 0;
    r.expect(cg.order() == 2 * in_aut, name + ": |C| != 2|C & Aut|");
    r.expect(aut.size() + anti.size() == 2 * aut.size(), name + ": |Aut+-| != 2|Aut|");
    if (!iota) continue;
    ++central;
    std::vector<Permutation> images;
    for (const auto& a : two.elements) images.push_back(compose(a, *iota));
    r.expect(images.size() == inv.size() && sorted(images) == inv.elements, name + ": Psi is not a bijection J -> I");
    r.expect(cg.order() == 2 * closure(s.size(), two.elements, opts.closure).order(), name + ": |C| != 2|G|");
  }
  r.expect(central > 0, "no central proper involution in the corpus");
  return r.finish(str(proper) + " semigroups with a proper involution, " + str(central) + " with a central one");
}

Outcome traces() {
  Recorder r;
  std::mt19937_64 rng(20240601);
  auto random_word = [&](std::size_t m, std::size_t max_len) {
    std::vector<Letter> w(1 + rng() % max_len);
    for (auto& x : w) x = static_cast<Letter>(rng() % m);
    return w;
  };
  auto pick = [&](const auto& set) {
    auto it = set.begin();
    std::advance(it, static_cast<std::ptrdiff_t>(rng() % set.size()));
    return *it;
  };
  const int cases = full ? 1000 : 200;
  for (int trial = 0; trial < cases; ++trial) {
    const std::string tag = "case " + std::to_string(trial) + ": ";
    const std::size_t m = 1 + rng() % 5;
    std::vector<std::pair<Element, Element>> edges;
    for (Element a = 0; a < m; ++a)
      for (Element b = a + 1; b < m; ++b)
        if (rng() % 2) edges.emplace_back(a, b);
    auto ctx = std::make_shared<const TraceContext>(SimpleGraph(m, edges));
    const auto autos = ref::brute_graph_automorphisms(ctx->graph());
    const Permutation pi = autos[rng() % autos.size()];
    const Permutation sigma = autos[rng() % autos.size()];

    const auto uw = random_word(m, 8);
    const auto vw = random_word(m, 8);
    const auto cls = ref::trace_class(*ctx, uw);
    const TraceWord u(ctx, uw), v(ctx, vw), u2(ctx, pick(cls));

    // Normal form and equality against the breadth-first class.
    r.expect(normal_form(u).letters() == *cls.begin(), tag + "normal form is not the class minimum");
    r.expect(trace_equal(u, u2), tag + "equivalent words compare unequal");
    r.expect(trace_equal(u, v) == (cls.count(vw) > 0), tag + "trace_equal disagrees with the oracle");

    // Well-definedness of gamma and delta on classes.
    r.expect(trace_equal(gamma_map(pi, u), gamma_map(pi, u2)), tag + "gamma not well defined");
    r.expect(trace_equal(delta_map(pi, u), delta_map(pi, u2)), tag + "delta not well defined");

    // gamma is a morphism, delta an anti-morphism.
    r.expect(trace_equal(gamma_map(pi, u * v), gamma_map(pi, u) * gamma_map(pi, v)), tag + "gamma(uv) != gamma(u)gamma(v)");
    r.expect(trace_equal(delta_map(pi, u * v), delta_map(pi, v) * delta_map(pi, u)), tag + "delta(uv) != delta(v)delta(u)");

    // Composition laws.
    const Permutation ps = compose(pi, sigma);
    r.expect(trace_equal(gamma_map(pi, gamma_map(sigma, u)), gamma_map(ps, u)), tag + "gamma gamma != gamma");
    r.expect(trace_equal(delta_map(pi, delta_map(sigma, u)), gamma_map(ps, u)), tag + "delta delta != gamma");
    r.expect(trace_equal(gamma_map(pi, delta_map(sigma, u)), delta_map(ps, u)), tag + "gamma delta != delta");

    // delta_pi is an involution on traces exactly when pi^2 = 1.
    if (ref::is_involutive(pi)) {
      r.expect(trace_equal(delta_map(pi, delta_map(pi, u)), u), tag + "delta_pi^2 != 1 for pi^2 = 1");
    } else {
      Letter witness = 0;
      const Permutation sq = compose(pi, pi);
      while (sq(witness) == witness) ++witness;
      const TraceWord x(ctx, {witness});
      r.expect(!trace_equal(delta_map(pi, delta_map(pi, x)), x), tag + "delta_pi^2 = 1 although pi^2 != 1");
    }
  }
  return r.finish(std::to_string(cases) + " random cases: normal form, well-definedness, morphism, composition, involution laws");
}

Outcome engine_completeness() {
  Recorder r;
  std::mt19937_64 rng(987654321);
  std::vector<FiniteSemigroup> corpus;
  const std::size_t total = full ? 200 : 60;
  for (std::size_t i = 0; i < total * 7 / 20; ++i) corpus.push_back(ref::random_associative_table(1 + i % 3, rng));
  const auto t3 = construct::full_transformation_monoid(3);
  const auto t4 = construct::full_transformation_monoid(4);
  while (corpus.size() < total * 17 / 20)
    if (auto sub = ref::random_subsemigroup(corpus.size() % 2 ? t3 : t4, 6, rng))
      corpus.push_back(ref::random_relabel(*sub, rng));
  const std::vector<FiniteSemigroup> families{
      construct::cyclic_group(4),       construct::cyclic_group(6),      construct::klein_four(),     construct::sym_group_table(3),
      construct::left_zero(3),          construct::right_zero(4),        construct::rectangular_band(2, 2), construct::rectangular_band(2, 3),
      construct::zero_semigroup(3),     construct::zero_semigroup(5),    construct::full_transformation_monoid(2),
      construct::dual_symmetric_inverse_monoid(2),               construct::doubled_semigroup(construct::left_zero(2)),
      frucht_semigroup(SimpleGraph::path(3)),            frucht_semigroup(SimpleGraph::path(4)),
  };
  for (std::size_t i = 0; corpus.size() < total; ++i) corpus.push_back(ref::random_relabel(families[i % families.size()], rng));
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& s = corpus[i];
    r.expect(s.size() <= 6, "sample " + str(i) + " too large");
    r.expect(enumerate_automorphisms(s, opts.search).elements == ref::brute_morphisms(s, false), "sample " + str(i) + ": Aut differs");
    r.expect(enumerate_anti_automorphisms(s, opts.search).elements == ref::brute_morphisms(s, true), "sample " + str(i) + ": Aut- differs");
  }
  return r.finish(str(corpus.size()) + " semigroups of order <= 6 agree with brute force");
}

}  // namespace

std::vector<CheckResult> run_battery(const BatteryOptions& options,
                                     const std::function<void(const CheckResult&)>& on_result) {
  opts = options.group;
  stretch = options.stretch;
  full = options.scale == Scale::full;

  const std::vector<Criterion> criteria{
      {1, "Klein four-group", 1, klein},
      {2, "Z_n sweep", 30, cyclic_sweep},
      {3, "symmetric groups", 120, symmetric_groups},
      {4, "full transformation monoids", 60, transformations},
      {5, "symmetric and dual symmetric inverse monoids", 120, inverse_monoids},
      {6, "partition monoids", 300, partition_monoids},
      {7, "rectangular and square bands", 60, bands},
      {8, "doubled semigroups", 120, doubled},
      {9, "graph semigroup construction", 60, frucht},
      {10, "two-involution factorization", 10, factorization},
      {11, "K_G characterization", 60, k_groups},
      {12, "proper and central involution laws", 60, propositions},
      {13, "trace property suite", 60, traces},
      {14, "morphism engine completeness", 120, engine_completeness},
  };

  std::vector<CheckResult> results;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    CheckResult res;
    res.id = c.id;
    res.title = c.title;
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    res.limit_seconds = c.limit_seconds;
    res.passed = o.passed && res.seconds <= c.limit_seconds;
    res.detail = o.passed && !res.passed ? o.detail + "; over time limit" : o.detail;
    if (on_result) on_result(res);
    results.push_back(std::move(res));
  }
  return results;
}

}  // namespace invol::verify
