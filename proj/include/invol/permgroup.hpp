#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "invol/morphism.hpp"
#include "invol/permutation.hpp"
#include "invol/semigroup.hpp"

namespace invol {

struct ClosureOptions {
  std::uint64_t order_budget = 1'000'000;
};

/// A permutation group with every element materialized, sorted lexicographically.
class PermGroup {
 public:
  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(const Permutation& p) const;

 private:
  friend PermGroup closure(std::size_t degree, std::vector<Permutation> generators, const ClosureOptions& options);
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

/// Subgroup of Sym(degree) generated by `generators` (breadth-first product
/// saturation). The empty generator list gives the trivial group.
PermGroup closure(std::size_t degree, std::vector<Permutation> generators, const ClosureOptions& options = {});

struct GroupOptions {
  SearchOptions search;
  ClosureOptions closure;
};

/// C(S): the group generated by the involutions of S.
PermGroup c_group(const FiniteSemigroup& s, const GroupOptions& options = {});
/// G(S): the group generated by the automorphisms of order at most two.
PermGroup g_group(const FiniteSemigroup& s, const GroupOptions& options = {});
/// Aut±(S): automorphisms together with anti-automorphisms.
PermGroup signed_aut_group(const FiniteSemigroup& s, const GroupOptions& options = {});

PermGroup derived_subgroup(const PermGroup& g, const ClosureOptions& options = {});

struct GroupFingerprint {
  std::uint64_t order = 0;
  bool abelian = false;
  std::uint64_t exponent = 1;
  std::map<std::uint64_t, std::uint64_t> element_orders;  // order -> count
  std::uint64_t center_order = 0;
  std::uint64_t derived_order = 0;

  friend bool operator==(const GroupFingerprint&, const GroupFingerprint&) = default;
};

GroupFingerprint fingerprint(const PermGroup& g, const ClosureOptions& options = {});
/// Same invariants computed on the Cayley table of a group. Throws NotAGroup.
GroupFingerprint group_table_fingerprint(const FiniteSemigroup& g);

/// Cayley table over the sorted element list (identity first).
/// Throws OrderBudgetExceeded above `max_order`.
FiniteSemigroup to_cayley_table(const PermGroup& g, std::size_t max_order = kMaxSemigroupSize);

/// Fingerprint pre-filter followed by an exact isomorphism search.
bool is_isomorphic_to(const PermGroup& g, const FiniteSemigroup& expected_group_table,
                      const SearchOptions& options = {});

/// Subgroup K_G of G x G generated by the pairs (g, g^-1), alongside the set
/// {(g, h) : gh in [G, G]} computed independently.
struct KGroup {
  std::vector<std::pair<Element, Element>> elements;          // closure, sorted
  std::vector<std::pair<Element, Element>> characterization;  // sorted
  std::size_t derived_order = 0;
  bool matches() const { return elements == characterization; }
  std::size_t order() const { return elements.size(); }
};

/// Throws NotAGroup if the table is not a group.
KGroup k_group(const FiniteSemigroup& group_table);

/// Inverse of every element of a group table. Throws NotAGroup.
std::vector<Element> group_inverses(const FiniteSemigroup& group_table);

/// Writes pi as sigma o tau with sigma^2 = tau^2 = 1, cycle by cycle.
std::pair<Permutation, Permutation> two_involution_factorization(const Permutation& pi);

}  // namespace invol
