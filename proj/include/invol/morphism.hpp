#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "invol/permutation.hpp"
#include "invol/semigroup.hpp"

namespace invol {

enum class MorphismKind { automorphisms, anti_automorphisms, involutions, order_two_automorphisms };

std::string_view to_string(MorphismKind kind);

/// A complete, canonically sorted set of bijections of one kind.
struct MorphismSet {
  MorphismKind kind = MorphismKind::automorphisms;
  std::size_t domain_size = 0;
  std::vector<Permutation> elements;

  std::size_t size() const { return elements.size(); }
  bool empty() const { return elements.empty(); }
  bool contains(const Permutation& p) const;
};

struct SearchOptions {
  /// Maximum number of extension steps (generator assignments plus product
  /// checks during saturation) before SearchBudgetExceeded is raised.
  std::uint64_t node_budget = 100'000'000;
  /// Worker threads for the top-level branching; results do not depend on it.
  unsigned jobs = 1;
};

enum class AntiStrategy {
  /// Find one anti-automorphism, then compose it with all of Aut(S).
  compose,
  /// Enumerate all isomorphisms S -> dual(S) directly.
  direct,
};

bool is_homomorphism(const Permutation& alpha, const FiniteSemigroup& s, const FiniteSemigroup& t);
bool is_anti_homomorphism(const Permutation& alpha, const FiniteSemigroup& s, const FiniteSemigroup& t);

/// Every isomorphism S -> T, sorted lexicographically by image array.
std::vector<Permutation> enumerate_isomorphisms(const FiniteSemigroup& s, const FiniteSemigroup& t,
                                                const SearchOptions& options = {});

std::optional<Permutation> find_isomorphism(const FiniteSemigroup& s, const FiniteSemigroup& t,
                                            const SearchOptions& options = {});
std::optional<Permutation> find_anti_isomorphism(const FiniteSemigroup& s, const FiniteSemigroup& t,
                                                 const SearchOptions& options = {});

MorphismSet enumerate_automorphisms(const FiniteSemigroup& s, const SearchOptions& options = {});
MorphismSet enumerate_anti_automorphisms(const FiniteSemigroup& s, const SearchOptions& options = {},
                                         AntiStrategy strategy = AntiStrategy::compose);

/// I(S): anti-automorphisms of order exactly two.
MorphismSet involutions(const FiniteSemigroup& s, const SearchOptions& options = {});
/// J(S): automorphisms whose square is the identity, identity included.
MorphismSet order_two_automorphisms(const FiniteSemigroup& s, const SearchOptions& options = {});

/// Filters already-computed sets instead of searching again.
MorphismSet involutions_from(const MorphismSet& anti_automorphisms);
MorphismSet order_two_from(const MorphismSet& automorphisms);

/// True iff alpha (which must be an involution of S) is not a homomorphism.
/// Throws NotAnInvolution otherwise.
bool is_proper_involution(const Permutation& alpha, const FiniteSemigroup& s);

}  // namespace invol
