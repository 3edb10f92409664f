#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "invol/permutation.hpp"

namespace invol {

/// Largest table the library accepts.
inline constexpr std::size_t kMaxSemigroupSize = 1024;

/// A finite semigroup on the dense index set {0, ..., n-1} given by its
/// Cayley table. Instances are immutable and always satisfy associativity.
class FiniteSemigroup {
 public:
  enum class Check { full, range_only };

  /// Validates shape, range and associativity; detects a two-sided identity.
  /// Throws IndexOutOfRange, NotAssociative or InputError.
  static FiniteSemigroup validate(const std::vector<std::vector<std::int64_t>>& table,
                                  std::vector<std::string> names = {});

  /// Row-major flat table of size n*n. `Check::range_only` skips the O(n^3)
  /// associativity pass and is reserved for tables associative by construction
  /// (composition tables of permutations and the like).
  static FiniteSemigroup from_flat(std::size_t n, std::vector<Element> flat,
                                   std::vector<std::string> names = {},
                                   Check check = Check::full);

  std::size_t size() const { return n_; }
  Element product(Element a, Element b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  std::span<const Element> row(Element a) const { return {table_.data() + static_cast<std::size_t>(a) * n_, n_}; }
  std::span<const Element> flat() const { return table_; }

  std::optional<Element> identity() const { return identity_; }
  const std::vector<std::string>& names() const { return names_; }
  /// Display name of an element: its name if present, its index otherwise.
  std::string name(Element a) const;

  std::vector<std::vector<Element>> rows() const;

  /// The opposite semigroup: product(a, b) becomes product(b, a).
  FiniteSemigroup dual() const;

  friend bool operator==(const FiniteSemigroup& a, const FiniteSemigroup& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  FiniteSemigroup() = default;
  void detect_identity();

  std::size_t n_ = 0;
  std::vector<Element> table_;
  std::vector<std::string> names_;
  std::optional<Element> identity_;
};

/// The five Green's relations, each as a class id per element plus the
/// explicit partition (classes sorted by smallest member).
struct GreenStructure {
  std::vector<std::uint32_t> r_of, l_of, h_of, d_of, j_of;
  std::vector<std::vector<Element>> r_classes, l_classes, h_classes, d_classes, j_classes;
};

struct ElementFingerprint {
  bool is_idempotent = false;
  std::uint32_t index = 0;   // smallest i with x^(i+p) = x^i
  std::uint32_t period = 0;  // smallest such p
  std::uint32_t r_class_size = 0;
  std::uint32_t l_class_size = 0;
  std::uint32_t d_class_size = 0;
  std::uint32_t left_mult_rank = 0;   // |S x|
  std::uint32_t right_mult_rank = 0;  // |x S|

  /// The record an anti-isomorphic image must carry: R/L and left/right swapped.
  ElementFingerprint swapped() const;

  friend auto operator<=>(const ElementFingerprint&, const ElementFingerprint&) = default;
};

bool is_commutative(const FiniteSemigroup& s);

/// Elements with no factorization a = bc into non-identity elements. When S has
/// no identity every element counts as non-identity; an identity never qualifies.
std::vector<Element> atoms(const FiniteSemigroup& s);

GreenStructure green_relations(const FiniteSemigroup& s);

/// Subsemigroup generated by `generators`, as a sorted element list.
std::vector<Element> subsemigroup_closure(const FiniteSemigroup& s, std::span<const Element> generators);

/// Greedy generating set: repeatedly adds the element outside the current
/// closure whose addition grows the closure most (ties to the smaller index).
std::vector<Element> generating_set(const FiniteSemigroup& s);

std::vector<ElementFingerprint> fingerprints(const FiniteSemigroup& s);

/// (index, period) of the monogenic subsemigroup generated by x.
std::pair<std::uint32_t, std::uint32_t> index_and_period(const FiniteSemigroup& s, Element x);

}  // namespace invol
