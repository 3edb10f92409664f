#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace invol {

using Element = std::uint32_t;

/// A bijection on {0, ..., degree-1}.
///
/// Composition follows the usual right-to-left convention everywhere in the
/// library: compose(a, b)(x) == a(b(x)).
class Permutation {
 public:
  Permutation() = default;

  /// Throws InputError unless `images` is a bijection on its index range.
  explicit Permutation(std::vector<Element> images);

  static Permutation identity(std::size_t degree);

  /// Skips the bijection check; callers guarantee `images` is a bijection.
  static Permutation unchecked(std::vector<Element> images);

  /// Builds a permutation from disjoint cycles, e.g. {{0, 1, 2}, {3, 4}}.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Element>>& cycles);

  /// Parses cycle notation such as "(0 1 2)(3 4)" or "()". The degree is
  /// max(min_degree, largest point + 1).
  static Permutation parse_cycles(std::string_view text, std::size_t min_degree = 0);

  std::size_t degree() const { return images_.size(); }
  Element operator()(Element x) const { return images_[x]; }
  Element operator[](Element x) const { return images_[x]; }
  std::span<const Element> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  std::uint64_t order() const;
  /// +1 for even permutations, -1 for odd ones.
  int sign() const;

  /// Non-trivial cycles, each starting at its smallest point, sorted by that point.
  std::vector<std::vector<Element>> cycles() const;
  std::string to_cycle_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Element> images_;
};

/// (a ∘ b)(x) = a(b(x)). Degrees must agree.
Permutation compose(const Permutation& a, const Permutation& b);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace invol
