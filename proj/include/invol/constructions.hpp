#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "invol/permutation.hpp"
#include "invol/semigroup.hpp"

namespace invol::construct {

// Canonical element orders:
//   symmetric groups / transformations   image tuples, lexicographic
//   partial bijections                   domain bitmask, then image tuple
//   partitions                           restricted growth string, lexicographic
//   rectangular band X x Y               (x, y) -> x*|Y| + y
//   zero semigroup                       X first, the zero last
//   doubled semigroup                    [S | S* | 0]
//   direct product S x T                 (s, t) -> s*|T| + t

FiniteSemigroup cyclic_group(std::size_t n);

/// Exponent R(n) with 2^R(n) solutions of k^2 = 1 in Z_n. Requires n >= 2.
unsigned r_of_n(std::uint64_t n);

/// Z2 x Z2 with elements e, x, y, z.
FiniteSemigroup klein_four();

/// Sym(n) under (a o b)(x) = a(b(x)); n <= 6.
FiniteSemigroup sym_group_table(std::size_t n);
/// The permutation behind element `index` of sym_group_table(n).
std::vector<Permutation> sym_group_elements(std::size_t n);

/// T_n with (fg)(x) = f(g(x)); n <= 4.
FiniteSemigroup full_transformation_monoid(std::size_t n);

/// I_n, partial bijections with (fg)(x) = f(g(x)); n <= 4.
FiniteSemigroup symmetric_inverse_monoid(std::size_t n);

/// P_n on points {0..n-1} (top) and {n..2n-1} (bottom); n <= 3.
FiniteSemigroup partition_monoid(std::size_t n);
/// Vertical flip f -> f* on the elements of partition_monoid(n).
Permutation star_map(std::size_t n);

/// I*_n as the block bijections inside P_n (every block meets both rows).
FiniteSemigroup dual_symmetric_inverse_monoid(std::size_t n);

/// X x Y with (x1, y1)(x2, y2) = (x1, y2).
FiniteSemigroup rectangular_band(std::size_t p, std::size_t q);

/// Left-zero (xy = x) and right-zero (xy = y) semigroups.
FiniteSemigroup left_zero(std::size_t n);
FiniteSemigroup right_zero(std::size_t n);

/// X ∪ {0} with every product 0; |X| = k >= 1.
FiniteSemigroup zero_semigroup(std::size_t k);

/// D_S = S ∪ S* ∪ {0}: S and the dual copy S* multiply internally
/// (s* t* = (ts)*), every mixed product is 0.
FiniteSemigroup doubled_semigroup(const FiniteSemigroup& s);

FiniteSemigroup direct_product(const FiniteSemigroup& s, const FiniteSemigroup& t);

FiniteSemigroup dual_table(const FiniteSemigroup& s);

/// Maps on D_S induced by a pair of automorphisms of S:
///   gamma(s) = a(s), gamma(s*) = b(s)*;  delta(s) = b(s)*, delta(s*) = a(s); 0 fixed.
Permutation doubled_gamma(const Permutation& a, const Permutation& b);
Permutation doubled_delta(const Permutation& a, const Permutation& b);

/// Maps on the square band X x X for sigma, tau in Sym(X):
///   gamma(x, y) = (sigma(x), tau(y)),  delta(x, y) = (sigma(y), tau(x)).
Permutation band_gamma(const Permutation& sigma, const Permutation& tau);
Permutation band_delta(const Permutation& sigma, const Permutation& tau);

}  // namespace invol::construct
