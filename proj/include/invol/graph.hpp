#pragma once

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "invol/morphism.hpp"
#include "invol/permgroup.hpp"
#include "invol/semigroup.hpp"

namespace invol {

/// Undirected graph without loops or parallel edges on vertices 0..n-1.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  /// Throws InputError on loops, duplicate edges or out-of-range endpoints.
  SimpleGraph(std::size_t vertex_count, const std::vector<std::pair<Element, Element>>& edges);

  static SimpleGraph complete(std::size_t n);
  static SimpleGraph path(std::size_t n);
  static SimpleGraph cycle(std::size_t n);
  static SimpleGraph empty(std::size_t n);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  /// Edges as (u, v) with u < v, sorted.
  const std::set<std::pair<Element, Element>>& edges() const { return edges_; }
  bool adjacent(Element u, Element v) const { return adjacency_[static_cast<std::size_t>(u) * n_ + v]; }
  std::size_t degree(Element v) const;
  bool is_complete() const { return edges_.size() == n_ * (n_ - 1) / 2; }

  /// True iff pi preserves adjacency in both directions.
  bool is_automorphism(const Permutation& pi) const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  std::size_t n_ = 0;
  std::set<std::pair<Element, Element>> edges_;
  std::vector<bool> adjacency_;
};

/// Aut(Γ) by backtracking over degree-compatible assignments. Intended for
/// graphs with at most 12 vertices; larger inputs are bounded by the budget.
MorphismSet graph_automorphisms(const SimpleGraph& g, const SearchOptions& options = {});

/// C(Γ): the subgroup of Aut(Γ) generated by its elements of order two.
PermGroup graph_involution_group(const SimpleGraph& g, const SearchOptions& search = {},
                                 const ClosureOptions& options = {});

/// Commutative 3-nilpotent semigroup X ∪ {Y, N}: uv = Y when u, v are
/// adjacent vertices and N otherwise. Vertices keep their indices, Y = n and
/// N = n + 1. Throws NoEdges on an edgeless graph.
FiniteSemigroup frucht_semigroup(const SimpleGraph& g);

}  // namespace invol
