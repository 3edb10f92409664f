#include "invol/graph.hpp"

#include <algorithm>

#include "invol/errors.hpp"

namespace invol {

SimpleGraph::SimpleGraph(std::size_t vertex_count, const std::vector<std::pair<Element, Element>>& edges)
    : n_(vertex_count), adjacency_(vertex_count * vertex_count, false) {
  for (auto [u, v] : edges) {
    if (u >= n_ || v >= n_) throw InputError("edge endpoint out of range");
    if (u == v) throw InputError("graphs may not have loops");
    if (u > v) std::swap(u, v);
    if (!edges_.emplace(u, v).second) throw InputError("duplicate edge");
    adjacency_[static_cast<std::size_t>(u) * n_ + v] = true;
    adjacency_[static_cast<std::size_t>(v) * n_ + u] = true;
  }
}

SimpleGraph SimpleGraph::complete(std::size_t n) {
  std::vector<std::pair<Element, Element>> e;
  for (Element u = 0; u < n; ++u)
    for (Element v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return SimpleGraph(n, e);
}

SimpleGraph SimpleGraph::path(std::size_t n) {
  std::vector<std::pair<Element, Element>> e;
  for (Element u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return SimpleGraph(n, e);
}

SimpleGraph SimpleGraph::cycle(std::size_t n) {
  std::vector<std::pair<Element, Element>> e;
  for (Element u = 0; u < n; ++u) e.emplace_back(u, static_cast<Element>((u + 1) % n));
  return SimpleGraph(n, e);
}

SimpleGraph SimpleGraph::empty(std::size_t n) { return SimpleGraph(n, {}); }

std::size_t SimpleGraph::degree(Element v) const {
  std::size_t d = 0;
  for (Element u = 0; u < n_; ++u) d += adjacent(u, v);
  return d;
}

bool SimpleGraph::is_automorphism(const Permutation& pi) const {
  if (pi.degree() != n_) return false;
  for (Element u = 0; u < n_; ++u) {
    for (Element v = 0; v < n_; ++v) {
      if (adjacent(u, v) != adjacent(pi(u), pi(v))) return false;
    }
  }
  return true;
}

namespace {

struct GraphSearch {
  const SimpleGraph& g;
  std::uint64_t budget;
  std::uint64_t used = 0;
  std::vector<std::vector<std::size_t>> keys;
  std::vector<Element> image;
  std::vector<bool> used_target;
  std::vector<Permutation> found;

  void run(Element v) {
    const std::size_t n = g.vertex_count();
    if (v == n) {
      found.push_back(Permutation(image));
      return;
    }
    for (Element c = 0; c < n; ++c) {
      if (used_target[c] || keys[c] != keys[v]) continue;
      if (++used > budget) throw SearchBudgetExceeded(budget);
      bool ok = true;
      for (Element u = 0; u < v && ok; ++u) ok = g.adjacent(u, v) == g.adjacent(image[u], c);
      if (!ok) continue;
      image[v] = c;
      used_target[c] = true;
      run(v + 1);
      used_target[c] = false;
    }
  }
};

}  // namespace

MorphismSet graph_automorphisms(const SimpleGraph& g, const SearchOptions& options) {
  const std::size_t n = g.vertex_count();
  GraphSearch search{g, options.node_budget, 0, std::vector<std::vector<std::size_t>>(n), std::vector<Element>(n),
                     std::vector<bool>(n, false), {}};
  // Key: degree followed by the sorted degrees of the neighbours.
  for (Element v = 0; v < n; ++v) {
    auto& key = search.keys[v];
    key.push_back(g.degree(v));
    std::vector<std::size_t> nbr;
    for (Element u = 0; u < n; ++u) {
      if (g.adjacent(u, v)) nbr.push_back(g.degree(u));
    }
    std::sort(nbr.begin(), nbr.end());
    key.insert(key.end(), nbr.begin(), nbr.end());
  }
  search.run(0);
  std::sort(search.found.begin(), search.found.end());
  return {MorphismKind::automorphisms, n, std::move(search.found)};
}

PermGroup graph_involution_group(const SimpleGraph& g, const SearchOptions& search, const ClosureOptions& options) {
  std::vector<Permutation> gens;
  for (const auto& a : graph_automorphisms(g, search).elements) {
    if (!a.is_identity() && compose(a, a).is_identity()) gens.push_back(a);
  }
  return closure(g.vertex_count(), std::move(gens), options);
}

FiniteSemigroup frucht_semigroup(const SimpleGraph& g) {
  if (g.edge_count() == 0) throw NoEdges();
  const std::size_t n = g.vertex_count();
  const Element yes = static_cast<Element>(n), no = static_cast<Element>(n + 1);
  const std::size_t m = n + 2;
  std::vector<Element> flat(m * m, no);
  for (Element u = 0; u < n; ++u) {
    for (Element v = 0; v < n; ++v) {
      if (g.adjacent(u, v)) flat[u * m + v] = yes;
    }
  }
  std::vector<std::string> names;
  for (Element v = 0; v < n; ++v) names.push_back("x" + std::to_string(v));
  names.push_back("Y");
  names.push_back("N");
  return FiniteSemigroup::from_flat(m, std::move(flat), std::move(names));
}

}  // namespace invol
