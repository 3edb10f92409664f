#include "invol/permgroup.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "invol/errors.hpp"

namespace invol {

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

PermGroup closure(std::size_t degree, std::vector<Permutation> generators, const ClosureOptions& options) {
  for (const auto& g : generators) {
    if (g.degree() != degree) throw DegreeMismatch("generator degree differs from group degree");
  }
  PermGroup group;
  group.degree_ = degree;

  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> members{Permutation::identity(degree)};
  seen.insert(members.front());
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (const auto& g : generators) {
      Permutation next = compose(g, members[head]);
      if (seen.insert(next).second) {
        if (members.size() >= options.order_budget) throw OrderBudgetExceeded(options.order_budget);
        members.push_back(std::move(next));
      }
    }
  }
  std::sort(members.begin(), members.end());
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  group.generators_ = std::move(generators);
  group.elements_ = std::move(members);
  return group;
}

PermGroup c_group(const FiniteSemigroup& s, const GroupOptions& options) {
  return closure(s.size(), involutions(s, options.search).elements, options.closure);
}

PermGroup g_group(const FiniteSemigroup& s, const GroupOptions& options) {
  return closure(s.size(), order_two_automorphisms(s, options.search).elements, options.closure);
}

PermGroup signed_aut_group(const FiniteSemigroup& s, const GroupOptions& options) {
  auto gens = enumerate_automorphisms(s, options.search).elements;
  for (auto& a : enumerate_anti_automorphisms(s, options.search).elements) gens.push_back(std::move(a));
  return closure(s.size(), std::move(gens), options.closure);
}

namespace {

Permutation commutator(const Permutation& g, const Permutation& h) {
  return compose(compose(g, h), compose(g.inverse(), h.inverse()));
}

}  // namespace

PermGroup derived_subgroup(const PermGroup& g, const ClosureOptions& options) {
  // [G,G] is the normal closure of the commutators of a generating set.
  std::vector<Permutation> gens;
  for (const auto& a : g.generators()) {
    for (const auto& b : g.generators()) {
      auto c = commutator(a, b);
      if (!c.is_identity()) gens.push_back(std::move(c));
    }
  }
  PermGroup n = closure(g.degree(), gens, options);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < gens.size() && !changed; ++i) {
      for (const auto& s : g.generators()) {
        auto conj = compose(compose(s, gens[i]), s.inverse());
        if (!n.contains(conj)) {
          gens.push_back(std::move(conj));
          n = closure(g.degree(), gens, options);
          changed = true;
          break;
        }
      }
    }
  }
  return n;
}

GroupFingerprint fingerprint(const PermGroup& g, const ClosureOptions& options) {
  GroupFingerprint f;
  f.order = g.order();
  f.abelian = true;
  for (const auto& a : g.generators()) {
    for (const auto& b : g.generators()) {
      if (compose(a, b) != compose(b, a)) f.abelian = false;
    }
  }
  for (const auto& e : g.elements()) {
    const std::uint64_t k = e.order();
    ++f.element_orders[k];
    f.exponent = std::lcm(f.exponent, k);
    bool central = true;
    for (const auto& s : g.generators()) {
      if (compose(e, s) != compose(s, e)) {
        central = false;
        break;
      }
    }
    if (central) ++f.center_order;
  }
  f.derived_order = derived_subgroup(g, options).order();
  return f;
}

std::vector<Element> group_inverses(const FiniteSemigroup& group_table) {
  const auto id = group_table.identity();
  if (!id) throw NotAGroup("table has no identity element");
  const std::size_t n = group_table.size();
  std::vector<Element> inv(n, static_cast<Element>(-1));
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (group_table.product(a, b) == *id && group_table.product(b, a) == *id) {
        inv[a] = b;
        break;
      }
    }
    if (inv[a] == static_cast<Element>(-1)) throw NotAGroup("element " + std::to_string(a) + " has no inverse");
  }
  return inv;
}

namespace {

std::vector<Element> table_derived_subgroup(const FiniteSemigroup& g, const std::vector<Element>& inv) {
  std::vector<Element> commutators;
  std::vector<bool> seen(g.size(), false);
  for (Element a = 0; a < g.size(); ++a) {
    for (Element b = 0; b < g.size(); ++b) {
      Element c = g.product(g.product(a, b), g.product(inv[a], inv[b]));
      if (!seen[c]) {
        seen[c] = true;
        commutators.push_back(c);
      }
    }
  }
  // In a finite group the generated subsemigroup is the generated subgroup.
  return subsemigroup_closure(g, commutators);
}

}  // namespace

GroupFingerprint group_table_fingerprint(const FiniteSemigroup& g) {
  const auto inv = group_inverses(g);
  const Element e = *g.identity();
  GroupFingerprint f;
  f.order = g.size();
  f.abelian = is_commutative(g);
  for (Element a = 0; a < g.size(); ++a) {
    std::uint64_t k = 1;
    for (Element p = a; p != e; p = g.product(p, a)) ++k;
    ++f.element_orders[k];
    f.exponent = std::lcm(f.exponent, k);
    bool central = true;
    for (Element b = 0; b < g.size() && central; ++b) central = g.product(a, b) == g.product(b, a);
    if (central) ++f.center_order;
  }
  f.derived_order = table_derived_subgroup(g, inv).size();
  return f;
}

FiniteSemigroup to_cayley_table(const PermGroup& g, std::size_t max_order) {
  if (g.order() > max_order) throw OrderBudgetExceeded(max_order);
  const auto& elems = g.elements();
  const std::size_t m = elems.size();
  std::vector<Element> flat(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      auto it = std::lower_bound(elems.begin(), elems.end(), compose(elems[i], elems[j]));
      flat[i * m + j] = static_cast<Element>(it - elems.begin());
    }
  }
  return FiniteSemigroup::from_flat(m, std::move(flat), {}, FiniteSemigroup::Check::range_only);
}

bool is_isomorphic_to(const PermGroup& g, const FiniteSemigroup& expected_group_table, const SearchOptions& options) {
  if (g.order() != expected_group_table.size()) return false;
  if (fingerprint(g) != group_table_fingerprint(expected_group_table)) return false;
  return find_isomorphism(to_cayley_table(g), expected_group_table, options).has_value();
}

KGroup k_group(const FiniteSemigroup& g) {
  const auto inv = group_inverses(g);
  const std::size_t n = g.size();
  KGroup k;

  std::vector<std::pair<Element, Element>> gens;
  for (Element a = 0; a < n; ++a) gens.emplace_back(a, inv[a]);
  std::vector<bool> seen(n * n, false);
  const Element e = *g.identity();
  std::vector<std::pair<Element, Element>> members{{e, e}};
  seen[static_cast<std::size_t>(e) * n + e] = true;
  for (std::size_t head = 0; head < members.size(); ++head) {
    const auto [x, y] = members[head];
    for (const auto& [a, b] : gens) {
      const Element px = g.product(x, a), py = g.product(y, b);
      if (!seen[static_cast<std::size_t>(px) * n + py]) {
        seen[static_cast<std::size_t>(px) * n + py] = true;
        members.emplace_back(px, py);
      }
    }
  }
  std::sort(members.begin(), members.end());
  k.elements = std::move(members);

  const auto derived = table_derived_subgroup(g, inv);
  k.derived_order = derived.size();
  std::vector<bool> in_derived(n, false);
  for (Element d : derived) in_derived[d] = true;
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (in_derived[g.product(a, b)]) k.characterization.emplace_back(a, b);
    }
  }
  return k;
}

std::pair<Permutation, Permutation> two_involution_factorization(const Permutation& pi) {
  const std::size_t degree = pi.degree();
  std::vector<std::vector<Element>> sigma_cycles, tau_cycles;
  for (const auto& cycle : pi.cycles()) {
    // cycle = (x_1, ..., x_m) with x_i -> x_{i+1}; x(i) reads it 1-based.
    auto x = [&](std::size_t i) { return cycle[i - 1]; };
    const std::size_t m = cycle.size();
    if (m % 2 == 1) {
      const std::size_t k = m / 2;
      for (std::size_t i = 1; i <= k; ++i) {
        sigma_cycles.push_back({x(1 + i), x(2 * k + 2 - i)});
        tau_cycles.push_back({x(i), x(2 * k + 2 - i)});
      }
    } else {
      const std::size_t k = m / 2;
      for (std::size_t i = 1; i + 1 <= k; ++i) sigma_cycles.push_back({x(1 + i), x(2 * k + 1 - i)});
      for (std::size_t i = 1; i <= k; ++i) tau_cycles.push_back({x(i), x(2 * k + 1 - i)});
    }
  }
  // With (a o b)(x) = a(b(x)) these per-cycle formulas give pi = sigma o tau.
  return {Permutation::from_cycles(degree, sigma_cycles), Permutation::from_cycles(degree, tau_cycles)};
}

}  // namespace invol
