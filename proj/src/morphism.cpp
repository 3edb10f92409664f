#include "invol/morphism.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <thread>

#include "invol/errors.hpp"

namespace invol {

std::string_view to_string(MorphismKind kind) {
  switch (kind) {
    case MorphismKind::automorphisms: return "automorphisms";
    case MorphismKind::anti_automorphisms: return "anti_automorphisms";
    case MorphismKind::involutions: return "involutions";
    case MorphismKind::order_two_automorphisms: return "order_two_automorphisms";
  }
  return "unknown";
}

bool MorphismSet::contains(const Permutation& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

namespace {

void check_degree(const Permutation& alpha, const FiniteSemigroup& s, const FiniteSemigroup& t) {
  if (alpha.degree() != s.size() || s.size() != t.size()) {
    throw DegreeMismatch("permutation degree must equal both semigroup sizes");
  }
}

constexpr Element kUnset = static_cast<Element>(-1);

// Joint colour refinement of S and T. Starts from the element fingerprints and
// repeatedly splits classes by the multiset of (colour(y), colour(xy),
// colour(yx)) over all y. Any isomorphism S -> T preserves the final colours.
struct JointColouring {
  std::vector<std::uint32_t> s, t;
  bool compatible = true;
};

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h * 0xff51afd7ed558ccdull;
}

bool same_histogram(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b, std::size_t classes) {
  std::vector<std::int64_t> count(classes, 0);
  for (auto c : a) ++count[c];
  for (auto c : b) --count[c];
  return std::all_of(count.begin(), count.end(), [](std::int64_t v) { return v == 0; });
}

JointColouring refine(const FiniteSemigroup& s, const FiniteSemigroup& t) {
  const std::size_t n = s.size();
  JointColouring out;
  {
    const auto fs = fingerprints(s);
    const auto ft = fingerprints(t);
    std::map<ElementFingerprint, std::uint32_t> ids;
    for (const auto& f : fs) ids.emplace(f, 0);
    for (const auto& f : ft) ids.emplace(f, 0);
    std::uint32_t next = 0;
    for (auto& [f, id] : ids) id = next++;
    out.s.resize(n);
    out.t.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
      out.s[x] = ids[fs[x]];
      out.t[x] = ids[ft[x]];
    }
    if (!same_histogram(out.s, out.t, ids.size())) {
      out.compatible = false;
      return out;
    }
  }

  std::size_t classes = 0;
  for (auto c : out.s) classes = std::max<std::size_t>(classes, c + 1);
  for (auto c : out.t) classes = std::max<std::size_t>(classes, c + 1);

  std::vector<std::uint64_t> triples(n);
  auto signature = [&](const FiniteSemigroup& g, const std::vector<std::uint32_t>& colour, Element x) {
    for (Element y = 0; y < n; ++y) {
      triples[y] = (std::uint64_t{colour[y]} << 42) | (std::uint64_t{colour[g.product(x, y)]} << 21) |
                   std::uint64_t{colour[g.product(y, x)]};
    }
    std::sort(triples.begin(), triples.end());
    std::uint64_t h = 0x12345678abcdefull;
    for (auto v : triples) h = mix(h, v);
    return std::make_pair(colour[x], h);
  };

  for (;;) {
    std::map<std::pair<std::uint32_t, std::uint64_t>, std::uint32_t> ids;
    std::vector<std::pair<std::uint32_t, std::uint64_t>> sig_s(n), sig_t(n);
    for (Element x = 0; x < n; ++x) {
      sig_s[x] = signature(s, out.s, x);
      ids.emplace(sig_s[x], 0);
    }
    for (Element x = 0; x < n; ++x) {
      sig_t[x] = signature(t, out.t, x);
      ids.emplace(sig_t[x], 0);
    }
    std::uint32_t next = 0;
    for (auto& [key, id] : ids) id = next++;
    std::vector<std::uint32_t> ns(n), nt(n);
    for (Element x = 0; x < n; ++x) {
      ns[x] = ids[sig_s[x]];
      nt[x] = ids[sig_t[x]];
    }
    out.s = std::move(ns);
    out.t = std::move(nt);
    if (!same_histogram(out.s, out.t, ids.size())) {
      out.compatible = false;
      return out;
    }
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return out;
}

class BudgetCounter {
 public:
  explicit BudgetCounter(std::uint64_t limit) : limit_(limit) {}
  // Charges `amount` steps; throws once the shared total passes the limit.
  void charge(std::uint64_t amount) {
    if (used_.fetch_add(amount, std::memory_order_relaxed) + amount > limit_) throw SearchBudgetExceeded(limit_);
  }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> used_{0};
};

class IsomorphismSearch {
 public:
  IsomorphismSearch(const FiniteSemigroup& s, const FiniteSemigroup& t, const SearchOptions& options, bool first_only)
      : s_(s), t_(t), options_(options), first_only_(first_only), budget_(options.node_budget) {}

  std::vector<Permutation> run() {
    const std::size_t n = s_.size();
    if (n != t_.size()) return {};
    colours_ = refine(s_, t_);
    if (!colours_.compatible) return {};

    auto gens = generating_set(s_);
    std::vector<std::vector<Element>> candidates;
    for (Element g : gens) {
      std::vector<Element> c;
      for (Element y = 0; y < n; ++y) {
        if (colours_.t[y] == colours_.s[g]) c.push_back(y);
      }
      candidates.push_back(std::move(c));
    }
    // Most-constrained generator first.
    std::vector<std::size_t> order(gens.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return candidates[a].size() < candidates[b].size(); });
    for (std::size_t i : order) {
      gens_.push_back(gens[i]);
      candidates_.push_back(std::move(candidates[i]));
    }

    const auto& top = candidates_.front();
    const unsigned jobs = std::max(1u, std::min<unsigned>(options_.jobs, static_cast<unsigned>(top.size())));
    if (jobs == 1) {
      Worker w(*this);
      for (std::size_t i = 0; i < top.size() && !w.halted(); ++i) w.branch(i, top[i]);
      merge(std::move(w.found));
    } else {
      std::atomic<std::size_t> next{0};
      std::exception_ptr failure;
      std::mutex failure_mutex;
      std::vector<std::thread> threads;
      for (unsigned j = 0; j < jobs; ++j) {
        threads.emplace_back([&] {
          Worker w(*this);
          try {
            for (std::size_t i = next++; i < top.size() && !stop_.load(); i = next++) {
              if (first_only_ && i > first_branch_.load()) break;
              w.branch(i, top[i]);
            }
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            stop_.store(true);
          }
          merge(std::move(w.found));
        });
      }
      for (auto& th : threads) th.join();
      if (failure) std::rethrow_exception(failure);
    }
    if (first_only_) {
      // Keep the hit from the earliest branch, which is what a single worker finds.
      std::vector<Permutation> out;
      for (auto& [b, p] : results_)
        if (b == first_branch_.load()) out.push_back(std::move(p));
      return out;
    }
    std::vector<Permutation> out;
    out.reserve(results_.size());
    for (auto& entry : results_) out.push_back(std::move(entry.second));
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  struct Worker {
    explicit Worker(IsomorphismSearch& search)
        : search(search), image(search.gens_.size()), phi(search.s_.size()), inv(search.s_.size()) {}

    void branch(std::size_t index, Element top_candidate) {
      current = index;
      image[0] = top_candidate;
      search.budget_.charge(1);
      if (consistent(0)) descend(1);
    }

    // Colour check on products among the generators assigned so far.
    bool consistent(std::size_t depth) const {
      const auto& s = search.s_;
      const auto& t = search.t_;
      const auto& cs = search.colours_.s;
      const auto& ct = search.colours_.t;
      for (std::size_t i = 0; i <= depth; ++i) {
        const Element gi = search.gens_[i], gd = search.gens_[depth];
        const Element ci = image[i], cd = image[depth];
        if (cs[s.product(gi, gd)] != ct[t.product(ci, cd)]) return false;
        if (cs[s.product(gd, gi)] != ct[t.product(cd, ci)]) return false;
      }
      return true;
    }

    void descend(std::size_t depth) {
      if (halted()) return;
      if (depth == search.gens_.size()) {
        saturate();
        return;
      }
      for (Element c : search.candidates_[depth]) {
        if (std::find(image.begin(), image.begin() + static_cast<std::ptrdiff_t>(depth), c) !=
            image.begin() + static_cast<std::ptrdiff_t>(depth)) {
          continue;
        }
        image[depth] = c;
        search.budget_.charge(1);
        if (consistent(depth)) descend(depth + 1);
      }
    }

    // Extends the generator assignment to the whole of S by product
    // saturation, rejecting on the first conflict.
    void saturate() {
      const auto& s = search.s_;
      const auto& t = search.t_;
      const auto& gens = search.gens_;
      const std::size_t n = s.size();
      std::fill(phi.begin(), phi.end(), kUnset);
      std::fill(inv.begin(), inv.end(), kUnset);
      queue.clear();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        phi[gens[i]] = image[i];
        inv[image[i]] = gens[i];
        queue.push_back(gens[i]);
      }
      std::uint64_t steps = 0;
      bool ok = true;
      for (std::size_t head = 0; head < queue.size() && ok; ++head) {
        const Element x = queue[head];
        for (std::size_t k = 0; k < gens.size(); ++k) {
          ++steps;
          const Element y = s.product(x, gens[k]);
          const Element img = t.product(phi[x], image[k]);
          if (phi[y] == kUnset) {
            if (inv[img] != kUnset || search.colours_.s[y] != search.colours_.t[img]) {
              ok = false;
              break;
            }
            phi[y] = img;
            inv[img] = y;
            queue.push_back(y);
          } else if (phi[y] != img) {
            ok = false;
            break;
          }
        }
      }
      search.budget_.charge(steps);
      if (!ok || queue.size() != n) return;
      Permutation candidate = Permutation::unchecked(phi);
      if (!is_homomorphism(candidate, s, t)) return;
      found.emplace_back(current, std::move(candidate));
      if (search.first_only_) {
        std::size_t best = search.first_branch_.load();
        while (current < best && !search.first_branch_.compare_exchange_weak(best, current)) {
        }
      }
    }

    bool halted() const {
      if (search.stop_.load(std::memory_order_relaxed)) return true;
      return search.first_only_ && search.first_branch_.load(std::memory_order_relaxed) <= current;
    }

    IsomorphismSearch& search;
    std::vector<Element> image;
    std::vector<Element> phi, inv, queue;
    std::size_t current = 0;
    std::vector<std::pair<std::size_t, Permutation>> found;
  };

  void merge(std::vector<std::pair<std::size_t, Permutation>> found) {
    std::lock_guard lock(results_mutex_);
    for (auto& p : found) results_.push_back(std::move(p));
  }

  const FiniteSemigroup& s_;
  const FiniteSemigroup& t_;
  SearchOptions options_;
  bool first_only_;
  BudgetCounter budget_;
  JointColouring colours_;
  std::vector<Element> gens_;
  std::vector<std::vector<Element>> candidates_;
  std::atomic<bool> stop_{false};
  std::atomic<std::size_t> first_branch_{std::numeric_limits<std::size_t>::max()};
  std::mutex results_mutex_;
  std::vector<std::pair<std::size_t, Permutation>> results_;
};

}  // namespace

bool is_homomorphism(const Permutation& alpha, const FiniteSemigroup& s, const FiniteSemigroup& t) {
  check_degree(alpha, s, t);
  const std::size_t n = s.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (alpha(s.product(x, y)) != t.product(alpha(x), alpha(y))) return false;
    }
  }
  return true;
}

bool is_anti_homomorphism(const Permutation& alpha, const FiniteSemigroup& s, const FiniteSemigroup& t) {
  check_degree(alpha, s, t);
  const std::size_t n = s.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (alpha(s.product(x, y)) != t.product(alpha(y), alpha(x))) return false;
    }
  }
  return true;
}

std::vector<Permutation> enumerate_isomorphisms(const FiniteSemigroup& s, const FiniteSemigroup& t,
                                                const SearchOptions& options) {
  return IsomorphismSearch(s, t, options, false).run();
}

std::optional<Permutation> find_isomorphism(const FiniteSemigroup& s, const FiniteSemigroup& t,
                                            const SearchOptions& options) {
  auto found = IsomorphismSearch(s, t, options, true).run();
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

std::optional<Permutation> find_anti_isomorphism(const FiniteSemigroup& s, const FiniteSemigroup& t,
                                                 const SearchOptions& options) {
  // An anti-isomorphism S -> T is exactly an isomorphism S -> T^op.
  return find_isomorphism(s, t.dual(), options);
}

MorphismSet enumerate_automorphisms(const FiniteSemigroup& s, const SearchOptions& options) {
  return {MorphismKind::automorphisms, s.size(), enumerate_isomorphisms(s, s, options)};
}

MorphismSet enumerate_anti_automorphisms(const FiniteSemigroup& s, const SearchOptions& options,
                                         AntiStrategy strategy) {
  MorphismSet out{MorphismKind::anti_automorphisms, s.size(), {}};
  const FiniteSemigroup op = s.dual();
  if (strategy == AntiStrategy::direct) {
    out.elements = enumerate_isomorphisms(s, op, options);
    return out;
  }
  auto beta = find_isomorphism(s, op, options);
  if (!beta) return out;
  // Aut^-(S) = { alpha o beta : alpha in Aut(S) } once one beta is known.
  for (const auto& alpha : enumerate_isomorphisms(s, s, options)) out.elements.push_back(compose(alpha, *beta));
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

MorphismSet involutions_from(const MorphismSet& anti_automorphisms) {
  MorphismSet out{MorphismKind::involutions, anti_automorphisms.domain_size, {}};
  for (const auto& a : anti_automorphisms.elements) {
    if (!a.is_identity() && compose(a, a).is_identity()) out.elements.push_back(a);
  }
  return out;
}

MorphismSet order_two_from(const MorphismSet& automorphisms) {
  MorphismSet out{MorphismKind::order_two_automorphisms, automorphisms.domain_size, {}};
  for (const auto& a : automorphisms.elements) {
    if (compose(a, a).is_identity()) out.elements.push_back(a);
  }
  return out;
}

MorphismSet involutions(const FiniteSemigroup& s, const SearchOptions& options) {
  return involutions_from(enumerate_anti_automorphisms(s, options));
}

MorphismSet order_two_automorphisms(const FiniteSemigroup& s, const SearchOptions& options) {
  return order_two_from(enumerate_automorphisms(s, options));
}

bool is_proper_involution(const Permutation& alpha, const FiniteSemigroup& s) {
  if (alpha.degree() != s.size() || alpha.is_identity() || !compose(alpha, alpha).is_identity() ||
      !is_anti_homomorphism(alpha, s, s)) {
    throw NotAnInvolution("permutation is not an involution of the semigroup");
  }
  return !is_homomorphism(alpha, s, s);
}

}  // namespace invol
