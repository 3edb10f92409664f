#include "invol/semigroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "invol/errors.hpp"

namespace invol {

IndexOutOfRange::IndexOutOfRange(std::size_t row, std::size_t col, std::int64_t value)
    : InputError("table entry [" + std::to_string(row) + "][" + std::to_string(col) +
                 "] = " + std::to_string(value) + " is out of range"),
      row(row),
      col(col),
      value(value) {}

NotAssociative::NotAssociative(std::size_t i, std::size_t j, std::size_t k)
    : InputError("table is not associative: (" + std::to_string(i) + "*" + std::to_string(j) + ")*" +
                 std::to_string(k) + " != " + std::to_string(i) + "*(" + std::to_string(j) + "*" +
                 std::to_string(k) + ")"),
      i(i),
      j(j),
      k(k) {}

FiniteSemigroup FiniteSemigroup::validate(const std::vector<std::vector<std::int64_t>>& table,
                                          std::vector<std::string> names) {
  const std::size_t n = table.size();
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw InputError("table is not square");
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t v = table[i][j];
      if (v < 0 || static_cast<std::uint64_t>(v) >= n) throw IndexOutOfRange(i, j, v);
      flat.push_back(static_cast<Element>(v));
    }
  }
  return from_flat(n, std::move(flat), std::move(names), Check::full);
}

FiniteSemigroup FiniteSemigroup::from_flat(std::size_t n, std::vector<Element> flat,
                                           std::vector<std::string> names, Check check) {
  if (n == 0) throw InputError("a semigroup needs at least one element");
  if (n > kMaxSemigroupSize) throw InputError("table exceeds the supported size " + std::to_string(kMaxSemigroupSize));
  if (flat.size() != n * n) throw InputError("table is not square");
  if (!names.empty() && names.size() != n) throw InputError("names must have one entry per element");
  for (std::size_t idx = 0; idx < flat.size(); ++idx) {
    if (flat[idx] >= n) throw IndexOutOfRange(idx / n, idx % n, flat[idx]);
  }
  FiniteSemigroup s;
  s.n_ = n;
  s.table_ = std::move(flat);
  s.names_ = std::move(names);
  if (check == Check::full) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Element ij = s.table_[i * n + j];
        const Element* row_ij = &s.table_[static_cast<std::size_t>(ij) * n];
        const Element* row_i = &s.table_[i * n];
        const Element* row_j = &s.table_[j * n];
        for (std::size_t k = 0; k < n; ++k) {
          if (row_ij[k] != row_i[row_j[k]]) throw NotAssociative(i, j, k);
        }
      }
    }
  }
  s.detect_identity();
  return s;
}

void FiniteSemigroup::detect_identity() {
  for (Element e = 0; e < n_; ++e) {
    bool ok = true;
    for (Element x = 0; x < n_ && ok; ++x) ok = product(e, x) == x && product(x, e) == x;
    if (ok) {
      identity_ = e;
      return;
    }
  }
}

std::string FiniteSemigroup::name(Element a) const {
  return names_.empty() ? std::to_string(a) : names_[a];
}

std::vector<std::vector<Element>> FiniteSemigroup::rows() const {
  std::vector<std::vector<Element>> out(n_);
  for (Element a = 0; a < n_; ++a) out[a].assign(row(a).begin(), row(a).end());
  return out;
}

FiniteSemigroup FiniteSemigroup::dual() const {
  FiniteSemigroup d;
  d.n_ = n_;
  d.table_.resize(table_.size());
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) d.table_[i * n_ + j] = table_[j * n_ + i];
  }
  d.names_ = names_;
  d.identity_ = identity_;
  return d;
}

ElementFingerprint ElementFingerprint::swapped() const {
  ElementFingerprint f = *this;
  std::swap(f.r_class_size, f.l_class_size);
  std::swap(f.left_mult_rank, f.right_mult_rank);
  return f;
}

bool is_commutative(const FiniteSemigroup& s) {
  for (Element a = 0; a < s.size(); ++a) {
    for (Element b = a + 1; b < s.size(); ++b) {
      if (s.product(a, b) != s.product(b, a)) return false;
    }
  }
  return true;
}

std::vector<Element> atoms(const FiniteSemigroup& s) {
  const auto id = s.identity();
  std::vector<bool> factorizable(s.size(), false);
  for (Element b = 0; b < s.size(); ++b) {
    if (id && b == *id) continue;
    for (Element c = 0; c < s.size(); ++c) {
      if (id && c == *id) continue;
      factorizable[s.product(b, c)] = true;
    }
  }
  // In a monoid the identity factors as 1*1 and is not treated as an atom.
  if (id) factorizable[*id] = true;
  std::vector<Element> out;
  for (Element a = 0; a < s.size(); ++a) {
    if (!factorizable[a]) out.push_back(a);
  }
  return out;
}

namespace {

using Bits = std::vector<std::uint64_t>;

struct BitMatrix {
  std::size_t words;
  std::vector<std::uint64_t> data;
  BitMatrix(std::size_t rows, std::size_t cols) : words((cols + 63) / 64), data(rows * words, 0) {}
  std::uint64_t* row(std::size_t r) { return data.data() + r * words; }
  const std::uint64_t* row(std::size_t r) const { return data.data() + r * words; }
  void set(std::size_t r, std::size_t c) { row(r)[c / 64] |= std::uint64_t{1} << (c % 64); }
};

// Groups elements by identical bit rows; class ids follow first occurrence.
std::vector<std::uint32_t> classes_by_row(const BitMatrix& m, std::size_t n) {
  std::map<Bits, std::uint32_t> ids;
  std::vector<std::uint32_t> out(n);
  for (std::size_t a = 0; a < n; ++a) {
    Bits key(m.row(a), m.row(a) + m.words);
    auto [it, inserted] = ids.emplace(std::move(key), static_cast<std::uint32_t>(ids.size()));
    out[a] = it->second;
  }
  return out;
}

std::vector<std::vector<Element>> to_partition(const std::vector<std::uint32_t>& class_of) {
  std::uint32_t count = 0;
  for (auto c : class_of) count = std::max(count, c + 1);
  std::vector<std::vector<Element>> parts(count);
  for (Element a = 0; a < class_of.size(); ++a) parts[class_of[a]].push_back(a);
  std::sort(parts.begin(), parts.end());
  return parts;
}

// Renumbers ids so class order matches the sorted partition.
std::vector<std::uint32_t> normalize_ids(const std::vector<std::uint32_t>& ids) {
  std::map<std::uint32_t, std::uint32_t> remap;
  std::vector<std::uint32_t> out(ids.size());
  for (std::size_t a = 0; a < ids.size(); ++a) {
    auto [it, inserted] = remap.emplace(ids[a], static_cast<std::uint32_t>(remap.size()));
    out[a] = it->second;
  }
  return out;
}

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

GreenStructure green_relations(const FiniteSemigroup& s) {
  const std::size_t n = s.size();
  // Principal ideals taken in S^1: the adjoined identity is implicit.
  BitMatrix right(n, n), left(n, n), two_sided(n, n);
  for (Element a = 0; a < n; ++a) {
    right.set(a, a);
    left.set(a, a);
    for (Element x = 0; x < n; ++x) {
      right.set(a, s.product(a, x));
      left.set(a, s.product(x, a));
    }
  }
  for (Element a = 0; a < n; ++a) {
    std::uint64_t* out = two_sided.row(a);
    const std::uint64_t* l = left.row(a);
    for (Element u = 0; u < n; ++u) {
      if (!(l[u / 64] >> (u % 64) & 1)) continue;
      const std::uint64_t* r = right.row(u);
      for (std::size_t w = 0; w < two_sided.words; ++w) out[w] |= r[w];
    }
  }

  GreenStructure g;
  g.r_of = normalize_ids(classes_by_row(right, n));
  g.l_of = normalize_ids(classes_by_row(left, n));
  g.j_of = normalize_ids(classes_by_row(two_sided, n));

  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> h_ids;
  std::vector<std::uint32_t> h(n);
  UnionFind uf(n);
  std::vector<std::int64_t> r_rep(n, -1), l_rep(n, -1);
  for (Element a = 0; a < n; ++a) {
    auto [it, inserted] = h_ids.emplace(std::make_pair(g.r_of[a], g.l_of[a]), static_cast<std::uint32_t>(h_ids.size()));
    h[a] = it->second;
    if (r_rep[g.r_of[a]] < 0) r_rep[g.r_of[a]] = a; else uf.unite(a, static_cast<std::uint32_t>(r_rep[g.r_of[a]]));
    if (l_rep[g.l_of[a]] < 0) l_rep[g.l_of[a]] = a; else uf.unite(a, static_cast<std::uint32_t>(l_rep[g.l_of[a]]));
  }
  std::vector<std::uint32_t> d(n);
  for (Element a = 0; a < n; ++a) d[a] = uf.find(a);
  g.h_of = normalize_ids(h);
  g.d_of = normalize_ids(d);

  g.r_classes = to_partition(g.r_of);
  g.l_classes = to_partition(g.l_of);
  g.h_classes = to_partition(g.h_of);
  g.d_classes = to_partition(g.d_of);
  g.j_classes = to_partition(g.j_of);
  return g;
}

std::vector<Element> subsemigroup_closure(const FiniteSemigroup& s, std::span<const Element> generators) {
  std::vector<bool> in(s.size(), false);
  std::vector<Element> members;
  for (Element g : generators) {
    if (!in[g]) {
      in[g] = true;
      members.push_back(g);
    }
  }
  // Every product g1...gk is reached by right-multiplying by generators.
  for (std::size_t head = 0; head < members.size(); ++head) {
    const Element x = members[head];
    for (Element g : generators) {
      const Element y = s.product(x, g);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<Element> generating_set(const FiniteSemigroup& s) {
  std::vector<Element> gens;
  std::vector<bool> covered(s.size(), false);
  std::size_t covered_count = 0;
  while (covered_count < s.size()) {
    Element best = 0;
    std::size_t best_size = 0;
    std::vector<Element> best_closure;
    std::vector<Element> trial = gens;
    trial.push_back(0);
    for (Element c = 0; c < s.size(); ++c) {
      if (covered[c]) continue;
      trial.back() = c;
      auto closure = subsemigroup_closure(s, trial);
      if (closure.size() > best_size) {
        best = c;
        best_size = closure.size();
        best_closure = std::move(closure);
        if (best_size == s.size()) break;
      }
    }
    gens.push_back(best);
    for (Element x : best_closure) {
      if (!covered[x]) {
        covered[x] = true;
        ++covered_count;
      }
    }
  }
  return gens;
}

std::pair<std::uint32_t, std::uint32_t> index_and_period(const FiniteSemigroup& s, Element x) {
  // first_seen[y] = exponent k with x^k = y, or 0 if not yet produced.
  std::vector<std::uint32_t> first_seen(s.size(), 0);
  Element power = x;
  for (std::uint32_t k = 1; k <= s.size() + 1; ++k) {
    if (first_seen[power] != 0) return {first_seen[power], k - first_seen[power]};
    first_seen[power] = k;
    power = s.product(power, x);
  }
  throw Error("index/period search did not terminate");  // unreachable by pigeonhole
}

std::vector<ElementFingerprint> fingerprints(const FiniteSemigroup& s) {
  const auto green = green_relations(s);
  std::vector<ElementFingerprint> out(s.size());
  std::vector<bool> seen(s.size());
  for (Element x = 0; x < s.size(); ++x) {
    auto& f = out[x];
    f.is_idempotent = s.product(x, x) == x;
    std::tie(f.index, f.period) = index_and_period(s, x);
    f.r_class_size = static_cast<std::uint32_t>(green.r_classes[green.r_of[x]].size());
    f.l_class_size = static_cast<std::uint32_t>(green.l_classes[green.l_of[x]].size());
    f.d_class_size = static_cast<std::uint32_t>(green.d_classes[green.d_of[x]].size());

    std::fill(seen.begin(), seen.end(), false);
    std::uint32_t rank = 0;
    for (Element y = 0; y < s.size(); ++y) {
      Element p = s.product(y, x);
      if (!seen[p]) {
        seen[p] = true;
        ++rank;
      }
    }
    f.left_mult_rank = rank;
    std::fill(seen.begin(), seen.end(), false);
    rank = 0;
    for (Element y = 0; y < s.size(); ++y) {
      Element p = s.product(x, y);
      if (!seen[p]) {
        seen[p] = true;
        ++rank;
      }
    }
    f.right_mult_rank = rank;
  }
  return out;
}

}  // namespace invol
