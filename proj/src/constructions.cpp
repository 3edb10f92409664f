#include "invol/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "invol/errors.hpp"

namespace invol::construct {

namespace {

using Flat = std::vector<Element>;

void require(bool ok, const char* message) {
  if (!ok) throw InputError(message);
}

std::string digits(const std::vector<int>& v) {
  std::string out;
  for (int x : v) out.push_back(x < 0 ? '-' : static_cast<char>('0' + x));
  return out;
}

}  // namespace

FiniteSemigroup cyclic_group(std::size_t n) {
  require(n >= 1 && n <= kMaxSemigroupSize, "cyclic group order out of range");
  Flat flat(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = static_cast<Element>((i + j) % n);
  return FiniteSemigroup::from_flat(n, std::move(flat));
}

unsigned r_of_n(std::uint64_t n) {
  require(n >= 2, "R(n) needs n >= 2");
  unsigned m = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++m;
  }
  unsigned r = 0;
  for (std::uint64_t p = 3; p * p <= n; p += 2) {
    if (n % p == 0) {
      ++r;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ++r;
  if (m <= 1) return r;
  if (m == 2) return r + 1;
  return r + 2;
}

FiniteSemigroup klein_four() {
  Flat flat(16);
  for (Element i = 0; i < 4; ++i)
    for (Element j = 0; j < 4; ++j) flat[i * 4 + j] = i ^ j;
  return FiniteSemigroup::from_flat(4, std::move(flat), {"e", "x", "y", "z"});
}

std::vector<Permutation> sym_group_elements(std::size_t n) {
  require(n >= 1 && n <= 6, "symmetric group tables are limited to n <= 6");
  std::vector<Element> images(n);
  std::iota(images.begin(), images.end(), Element{0});
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::unchecked(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

FiniteSemigroup sym_group_table(std::size_t n) {
  const auto elems = sym_group_elements(n);
  const std::size_t m = elems.size();
  Flat flat(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      auto it = std::lower_bound(elems.begin(), elems.end(), compose(elems[i], elems[j]));
      flat[i * m + j] = static_cast<Element>(it - elems.begin());
    }
  }
  std::vector<std::string> names;
  for (const auto& p : elems) names.push_back(p.to_cycle_string());
  return FiniteSemigroup::from_flat(m, std::move(flat), std::move(names), FiniteSemigroup::Check::range_only);
}

FiniteSemigroup full_transformation_monoid(std::size_t n) {
  require(n >= 1 && n <= 4, "full transformation monoids are limited to n <= 4");
  std::size_t m = 1;
  for (std::size_t i = 0; i < n; ++i) m *= n;
  // Element index = image tuple read as a base-n numeral, most significant first.
  auto decode = [&](std::size_t idx) {
    std::vector<int> f(n);
    for (std::size_t i = n; i-- > 0;) {
      f[i] = static_cast<int>(idx % n);
      idx /= n;
    }
    return f;
  };
  auto encode = [&](const std::vector<int>& f) {
    std::size_t idx = 0;
    for (int x : f) idx = idx * n + static_cast<std::size_t>(x);
    return static_cast<Element>(idx);
  };
  std::vector<std::vector<int>> maps(m);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) {
    maps[i] = decode(i);
    names.push_back(digits(maps[i]));
  }
  Flat flat(m * m);
  std::vector<int> h(n);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t x = 0; x < n; ++x) h[x] = maps[a][static_cast<std::size_t>(maps[b][x])];
      flat[a * m + b] = encode(h);
    }
  }
  return FiniteSemigroup::from_flat(m, std::move(flat), std::move(names));
}

FiniteSemigroup symmetric_inverse_monoid(std::size_t n) {
  require(n >= 1 && n <= 4, "symmetric inverse monoids are limited to n <= 4");
  std::vector<std::vector<int>> maps;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> domain;
    for (unsigned x = 0; x < n; ++x)
      if (mask >> x & 1) domain.push_back(static_cast<int>(x));
    // Injective image tuples for `domain`, in lexicographic order.
    std::vector<int> tuple(domain.size());
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, std::size_t pos) -> void {
      if (pos == domain.size()) {
        std::vector<int> f(n, -1);
        for (std::size_t i = 0; i < domain.size(); ++i) f[static_cast<std::size_t>(domain[i])] = tuple[i];
        maps.push_back(std::move(f));
        return;
      }
      for (unsigned y = 0; y < n; ++y) {
        if (used[y]) continue;
        used[y] = true;
        tuple[pos] = static_cast<int>(y);
        self(self, pos + 1);
        used[y] = false;
      }
    };
    rec(rec, 0);
  }
  std::map<std::vector<int>, Element> index;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    index.emplace(maps[i], static_cast<Element>(i));
    names.push_back(digits(maps[i]));
  }
  const std::size_t m = maps.size();
  Flat flat(m * m);
  std::vector<int> h(n);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t x = 0; x < n; ++x) {
        const int gx = maps[b][x];
        h[x] = gx < 0 ? -1 : maps[a][static_cast<std::size_t>(gx)];
      }
      flat[a * m + b] = index.at(h);
    }
  }
  return FiniteSemigroup::from_flat(m, std::move(flat), std::move(names));
}

namespace {

using Rgs = std::vector<std::uint8_t>;

std::vector<Rgs> all_set_partitions(std::size_t points) {
  std::vector<Rgs> out;
  Rgs a(points, 0);
  auto rec = [&](auto&& self, std::size_t pos, std::uint8_t max_block) -> void {
    if (pos == points) {
      out.push_back(a);
      return;
    }
    for (std::uint8_t b = 0; b <= max_block + 1; ++b) {
      a[pos] = b;
      self(self, pos + 1, std::max(max_block, b));
    }
  };
  if (points == 0) return {Rgs{}};
  a[0] = 0;
  rec(rec, 1, 0);
  return out;
}

Rgs normalize(const std::vector<std::uint32_t>& labels) {
  std::map<std::uint32_t, std::uint8_t> relabel;
  Rgs out(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, inserted] = relabel.emplace(labels[i], static_cast<std::uint8_t>(relabel.size()));
    out[i] = it->second;
  }
  return out;
}

struct Dsu {
  std::vector<std::uint32_t> p;
  explicit Dsu(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) { p[find(a)] = find(b); }
};

// Stacks f above g: f's bottom row is glued to g's top row on a middle layer,
// which is then discarded. Nodes: f top [0,n), middle [n,2n), g bottom [2n,3n).
Rgs partition_product(const Rgs& f, const Rgs& g, std::size_t n) {
  Dsu dsu(3 * n);
  auto join_blocks = [&](const Rgs& x, std::size_t offset) {
    std::vector<std::int64_t> first(2 * n, -1);
    for (std::size_t p = 0; p < 2 * n; ++p) {
      const auto node = static_cast<std::uint32_t>(p + offset);
      if (first[x[p]] < 0) first[x[p]] = node; else dsu.unite(node, static_cast<std::uint32_t>(first[x[p]]));
    }
  };
  join_blocks(f, 0);
  join_blocks(g, n);
  std::vector<std::uint32_t> labels(2 * n);
  for (std::size_t q = 0; q < n; ++q) labels[q] = dsu.find(static_cast<std::uint32_t>(q));
  for (std::size_t q = n; q < 2 * n; ++q) labels[q] = dsu.find(static_cast<std::uint32_t>(q + n));
  return normalize(labels);
}

Rgs flip(const Rgs& f, std::size_t n) {
  std::vector<std::uint32_t> labels(2 * n);
  for (std::size_t p = 0; p < 2 * n; ++p) labels[p] = f[(p + n) % (2 * n)];
  return normalize(labels);
}

std::string partition_name(const Rgs& f, std::size_t n) {
  std::uint8_t blocks = 0;
  for (auto b : f) blocks = std::max<std::uint8_t>(blocks, b + 1);
  std::string out;
  for (std::uint8_t b = 0; b < blocks; ++b) {
    out += '{';
    bool first = true;
    for (std::size_t p = 0; p < 2 * n; ++p) {
      if (f[p] != b) continue;
      if (!first) out += ',';
      first = false;
      out += std::to_string(p < n ? p + 1 : p - n + 1);
      if (p >= n) out += '\'';
    }
    out += '}';
  }
  return out;
}

bool is_block_bijection(const Rgs& f, std::size_t n) {
  std::uint8_t blocks = 0;
  for (auto b : f) blocks = std::max<std::uint8_t>(blocks, b + 1);
  std::vector<bool> top(blocks, false), bottom(blocks, false);
  for (std::size_t p = 0; p < 2 * n; ++p) (p < n ? top : bottom)[f[p]] = true;
  for (std::uint8_t b = 0; b < blocks; ++b)
    if (!top[b] || !bottom[b]) return false;
  return true;
}

FiniteSemigroup diagram_table(const std::vector<Rgs>& elems, std::size_t n) {
  std::map<Rgs, Element> index;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    index.emplace(elems[i], static_cast<Element>(i));
    names.push_back(partition_name(elems[i], n));
  }
  const std::size_t m = elems.size();
  Flat flat(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      auto it = index.find(partition_product(elems[a], elems[b], n));
      if (it == index.end()) throw Error("diagram family is not closed under the product");
      flat[a * m + b] = it->second;
    }
  }
  return FiniteSemigroup::from_flat(m, std::move(flat), std::move(names));
}

}  // namespace

FiniteSemigroup partition_monoid(std::size_t n) {
  require(n >= 1 && n <= 3, "partition monoids are limited to n <= 3");
  return diagram_table(all_set_partitions(2 * n), n);
}

Permutation star_map(std::size_t n) {
  require(n >= 1 && n <= 3, "partition monoids are limited to n <= 3");
  const auto elems = all_set_partitions(2 * n);
  std::vector<Element> images(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    auto it = std::lower_bound(elems.begin(), elems.end(), flip(elems[i], n));
    images[i] = static_cast<Element>(it - elems.begin());
  }
  return Permutation(std::move(images));
}

FiniteSemigroup dual_symmetric_inverse_monoid(std::size_t n) {
  require(n >= 1 && n <= 3, "dual symmetric inverse monoids are limited to n <= 3");
  std::vector<Rgs> elems;
  for (auto& f : all_set_partitions(2 * n))
    if (is_block_bijection(f, n)) elems.push_back(std::move(f));
  return diagram_table(elems, n);
}

FiniteSemigroup rectangular_band(std::size_t p, std::size_t q) {
  require(p >= 1 && q >= 1 && p * q <= kMaxSemigroupSize, "rectangular band dimensions out of range");
  const std::size_t m = p * q;
  Flat flat(m * m);
  std::vector<std::string> names;
  for (std::size_t a = 0; a < m; ++a) {
    names.push_back("(" + std::to_string(a / q) + "," + std::to_string(a % q) + ")");
    for (std::size_t b = 0; b < m; ++b) flat[a * m + b] = static_cast<Element>((a / q) * q + b % q);
  }
  return FiniteSemigroup::from_flat(m, std::move(flat), std::move(names));
}

FiniteSemigroup left_zero(std::size_t n) { return rectangular_band(n, 1); }
FiniteSemigroup right_zero(std::size_t n) { return rectangular_band(1, n); }

FiniteSemigroup zero_semigroup(std::size_t k) {
  require(k >= 1 && k < kMaxSemigroupSize, "zero semigroup size out of range");
  const std::size_t m = k + 1;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back("x" + std::to_string(i));
  names.push_back("0");
  return FiniteSemigroup::from_flat(m, Flat(m * m, static_cast<Element>(k)), std::move(names));
}

FiniteSemigroup doubled_semigroup(const FiniteSemigroup& s) {
  const std::size_t n = s.size();
  const std::size_t m = 2 * n + 1;
  require(m <= kMaxSemigroupSize, "doubled semigroup too large");
  const auto zero = static_cast<Element>(2 * n);
  Flat flat(m * m, zero);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      flat[a * m + b] = s.product(a, b);
      flat[(n + a) * m + (n + b)] = static_cast<Element>(n + s.product(b, a));
    }
  }
  std::vector<std::string> names;
  for (Element a = 0; a < n; ++a) names.push_back(s.name(a));
  for (Element a = 0; a < n; ++a) names.push_back(s.name(a) + "*");
  names.push_back("0");
  return FiniteSemigroup::from_flat(m, std::move(flat), std::move(names));
}

FiniteSemigroup direct_product(const FiniteSemigroup& s, const FiniteSemigroup& t) {
  const std::size_t ns = s.size(), nt = t.size(), m = ns * nt;
  require(m <= kMaxSemigroupSize, "direct product too large");
  Flat flat(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const Element x = s.product(static_cast<Element>(a / nt), static_cast<Element>(b / nt));
      const Element y = t.product(static_cast<Element>(a % nt), static_cast<Element>(b % nt));
      flat[a * m + b] = static_cast<Element>(x * nt + y);
    }
  }
  std::vector<std::string> names;
  for (std::size_t a = 0; a < m; ++a)
    names.push_back("(" + s.name(static_cast<Element>(a / nt)) + "," + t.name(static_cast<Element>(a % nt)) + ")");
  return FiniteSemigroup::from_flat(m, std::move(flat), std::move(names), FiniteSemigroup::Check::range_only);
}

FiniteSemigroup dual_table(const FiniteSemigroup& s) { return s.dual(); }

Permutation doubled_gamma(const Permutation& a, const Permutation& b) {
  const std::size_t n = a.degree();
  std::vector<Element> images(2 * n + 1);
  for (Element s = 0; s < n; ++s) {
    images[s] = a(s);
    images[n + s] = static_cast<Element>(n + b(s));
  }
  images[2 * n] = static_cast<Element>(2 * n);
  return Permutation(std::move(images));
}

Permutation doubled_delta(const Permutation& a, const Permutation& b) {
  const std::size_t n = a.degree();
  std::vector<Element> images(2 * n + 1);
  for (Element s = 0; s < n; ++s) {
    images[s] = static_cast<Element>(n + b(s));
    images[n + s] = a(s);
  }
  images[2 * n] = static_cast<Element>(2 * n);
  return Permutation(std::move(images));
}

Permutation band_gamma(const Permutation& sigma, const Permutation& tau) {
  const std::size_t m = sigma.degree();
  std::vector<Element> images(m * m);
  for (Element x = 0; x < m; ++x)
    for (Element y = 0; y < m; ++y) images[x * m + y] = static_cast<Element>(sigma(x) * m + tau(y));
  return Permutation(std::move(images));
}

Permutation band_delta(const Permutation& sigma, const Permutation& tau) {
  const std::size_t m = sigma.degree();
  std::vector<Element> images(m * m);
  for (Element x = 0; x < m; ++x)
    for (Element y = 0; y < m; ++y) images[x * m + y] = static_cast<Element>(sigma(y) * m + tau(x));
  return Permutation(std::move(images));
}

}  // namespace invol::construct
