#include "invol/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "invol/errors.hpp"

namespace invol {

Permutation::Permutation(std::vector<Element> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Element y : images_) {
    if (y >= images_.size() || seen[y]) {
      throw InputError("mapping is not a bijection");
    }
    seen[y] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Element> images(degree);
  std::iota(images.begin(), images.end(), Element{0});
  return unchecked(std::move(images));
}

Permutation Permutation::unchecked(std::vector<Element> images) {
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Element>>& cycles) {
  std::vector<Element> images(degree);
  std::iota(images.begin(), images.end(), Element{0});
  std::vector<bool> touched(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Element x = cycle[i];
      if (x >= degree || touched[x]) {
        throw InputError("cycles are not disjoint or exceed the degree");
      }
      touched[x] = true;
      images[x] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::parse_cycles(std::string_view text, std::size_t min_degree) {
  std::vector<std::vector<Element>> cycles;
  std::size_t pos = 0;
  std::size_t degree = min_degree;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  if (pos == text.size()) throw ParseError("empty permutation literal");
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '(' in permutation literal");
    ++pos;
    std::vector<Element> cycle;
    for (;;) {
      skip_space();
      if (pos >= text.size()) throw ParseError("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw ParseError("unexpected character in permutation literal");
      }
      Element value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<Element>(text[pos] - '0');
        if (value > 1'000'000) throw ParseError("point too large");
        ++pos;
      }
      cycle.push_back(value);
      degree = std::max<std::size_t>(degree, value + 1);
    }
    if (cycle.size() > 1) cycles.push_back(std::move(cycle));
    skip_space();
  }
  try {
    return from_cycles(degree, cycles);
  } catch (const InputError& e) {
    throw ParseError(e.what());
  }
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv.images_[images_[i]] = static_cast<Element>(i);
  return inv;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (const auto& cycle : cycles()) result = std::lcm(result, static_cast<std::uint64_t>(cycle.size()));
  return result;
}

int Permutation::sign() const {
  std::size_t transpositions = 0;
  for (const auto& cycle : cycles()) transpositions += cycle.size() - 1;
  return transpositions % 2 == 0 ? 1 : -1;
}

std::vector<std::vector<Element>> Permutation::cycles() const {
  std::vector<std::vector<Element>> result;
  std::vector<bool> seen(images_.size(), false);
  for (Element start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Element> cycle;
    for (Element x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::string Permutation::to_cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream out;
  for (const auto& cycle : cs) {
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out << ' ';
      out << cycle[i];
    }
    out << ')';
  }
  return out.str();
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw DegreeMismatch("cannot compose permutations of different degree");
  std::vector<Element> images(a.degree());
  for (std::size_t x = 0; x < images.size(); ++x) images[x] = a(b(static_cast<Element>(x)));
  return Permutation::unchecked(std::move(images));
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image array.
  std::uint64_t h = 1469598103934665603ull;
  for (Element x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace invol
