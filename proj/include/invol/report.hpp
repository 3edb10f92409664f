#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "invol/permgroup.hpp"
#include "invol/semigroup.hpp"

namespace invol {

struct Identification {
  std::string expected;  // e.g. "Z2^3", "Sym(4)", "Z2 x Sym(3)"
  bool matched = false;
};

struct LawCheck {
  std::string name;
  bool passed = false;
};

struct AnalysisReport {
  std::string input;
  std::size_t size = 0;
  bool commutative = false;
  std::optional<Element> identity;
  std::size_t aut = 0;
  std::size_t anti = 0;
  std::size_t involutions = 0;  // |I(S)|
  std::size_t order_two = 0;    // |J(S)|, identity included
  std::size_t c_order = 0;
  std::size_t g_order = 0;
  std::size_t signed_order = 0;  // |Aut ∪ Aut⁻|
  std::size_t c_cap_aut = 0;     // |C(S) ∩ Aut(S)|
  GroupFingerprint c_fingerprint;
  bool proper_involution_exists = false;
  /// Smallest proper involution commuting with every automorphism, if any.
  std::optional<Permutation> central_involution;
  std::vector<Permutation> automorphism_list;
  std::vector<Permutation> anti_automorphism_list;
  std::vector<Permutation> involution_list;
  std::vector<LawCheck> checks;
  std::vector<Identification> identifications;

  bool all_checks_pass() const;
};

/// Candidate groups of the given order: Z_m, Z2^k, Sym(k), Z2 x Sym(k),
/// each paired with its Cayley table. Orders above kMaxSemigroupSize yield none.
std::vector<std::pair<std::string, FiniteSemigroup>> identification_candidates(std::size_t order);

AnalysisReport analyze(const FiniteSemigroup& s, std::string input_descriptor, const GroupOptions& options = {});

std::string to_text(const AnalysisReport& r);
std::string to_json(const AnalysisReport& r);

}  // namespace invol
