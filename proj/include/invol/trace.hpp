#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "invol/graph.hpp"
#include "invol/permutation.hpp"

namespace invol {

using Letter = std::uint8_t;

/// Alphabet {0..m-1} with a commutation graph: letters joined by an edge
/// commute, all other pairs do not.
class TraceContext {
 public:
  static constexpr std::size_t kDefaultMaxLength = 16;

  explicit TraceContext(SimpleGraph commutation, std::size_t max_length = kDefaultMaxLength);

  std::size_t alphabet_size() const { return graph_.vertex_count(); }
  const SimpleGraph& graph() const { return graph_; }
  std::size_t max_length() const { return max_length_; }
  bool commute(Letter a, Letter b) const { return graph_.adjacent(a, b); }

  friend bool operator==(const TraceContext& a, const TraceContext& b) {
    return a.graph_ == b.graph_ && a.max_length_ == b.max_length_;
  }

 private:
  SimpleGraph graph_;
  std::size_t max_length_;
};

/// A non-empty word over the alphabet of a shared context.
class TraceWord {
 public:
  /// Throws InputError for empty words or out-of-alphabet letters.
  TraceWord(std::shared_ptr<const TraceContext> context, std::vector<Letter> letters);
  /// Letters 'a', 'b', ... stand for 0, 1, ...
  static TraceWord parse(std::shared_ptr<const TraceContext> context, std::string_view text);

  const std::shared_ptr<const TraceContext>& context() const { return context_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  std::string to_string() const;

  /// Word concatenation (the free-semigroup product).
  friend TraceWord operator*(const TraceWord& u, const TraceWord& v);
  /// Literal equality of words, not of traces.
  friend bool operator==(const TraceWord& u, const TraceWord& v) { return u.letters_ == v.letters_; }

 private:
  std::shared_ptr<const TraceContext> context_;
  std::vector<Letter> letters_;
};

/// Lexicographically least word in the trace class of w.
/// Throws LengthBudgetExceeded beyond the context's length bound.
TraceWord normal_form(const TraceWord& w);

/// True iff u and w represent the same element of the graph semigroup.
/// Throws ContextMismatch when the contexts differ.
bool trace_equal(const TraceWord& u, const TraceWord& w);

/// Letterwise image pi(x1)...pi(xk). Throws NotGraphAutomorphism unless pi
/// is an automorphism of the commutation graph.
TraceWord gamma_map(const Permutation& pi, const TraceWord& w);
/// Reversed letterwise image pi(xk)...pi(x1). Same precondition.
TraceWord delta_map(const Permutation& pi, const TraceWord& w);

}  // namespace invol
