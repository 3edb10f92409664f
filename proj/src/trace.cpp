#include "invol/trace.hpp"

#include <algorithm>

#include "invol/errors.hpp"

namespace invol {

TraceContext::TraceContext(SimpleGraph commutation, std::size_t max_length)
    : graph_(std::move(commutation)), max_length_(max_length) {
  if (graph_.vertex_count() == 0 || graph_.vertex_count() > 26) {
    throw InputError("trace alphabets have between 1 and 26 letters");
  }
}

TraceWord::TraceWord(std::shared_ptr<const TraceContext> context, std::vector<Letter> letters)
    : context_(std::move(context)), letters_(std::move(letters)) {
  if (!context_) throw InputError("trace word needs a context");
  if (letters_.empty()) throw InputError("trace words are non-empty");
  for (Letter a : letters_) {
    if (a >= context_->alphabet_size()) throw InputError("letter outside the alphabet");
  }
}

TraceWord TraceWord::parse(std::shared_ptr<const TraceContext> context, std::string_view text) {
  std::vector<Letter> letters;
  for (char ch : text) {
    if (ch < 'a' || ch > 'z') throw ParseError(std::string("invalid letter '") + ch + "'");
    letters.push_back(static_cast<Letter>(ch - 'a'));
  }
  return TraceWord(std::move(context), std::move(letters));
}

std::string TraceWord::to_string() const {
  std::string out;
  for (Letter a : letters_) out.push_back(static_cast<char>('a' + a));
  return out;
}

TraceWord operator*(const TraceWord& u, const TraceWord& v) {
  if (!(*u.context_ == *v.context_)) throw ContextMismatch();
  std::vector<Letter> letters = u.letters_;
  letters.insert(letters.end(), v.letters_.begin(), v.letters_.end());
  return TraceWord(u.context_, std::move(letters));
}

TraceWord normal_form(const TraceWord& w) {
  const auto& ctx = *w.context();
  if (w.length() > ctx.max_length()) throw LengthBudgetExceeded(ctx.max_length());
  // Repeatedly emit the smallest letter that can be brought to the front: an
  // occurrence that commutes with every letter still ahead of it. That occurrence
  // is necessarily the first of its letter, since no letter commutes with itself.
  std::vector<Letter> rest = w.letters();
  std::vector<Letter> out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    std::size_t best = rest.size();
    for (std::size_t i = 0; i < rest.size(); ++i) {
      bool movable = true;
      for (std::size_t j = 0; j < i && movable; ++j) movable = ctx.commute(rest[j], rest[i]);
      if (!movable) continue;
      if (best == rest.size() || rest[i] < rest[best]) best = i;
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return TraceWord(w.context(), std::move(out));
}

bool trace_equal(const TraceWord& u, const TraceWord& w) {
  if (!(*u.context() == *w.context())) throw ContextMismatch();
  if (u.length() != w.length()) {
    if (u.length() > u.context()->max_length() || w.length() > w.context()->max_length()) {
      throw LengthBudgetExceeded(u.context()->max_length());
    }
    return false;
  }
  return normal_form(u) == normal_form(w);
}

namespace {

void require_graph_automorphism(const Permutation& pi, const TraceContext& ctx) {
  if (!ctx.graph().is_automorphism(pi)) throw NotGraphAutomorphism("permutation is not an automorphism of the commutation graph");
}

}  // namespace

TraceWord gamma_map(const Permutation& pi, const TraceWord& w) {
  require_graph_automorphism(pi, *w.context());
  std::vector<Letter> out;
  for (Letter a : w.letters()) out.push_back(static_cast<Letter>(pi(a)));
  return TraceWord(w.context(), std::move(out));
}

TraceWord delta_map(const Permutation& pi, const TraceWord& w) {
  require_graph_automorphism(pi, *w.context());
  std::vector<Letter> out;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(static_cast<Letter>(pi(*it)));
  return TraceWord(w.context(), std::move(out));
}

}  // namespace invol
