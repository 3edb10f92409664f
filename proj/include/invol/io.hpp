#pragma once

#include <string>
#include <string_view>

#include "invol/graph.hpp"
#include "invol/semigroup.hpp"

namespace invol::io {

/// Cayley-table document:
///   {"n": 3, "table": [[...], ...], "names": ["a", ...], "identity": 0}
/// "names" and "identity" are optional. A declared identity must be a genuine
/// two-sided identity of the table. Throws ParseError or a validation error.
FiniteSemigroup parse_semigroup(std::string_view text);
/// Serializes with one table row per line; output is deterministic.
std::string format_semigroup(const FiniteSemigroup& s);

/// Graph document: {"n": 4, "edges": [[0, 1], [1, 2]]}.
SimpleGraph parse_graph(std::string_view text);
std::string format_graph(const SimpleGraph& g);

/// Whole file as a string. Throws InputError if it cannot be read.
std::string read_file(const std::string& path);

}  // namespace invol::io
