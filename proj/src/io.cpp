#include "invol/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "invol/errors.hpp"

namespace invol::io {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::int64_t as_integer(const json& v, const char* what) {
  if (!v.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return v.get<std::int64_t>();
}

const json& member(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

}  // namespace

FiniteSemigroup parse_semigroup(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("semigroup document must be a JSON object");
  const std::int64_t n = as_integer(member(doc, "n"), "\"n\"");
  if (n < 1 || n > static_cast<std::int64_t>(kMaxSemigroupSize))
    throw InputError("\"n\" must lie in 1.." + std::to_string(kMaxSemigroupSize));
  const json& rows = member(doc, "table");
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n))
    throw ParseError("\"table\" must be an array of n rows");
  std::vector<std::vector<std::int64_t>> table;
  table.reserve(rows.size());
  for (const json& row : rows) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
      throw ParseError("every table row must be an array of n entries");
    std::vector<std::int64_t> r;
    r.reserve(row.size());
    for (const json& v : row) r.push_back(as_integer(v, "table entry"));
    table.push_back(std::move(r));
  }
  std::vector<std::string> names;
  if (auto it = doc.find("names"); it != doc.end() && !it->is_null()) {
    if (!it->is_array() || it->size() != static_cast<std::size_t>(n))
      throw ParseError("\"names\" must be an array of n strings");
    for (const json& v : *it) {
      if (!v.is_string()) throw ParseError("\"names\" must be an array of n strings");
      names.push_back(v.get<std::string>());
    }
  }
  FiniteSemigroup s = FiniteSemigroup::validate(table, std::move(names));
  if (auto it = doc.find("identity"); it != doc.end() && !it->is_null()) {
    const std::int64_t e = as_integer(*it, "\"identity\"");
    if (!s.identity() || static_cast<std::int64_t>(*s.identity()) != e)
      throw InputError("declared identity " + std::to_string(e) + " is not a two-sided identity");
  }
  return s;
}

std::string format_semigroup(const FiniteSemigroup& s) {
  std::ostringstream out;
  out << "{\n  \"n\": " << s.size() << ",\n  \"table\": [\n";
  for (Element a = 0; a < s.size(); ++a) {
    out << "    [";
    const auto row = s.row(a);
    for (std::size_t b = 0; b < row.size(); ++b) out << (b ? ", " : "") << row[b];
    out << "]" << (a + 1 < s.size() ? "," : "") << "\n";
  }
  out << "  ]";
  if (!s.names().empty()) out << ",\n  \"names\": " << json(s.names()).dump();
  if (s.identity()) out << ",\n  \"identity\": " << *s.identity();
  out << "\n}\n";
  return out.str();
}

SimpleGraph parse_graph(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("graph document must be a JSON object");
  const std::int64_t n = as_integer(member(doc, "n"), "\"n\"");
  if (n < 0 || n > static_cast<std::int64_t>(kMaxSemigroupSize)) throw InputError("\"n\" out of range");
  const json& edges = member(doc, "edges");
  if (!edges.is_array()) throw ParseError("\"edges\" must be an array of pairs");
  std::vector<std::pair<Element, Element>> list;
  for (const json& e : edges) {
    if (!e.is_array() || e.size() != 2) throw ParseError("every edge must be a pair [u, v]");
    const std::int64_t u = as_integer(e[0], "edge endpoint");
    const std::int64_t v = as_integer(e[1], "edge endpoint");
    if (u < 0 || v < 0 || u >= n || v >= n) throw InputError("edge endpoint out of range");
    list.emplace_back(static_cast<Element>(u), static_cast<Element>(v));
  }
  return SimpleGraph(static_cast<std::size_t>(n), list);
}

std::string format_graph(const SimpleGraph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return "{\"n\": " + std::to_string(g.vertex_count()) + ", \"edges\": " + edges.dump() + "}\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace invol::io
