#include "invol/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "invol/constructions.hpp"
#include "invol/morphism.hpp"

namespace invol {

bool AnalysisReport::all_checks_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const LawCheck& c) { return c.passed; });
}

std::vector<std::pair<std::string, FiniteSemigroup>> identification_candidates(std::size_t order) {
  std::vector<std::pair<std::string, FiniteSemigroup>> out;
  if (order == 0 || order > kMaxSemigroupSize) return out;
  out.emplace_back("Z" + std::to_string(order), construct::cyclic_group(order));
  std::size_t k = 0;
  for (std::size_t m = order; m % 2 == 0; m /= 2) {
    ++k;
    if (m == 2 && k >= 2) {
      FiniteSemigroup g = construct::cyclic_group(2);
      for (std::size_t i = 1; i < k; ++i) g = construct::direct_product(g, construct::cyclic_group(2));
      out.emplace_back("Z2^" + std::to_string(k), std::move(g));
    }
  }
  std::size_t factorial = 2;
  for (std::size_t n = 3; n <= 6; ++n) {
    factorial *= n;
    if (factorial == order) out.emplace_back("Sym(" + std::to_string(n) + ")", construct::sym_group_table(n));
    if (2 * factorial == order)
      out.emplace_back("Z2 x Sym(" + std::to_string(n) + ")",
                       construct::direct_product(construct::cyclic_group(2), construct::sym_group_table(n)));
  }
  return out;
}

AnalysisReport analyze(const FiniteSemigroup& s, std::string input_descriptor, const GroupOptions& options) {
  AnalysisReport r;
  r.input = std::move(input_descriptor);
  r.size = s.size();
  r.commutative = is_commutative(s);
  r.identity = s.identity();

  const MorphismSet aut = enumerate_automorphisms(s, options.search);
  const MorphismSet anti = enumerate_anti_automorphisms(s, options.search);
  const MorphismSet inv = involutions_from(anti);
  const MorphismSet two = order_two_from(aut);
  r.aut = aut.size();
  r.anti = anti.size();
  r.involutions = inv.size();
  r.order_two = two.size();
  r.automorphism_list = aut.elements;
  r.anti_automorphism_list = anti.elements;
  r.involution_list = inv.elements;

  std::vector<Permutation> signed_elems = aut.elements;
  signed_elems.insert(signed_elems.end(), anti.elements.begin(), anti.elements.end());
  std::sort(signed_elems.begin(), signed_elems.end());
  signed_elems.erase(std::unique(signed_elems.begin(), signed_elems.end()), signed_elems.end());
  r.signed_order = signed_elems.size();
  std::size_t both = 0;
  for (const auto& a : anti.elements) both += aut.contains(a) ? 1 : 0;

  const PermGroup c = closure(s.size(), inv.elements, options.closure);
  const PermGroup g = closure(s.size(), two.elements, options.closure);
  r.c_order = c.order();
  r.g_order = g.order();
  for (const auto& x : c.elements()) r.c_cap_aut += aut.contains(x) ? 1 : 0;
  r.c_fingerprint = fingerprint(c, options.closure);

  for (const auto& iota : inv.elements) {
    if (!is_proper_involution(iota, s)) continue;
    r.proper_involution_exists = true;
    const bool central = std::all_of(aut.elements.begin(), aut.elements.end(),
                                      [&](const Permutation& a) { return compose(a, iota) == compose(iota, a); });
    if (central) {
      r.central_involution = iota;
      break;
    }
  }

  r.checks.push_back({"signed order = |Aut| + |Aut-| - |Aut & Aut-|", r.signed_order == r.aut + r.anti - both});
  r.checks.push_back({"C inside Aut+-", std::all_of(c.elements().begin(), c.elements().end(), [&](const Permutation& x) {
                        return std::binary_search(signed_elems.begin(), signed_elems.end(), x);
                      })});
  if (r.proper_involution_exists) {
    r.checks.push_back({"|C| = 2|C & Aut|", r.c_order == 2 * r.c_cap_aut});
    r.checks.push_back({"|Aut+-| = 2|Aut|", r.signed_order == 2 * r.aut});
  }
  if (r.central_involution) {
    std::vector<Permutation> images;
    for (const auto& a : two.elements) images.push_back(compose(a, *r.central_involution));
    std::sort(images.begin(), images.end());
    r.checks.push_back({"alpha -> alpha o iota maps J onto I bijectively", images == inv.elements});
    r.checks.push_back({"|C| = 2|G|", r.c_order == 2 * r.g_order});
  }

  if (c.order() <= kMaxSemigroupSize) {
    const FiniteSemigroup c_table = to_cayley_table(c);
    for (auto& [label, table] : identification_candidates(c.order())) {
      const bool matched = group_table_fingerprint(table) == r.c_fingerprint &&
                           find_isomorphism(c_table, table, options.search).has_value();
      r.identifications.push_back({label, matched});
    }
  }
  return r;
}

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string to_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "input: " << r.input << "\n";
  out << "size: " << r.size << "\n";
  out << "commutative: " << yes_no(r.commutative) << "\n";
  out << "identity: " << (r.identity ? std::to_string(*r.identity) : "none") << "\n";
  out << "|Aut|: " << r.aut << "\n";
  out << "|Aut-|: " << r.anti << "\n";
  out << "|Aut+-|: " << r.signed_order << "\n";
  out << "|I|: " << r.involutions << "\n";
  out << "|J|: " << r.order_two << "\n";
  out << "|C|: " << r.c_order << "\n";
  out << "|G|: " << r.g_order << "\n";
  out << "|C & Aut|: " << r.c_cap_aut << "\n";
  const auto& f = r.c_fingerprint;
  out << "C fingerprint: order " << f.order << ", abelian " << yes_no(f.abelian) << ", exponent " << f.exponent
      << ", center " << f.center_order << ", derived " << f.derived_order << ", element orders {";
  bool first = true;
  for (const auto& [k, v] : f.element_orders) {
    out << (first ? "" : ", ") << k << ":" << v;
    first = false;
  }
  out << "}\n";
  out << "proper involution: " << yes_no(r.proper_involution_exists) << "\n";
  out << "central proper involution: "
      << (r.central_involution ? r.central_involution->to_cycle_string() : std::string("none")) << "\n";
  for (const auto& c : r.checks) out << "check " << (c.passed ? "PASS" : "FAIL") << ": " << c.name << "\n";
  for (const auto& id : r.identifications)
    out << "C isomorphic to " << id.expected << ": " << yes_no(id.matched) << "\n";
  return out.str();
}

std::string to_json(const AnalysisReport& r) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["input"] = r.input;
  doc["size"] = r.size;
  doc["commutative"] = r.commutative;
  doc["identity"] = r.identity ? ordered_json(*r.identity) : ordered_json(nullptr);
  doc["aut"] = r.aut;
  doc["anti"] = r.anti;
  doc["signed"] = r.signed_order;
  doc["involutions"] = r.involutions;
  doc["order_two"] = r.order_two;
  doc["c_order"] = r.c_order;
  doc["g_order"] = r.g_order;
  doc["c_cap_aut"] = r.c_cap_aut;
  ordered_json orders = ordered_json::object();
  for (const auto& [k, v] : r.c_fingerprint.element_orders) orders[std::to_string(k)] = v;
  doc["c_fingerprint"] = {{"order", r.c_fingerprint.order},
                          {"abelian", r.c_fingerprint.abelian},
                          {"exponent", r.c_fingerprint.exponent},
                          {"element_orders", orders},
                          {"center_order", r.c_fingerprint.center_order},
                          {"derived_order", r.c_fingerprint.derived_order}};
  doc["proper_involution"] = r.proper_involution_exists;
  doc["central_involution"] =
      r.central_involution ? ordered_json(r.central_involution->to_cycle_string()) : ordered_json(nullptr);
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}});
  doc["checks"] = checks;
  ordered_json ids = ordered_json::array();
  for (const auto& id : r.identifications) ids.push_back({{"expected", id.expected}, {"matched", id.matched}});
  doc["identifications"] = ids;
  auto arrays = [](const std::vector<Permutation>& ps) {
    ordered_json out = ordered_json::array();
    for (const auto& p : ps) out.push_back(std::vector<Element>(p.images().begin(), p.images().end()));
    return out;
  };
  doc["morphisms"] = {{"automorphisms", arrays(r.automorphism_list)},
                      {"anti_automorphisms", arrays(r.anti_automorphism_list)},
                      {"involutions", arrays(r.involution_list)}};
  return doc.dump(2) + "\n";
}

}  // namespace invol
