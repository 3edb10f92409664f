#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "invol/constructions.hpp"
#include "invol/errors.hpp"
#include "invol/graph.hpp"
#include "invol/io.hpp"
#include "invol/permgroup.hpp"
#include "invol/report.hpp"
#include "invol/trace.hpp"
#include "invol/verify.hpp"

namespace {

using namespace invol;
using nlohmann::ordered_json;

enum Exit { kOk = 0, kVerificationFailed = 1, kInputError = 2, kBudgetExceeded = 3 };

struct Globals {
  std::uint64_t budget_nodes = SearchOptions{}.node_budget;
  std::uint64_t budget_order = ClosureOptions{}.order_budget;
  unsigned jobs = 1;
  bool json = false;

  GroupOptions group() const {
    GroupOptions g;
    g.search.node_budget = budget_nodes;
    g.search.jobs = jobs;
    g.closure.order_budget = budget_order;
    return g;
  }
};

std::size_t to_size(const std::string& s) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size()) throw ParseError("expected a non-negative integer, got '" + s + "'");
  return static_cast<std::size_t>(v);
}

/// Inline "n:u-v,u-v,..." or a path to a graph JSON file.
SimpleGraph parse_graph_arg(const std::string& arg) {
  const auto colon = arg.find(':');
  if (colon == std::string::npos) return io::parse_graph(io::read_file(arg));
  const std::size_t n = to_size(arg.substr(0, colon));
  std::vector<std::pair<Element, Element>> edges;
  std::string rest = arg.substr(colon + 1);
  std::size_t start = 0;
  while (start < rest.size()) {
    std::size_t comma = rest.find(',', start);
    if (comma == std::string::npos) comma = rest.size();
    const std::string edge = rest.substr(start, comma - start);
    const auto dash = edge.find('-');
    if (dash == std::string::npos) throw ParseError("edges are written u-v, got '" + edge + "'");
    const auto u = to_size(edge.substr(0, dash));
    const auto v = to_size(edge.substr(dash + 1));
    if (u >= n || v >= n) throw InputError("edge endpoint out of range in '" + edge + "'");
    edges.emplace_back(static_cast<Element>(u), static_cast<Element>(v));
    start = comma + 1;
  }
  return SimpleGraph(n, edges);
}

const char* kFamilies =
    "families: cyclic N | klein | sym N | transformation N | inverse N | dual-inverse N |\n"
    "          partition N | band P Q | left-zero N | right-zero N | zero K | frucht GRAPH |\n"
    "          doubled FAMILY | dual FAMILY | product FAMILY FAMILY\n"
    "GRAPH is N:u-v,u-v,... or a graph JSON file";

/// Consumes one family expression from args[pos...].
FiniteSemigroup build_family(const std::vector<std::string>& args, std::size_t& pos) {
  if (pos >= args.size()) throw ParseError("missing family name");
  const std::string name = args[pos++];
  auto next = [&]() -> std::string {
    if (pos >= args.size()) throw ParseError("family '" + name + "' needs more parameters");
    return args[pos++];
  };
  auto num = [&] { return to_size(next()); };
  if (name == "cyclic") return construct::cyclic_group(num());
  if (name == "klein") return construct::klein_four();
  if (name == "sym") return construct::sym_group_table(num());
  if (name == "transformation") return construct::full_transformation_monoid(num());
  if (name == "inverse") return construct::symmetric_inverse_monoid(num());
  if (name == "dual-inverse") return construct::dual_symmetric_inverse_monoid(num());
  if (name == "partition") return construct::partition_monoid(num());
  if (name == "band") {
    const auto p = num();
    return construct::rectangular_band(p, num());
  }
  if (name == "left-zero") return construct::left_zero(num());
  if (name == "right-zero") return construct::right_zero(num());
  if (name == "zero") return construct::zero_semigroup(num());
  if (name == "frucht") return frucht_semigroup(parse_graph_arg(next()));
  if (name == "doubled") return construct::doubled_semigroup(build_family(args, pos));
  if (name == "dual") return construct::dual_table(build_family(args, pos));
  if (name == "product") {
    auto s = build_family(args, pos);
    return construct::direct_product(s, build_family(args, pos));
  }
  throw ParseError("unknown family '" + name + "'");
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

int run_analyze(const Globals& g, const std::string& file) {
  const FiniteSemigroup s = io::parse_semigroup(io::read_file(file));
  const AnalysisReport r = analyze(s, file, g.group());
  std::cout << (g.json ? to_json(r) : to_text(r));
  return r.all_checks_pass() ? kOk : kVerificationFailed;
}

int run_construct(const std::vector<std::string>& args, const std::string& output) {
  std::size_t pos = 0;
  const FiniteSemigroup s = build_family(args, pos);
  if (pos != args.size()) throw ParseError("unexpected parameter '" + args[pos] + "'");
  emit(io::format_semigroup(s), output);
  return kOk;
}

int run_verify(const Globals& g, const std::string& scale, bool stretch) {
  verify::BatteryOptions opts;
  opts.scale = scale == "small" ? verify::Scale::small : verify::Scale::full;
  opts.stretch = stretch;
  opts.group = g.group();
  ordered_json rows = ordered_json::array();
  auto results = verify::run_battery(opts, [&](const verify::CheckResult& c) {
    if (g.json) {
      rows.push_back({{"id", c.id}, {"title", c.title}, {"passed", c.passed}, {"detail", c.detail},
                      {"seconds", c.seconds}, {"limit_seconds", c.limit_seconds}});
      return;
    }
    std::printf("%s %2d %-46s %8.3fs / %4.0fs  %s\n", c.passed ? "PASS" : "FAIL", c.id, c.title.c_str(), c.seconds,
                c.limit_seconds, c.detail.c_str());
    std::fflush(stdout);
  });
  std::size_t passed = 0;
  for (const auto& c : results) passed += c.passed ? 1 : 0;
  if (g.json) {
    ordered_json doc{{"scale", scale}, {"stretch", stretch}, {"passed", passed}, {"total", results.size()}, {"checks", rows}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::printf("%zu of %zu checks passed\n", passed, results.size());
  }
  return passed == results.size() ? kOk : kVerificationFailed;
}

int run_factor(const Globals& g, const std::string& literal) {
  const Permutation pi = Permutation::parse_cycles(literal);
  const auto [sigma, tau] = two_involution_factorization(pi);
  const bool ok = compose(sigma, sigma).is_identity() && compose(tau, tau).is_identity() && compose(sigma, tau) == pi;
  if (g.json) {
    ordered_json doc{{"pi", pi.to_cycle_string()},
                     {"sigma", sigma.to_cycle_string()},
                     {"tau", tau.to_cycle_string()},
                     {"verified", ok}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "sigma: " << sigma.to_cycle_string() << "\n"
              << "tau:   " << tau.to_cycle_string() << "\n"
              << "check: sigma^2 = tau^2 = 1 and sigma o tau = " << pi.to_cycle_string() << ": "
              << (ok ? "ok" : "FAILED") << "\n";
  }
  return ok ? kOk : kVerificationFailed;
}

/// Commutation graph from "ab,bc" style letter pairs over `letters` letters.
std::shared_ptr<const TraceContext> trace_context(std::size_t letters, const std::string& edges,
                                                  const std::vector<std::string>& words, std::size_t max_length) {
  std::vector<std::pair<Element, Element>> list;
  std::size_t needed = 1;
  auto letter = [&](char ch) -> Element {
    if (ch < 'a' || ch > 'z') throw ParseError(std::string("invalid letter '") + ch + "'");
    needed = std::max<std::size_t>(needed, static_cast<std::size_t>(ch - 'a') + 1);
    return static_cast<Element>(ch - 'a');
  };
  std::size_t start = 0;
  while (start < edges.size()) {
    std::size_t comma = edges.find(',', start);
    if (comma == std::string::npos) comma = edges.size();
    const std::string pair = edges.substr(start, comma - start);
    if (pair.size() != 2) throw ParseError("edges are written as letter pairs like 'ab', got '" + pair + "'");
    list.emplace_back(letter(pair[0]), letter(pair[1]));
    start = comma + 1;
  }
  for (const auto& w : words)
    for (char ch : w) letter(ch);
  if (letters == 0) letters = needed;
  if (letters < needed) throw InputError("alphabet smaller than the letters in use");
  return std::make_shared<const TraceContext>(SimpleGraph(letters, list), max_length);
}

int run_trace(const Globals& g, const std::string& mode, const std::vector<std::string>& args, std::size_t letters,
              const std::string& edges, std::size_t max_length) {
  std::string result;
  if (mode == "nf") {
    if (args.size() != 1) throw ParseError("usage: trace nf WORD");
    auto ctx = trace_context(letters, edges, args, max_length);
    result = normal_form(TraceWord::parse(ctx, args[0])).to_string();
  } else if (mode == "eq") {
    if (args.size() != 2) throw ParseError("usage: trace eq WORD WORD");
    auto ctx = trace_context(letters, edges, args, max_length);
    result = trace_equal(TraceWord::parse(ctx, args[0]), TraceWord::parse(ctx, args[1])) ? "true" : "false";
  } else if (mode == "map") {
    if (args.size() != 3 || (args[0] != "gamma" && args[0] != "delta"))
      throw ParseError("usage: trace map gamma|delta PERMUTATION WORD");
    auto ctx = trace_context(letters, edges, {args[2]}, max_length);
    const std::string literal = args[1] == "identity" ? "()" : args[1];
    const Permutation pi = Permutation::parse_cycles(literal, ctx->alphabet_size());
    if (pi.degree() != ctx->alphabet_size()) throw InputError("permutation moves letters outside the alphabet");
    const TraceWord w = TraceWord::parse(ctx, args[2]);
    result = (args[0] == "gamma" ? gamma_map(pi, w) : delta_map(pi, w)).to_string();
  } else {
    throw ParseError("unknown trace mode '" + mode + "' (expected nf, eq or map)");
  }
  if (g.json) {
    std::cout << ordered_json{{"mode", mode}, {"result", result}}.dump(2) << "\n";
  } else {
    std::cout << result << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Automorphisms, anti-automorphisms and involutions of finite semigroups"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--budget-nodes", g.budget_nodes, "Search node budget")->capture_default_str();
  app.add_option("--budget-order", g.budget_order, "Largest group the closure may build")->capture_default_str();
  app.add_option("--jobs", g.jobs, "Worker threads for the morphism search")->check(CLI::Range(1u, 256u));
  app.add_flag("--json", g.json, "Machine-readable output");

  std::string file;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a Cayley-table JSON file");
  analyze_cmd->add_option("file", file, "Cayley-table file")->required();

  std::vector<std::string> family;
  std::string output;
  auto* construct_cmd = app.add_subcommand("construct", "Emit the Cayley table of a built-in family");
  construct_cmd->add_option("family", family, "Family name and parameters")->required();
  construct_cmd->add_option("-o,--output", output, "Write to a file instead of stdout");
  construct_cmd->footer(kFamilies);

  std::string scale = "full";
  bool stretch = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run the verification battery");
  verify_cmd->add_option("--scale", scale, "small or full")->check(CLI::IsMember({"small", "full"}));
  verify_cmd->add_flag("--stretch", stretch, "Add the Sym(6) and T_4 cases");

  std::string literal;
  auto* factor_cmd = app.add_subcommand("factor", "Write a permutation as a product of two involutions");
  factor_cmd->add_option("permutation", literal, "Cycle notation, e.g. \"(0 1 2)(3 4)\"")->required();

  std::string mode;
  std::vector<std::string> trace_args;
  std::size_t letters = 0;
  std::string edges;
  std::size_t max_length = TraceContext::kDefaultMaxLength;
  auto* trace_cmd = app.add_subcommand("trace", "Words in a free partially commutative semigroup");
  trace_cmd->add_option("mode", mode, "nf WORD | eq WORD WORD | map gamma|delta PERMUTATION WORD")->required();
  trace_cmd->add_option("args", trace_args, "Mode arguments");
  trace_cmd->add_option("--letters", letters, "Alphabet size (default: largest letter used)");
  trace_cmd->add_option("--edges", edges, "Commuting letter pairs, e.g. ab,bc");
  trace_cmd->add_option("--max-length", max_length, "Longest word accepted")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*analyze_cmd) return run_analyze(g, file);
    if (*construct_cmd) return run_construct(family, output);
    if (*verify_cmd) return run_verify(g, scale, stretch);
    if (*factor_cmd) return run_factor(g, literal);
    if (*trace_cmd) return run_trace(g, mode, trace_args, letters, edges, max_length);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerificationFailed;
  }
  return kInputError;
}
