#include "ipcover/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "ipcover/constructors.hpp"
#include "ipcover/error.hpp"
#include "ipcover/formulas.hpp"
#include "ipcover/solver.hpp"

namespace ipcover::cli {
namespace {

struct Options {
  std::string multipartite;
  std::string hamming;
  std::string augmented;
  std::string pairs;
  int complete = 0;
  std::string output;
  std::string dot;
  std::string graph_file;
  std::string cover_file;
  bool strict = false;
  bool labeled = false;
  bool count_only = false;
  std::uint64_t budget = kDefaultNodeBudget;
  int max_n = 8;
  int max_hamming = 12;
};

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  return out;
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read graph file '" + path + "'");
  return read_graph(in);
}

/// Hamming spec recorded in a graph's "hamming a,b,c" description, if any.
std::optional<HammingSpec> hamming_from_description(const Graph& g) {
  std::istringstream in(g.description());
  std::string tag, factors;
  if (in >> tag >> factors && tag == "hamming") return HammingSpec(parse_int_list(factors));
  return std::nullopt;
}

int count_families(const Options& o) {
  return !o.multipartite.empty() + !o.hamming.empty() + !o.augmented.empty() + (o.complete > 0);
}

int cmd_gen(const Options& o, std::ostream& out) {
  if (count_families(o) != 1 || o.complete > 0) {
    throw InvalidInput("gen needs exactly one of --multipartite, --hamming, --augmented");
  }
  Graph g;
  if (!o.multipartite.empty()) {
    g = make_complete_multipartite(PartiteSpec(parse_int_list(o.multipartite)));
  } else if (!o.hamming.empty()) {
    g = make_hamming(HammingSpec(parse_int_list(o.hamming)));
  } else {
    g = make_augmented_multipartite(PartiteSpec(parse_int_list(o.augmented)),
                                    parse_pairings(o.pairs));
  }
  if (o.output.empty()) {
    write_graph(out, g);
  } else {
    auto file = open_output(o.output);
    write_graph(file, g);
  }
  if (!o.dot.empty()) {
    auto file = open_output(o.dot);
    write_dot(file, g);
  }
  return kOk;
}

int cmd_formula(const Options& o, std::ostream& out) {
  if (count_families(o) != 1 || !o.augmented.empty()) {
    throw InvalidInput("formula needs exactly one of --multipartite, --hamming, --complete");
  }
  FormulaResult r;
  if (!o.multipartite.empty()) {
    r = ip_multipartite(PartiteSpec(parse_int_list(o.multipartite)));
  } else if (!o.hamming.empty()) {
    r = ip_hamming(HammingSpec(parse_int_list(o.hamming)));
  } else {
    r = {ip_complete(o.complete), FormulaCase::Complete, {o.complete}};
  }
  out << "ip=" << r.value << " case=" << to_string(r.case_tag) << '\n';
  return kOk;
}

int cmd_construct(const Options& o, std::ostream& out) {
  if (count_families(o) != 1 || !o.augmented.empty()) {
    throw InvalidInput("construct needs exactly one of --multipartite, --hamming, --complete");
  }
  Graph g;
  Cover cover;
  std::optional<HammingSpec> spec;
  VerifyOptions verify_options;
  if (!o.multipartite.empty()) {
    PartiteSpec p(parse_int_list(o.multipartite));
    g = make_complete_multipartite(p);
    cover = cover_multipartite(p);
    verify_options.strict_normal_form = true;
  } else if (!o.hamming.empty()) {
    spec = HammingSpec(parse_int_list(o.hamming));
    g = make_hamming(*spec);
    cover = cover_hamming(*spec);
  } else {
    g = make_hamming(HammingSpec({o.complete}));
    cover = cover_complete(o.complete);
  }
  const auto report = verify_cover(g, cover, verify_options);
  if (!report.valid) throw InternalError("constructed cover failed verification");

  auto write = [&](std::ostream& stream) {
    if (o.labeled && spec) write_labeled_cover(stream, cover, *spec);
    else write_cover(stream, cover);
  };
  if (o.output.empty()) {
    write(out);
  } else {
    auto file = open_output(o.output);
    write(file);
    out << "size=" << cover.size() << '\n';
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph_file);
  std::optional<HammingSpec> spec;
  if (!o.hamming.empty()) spec = HammingSpec(parse_int_list(o.hamming));
  else spec = hamming_from_description(g);
  std::ifstream in(o.cover_file, std::ios::binary);
  if (!in) throw InvalidInput("cannot read cover file '" + o.cover_file + "'");
  const Cover cover = read_cover(in, spec);
  const auto report = verify_cover(g, cover, {.strict_normal_form = o.strict});
  write_report(out, g, report);
  if (!o.dot.empty()) {
    std::vector<std::vector<Vertex>> paths;
    for (const auto& p : cover.paths) paths.push_back(p.vertices);
    auto file = open_output(o.dot);
    write_dot(file, g, paths);
  }
  return report.valid ? kOk : kUnproven;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph_file);
  if (!g.is_connected()) throw DisconnectedGraph("solve needs a connected graph");
  const auto result = solve_min_cover(g, {.node_budget = o.budget});
  out << "size=" << result.size << '\n';
  out << "nodes=" << result.nodes_explored
      << " optimal=" << (result.proof_of_optimality ? "true" : "false") << '\n';
  if (!o.output.empty()) {
    auto file = open_output(o.output);
    write_cover(file, result.optimum);
  }
  return result.proof_of_optimality ? kOk : kUnproven;
}

int cmd_paths(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph_file);
  const auto pool = enumerate_isometric_paths(g);
  if (o.count_only) {
    out << "count=" << pool.size() << '\n';
    return kOk;
  }
  for (const auto& p : pool.paths()) {
    for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << p.vertices[i];
    out << '\n';
  }
  return kOk;
}

void all_partitions(int n, int max_part, std::vector<int>& prefix,
                    std::vector<std::vector<int>>& out) {
  if (n == 0) {
    if (prefix.size() >= 2) out.push_back(prefix);
    return;
  }
  for (int s = std::min(n, max_part); s >= 1; --s) {
    prefix.push_back(s);
    all_partitions(n - s, s, prefix, out);
    prefix.pop_back();
  }
}

int cmd_selftest(const Options& o, std::ostream& out) {
  int passed = 0, failed = 0;
  auto row = [&](const std::string& family, const std::vector<int>& sizes, int formula,
                 const SolveResult& r) {
    const bool ok = r.proof_of_optimality && static_cast<int>(r.size) == formula &&
                    static_cast<int>(r.optimum.size()) == formula;
    (ok ? passed : failed)++;
    out << family << ' ' << join_ints(sizes) << " formula=" << formula << " solver=" << r.size
        << (r.proof_of_optimality ? "" : "?") << ' ' << (ok ? "PASS" : "FAIL") << '\n';
  };

  for (int n = 2; n <= o.max_n; ++n) {
    std::vector<int> prefix;
    std::vector<std::vector<int>> specs;
    all_partitions(n, n, prefix, specs);
    for (const auto& sizes : specs) {
      const PartiteSpec spec(sizes);
      row("multipartite", sizes, ip_multipartite(spec).value,
          solve_min_cover(make_complete_multipartite(spec), {.node_budget = o.budget}));
    }
  }
  std::vector<std::vector<int>> hamming;
  for (int a = 2; a <= o.max_hamming / 2; ++a) {
    for (int b = a; a * b <= o.max_hamming; ++b) hamming.push_back({a, b});
  }
  for (int a = 2; a * a * a <= o.max_hamming; ++a) {
    for (int b = a; a * b * b <= o.max_hamming; ++b) {
      for (int c = b; a * b * c <= o.max_hamming; ++c) hamming.push_back({a, b, c});
    }
  }
  std::sort(hamming.begin(), hamming.end());
  for (const auto& f : hamming) {
    const HammingSpec spec(f);
    row("hamming", f, ip_hamming(spec).value,
        solve_min_cover(make_hamming(spec), {.node_budget = o.budget}));
  }
  out << "passed=" << passed << " failed=" << failed << '\n';
  return failed == 0 ? kOk : kUnproven;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Isometric path covers of complete multipartite and Hamming graphs", "ipcover"};
  app.require_subcommand(1);
  Options o;

  auto add_family = [&](CLI::App* sub, bool complete) {
    sub->add_option("--multipartite", o.multipartite, "Part sizes, e.g. 3,3,2");
    sub->add_option("--hamming", o.hamming, "Factor sizes, e.g. 3,3,4");
    if (complete) sub->add_option("--complete", o.complete, "Order of a complete graph");
  };

  auto* gen = app.add_subcommand("gen", "Write a family graph in the graph text format");
  add_family(gen, false);
  gen->add_option("--augmented", o.augmented, "Part sizes of an augmented multipartite graph");
  gen->add_option("--pairs", o.pairs, "Non-adjacent pairs per part, e.g. \"0-1,2-3;0-1\"");
  gen->add_option("-o,--output", o.output, "Output file (default stdout)");
  gen->add_option("--dot", o.dot, "Also write a Graphviz rendering");

  auto* formula = app.add_subcommand("formula", "Print the closed-form isometric path number");
  add_family(formula, true);

  auto* construct = app.add_subcommand("construct", "Build and verify an optimal cover");
  add_family(construct, true);
  construct->add_option("-o,--output", o.output, "Cover file (default stdout)");
  construct->add_flag("--labeled", o.labeled, "Write Hamming coordinate tuples");

  auto* verify = app.add_subcommand("verify", "Check a cover certificate against a graph");
  verify->add_option("-g,--graph", o.graph_file, "Graph file")->required();
  verify->add_option("-c,--cover", o.cover_file, "Cover file")->required();
  verify->add_option("--hamming", o.hamming, "Factors for labeled covers");
  verify->add_flag("--strict", o.strict, "Require multipartite normal form");
  verify->add_option("--dot", o.dot, "Write a Graphviz rendering with the paths colored");

  auto* solve = app.add_subcommand("solve", "Exact minimum cover by branch and bound");
  solve->add_option("-g,--graph", o.graph_file, "Graph file")->required();
  solve->add_option("--budget", o.budget, "Branch node limit");
  solve->add_option("-o,--output", o.output, "Write the optimum cover here");

  auto* paths = app.add_subcommand("paths", "Enumerate all isometric paths");
  paths->add_option("-g,--graph", o.graph_file, "Graph file")->required();
  paths->add_flag("--count-only", o.count_only, "Print only the pool size");

  auto* selftest = app.add_subcommand("selftest", "Compare formulas with the exact solver");
  selftest->add_option("--max-n", o.max_n, "Largest multipartite order");
  selftest->add_option("--max-hamming", o.max_hamming, "Largest Hamming order");
  selftest->add_option("--budget", o.budget, "Branch node limit per instance");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (formula->parsed()) return cmd_formula(o, out);
    if (construct->parsed()) return cmd_construct(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (solve->parsed()) return cmd_solve(o, out);
    if (paths->parsed()) return cmd_paths(o, out);
    if (selftest->parsed()) return cmd_selftest(o, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kUnproven;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInvalidInput;
}

}  // namespace ipcover::cli
