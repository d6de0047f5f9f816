// Development tool for the base-cover fixtures.
//
//   gen_fixtures --table        regenerate src/base_covers_multipartite.cpp
//                               from the exact solver (printed to stdout)
//   gen_fixtures --write DIR    write every stored base cover to DIR

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ipcover/constructors.hpp"
#include "ipcover/formulas.hpp"
#include "ipcover/solver.hpp"

namespace {

using namespace ipcover;

// All non-increasing size vectors with at least two parts and sum n.
void partitions(int n, int max_part, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    if (prefix.size() >= 2) out.push_back(prefix);
    return;
  }
  for (int s = std::min(n, max_part); s >= 1; --s) {
    prefix.push_back(s);
    partitions(n - s, s, prefix, out);
    prefix.pop_back();
  }
}

int emit_table() {
  std::vector<std::vector<int>> specs;
  for (int n = 2; n <= 8; ++n) {
    std::vector<int> prefix;
    std::vector<std::vector<int>> level;
    partitions(n, n, prefix, level);
    // Ascending n, then lexicographically descending sizes.
    specs.insert(specs.end(), level.begin(), level.end());
  }

  std::cout << "// Generated by tools/gen_fixtures --table; do not edit by hand.\n"
               "//\n"
               "// Minimum covers found by the exact solver for every balanced complete\n"
               "// multipartite graph on at most 8 vertices, rewritten into normal form.\n"
               "\n#include \"base_covers.hpp\"\n\nnamespace ipcover::detail {\n\n"
               "const std::vector<MultipartiteFixture>& multipartite_fixtures() {\n"
               "  static const std::vector<MultipartiteFixture> fixtures = {\n";
  for (const auto& sizes : specs) {
    const PartiteSpec spec(sizes);
    if (classify_multipartite(spec) != FormulaCase::Balanced) continue;
    const Graph g = make_complete_multipartite(spec);
    auto result = solve_min_cover(g);
    Cover cover = normalize_multipartite_cover(g, result.optimum);
    const auto report = verify_cover(g, cover, {.strict_normal_form = true});
    if (!result.proof_of_optimality || !report.valid ||
        static_cast<int>(cover.size()) != ip_multipartite(spec).value) {
      std::cerr << "fixture for " << join_ints(sizes) << " failed\n";
      return 3;
    }
    std::string text;
    for (const auto& p : cover.paths) {
      for (std::size_t i = 0; i < p.size(); ++i) {
        text += std::to_string(p.vertices[i]);
        text += i + 1 < p.size() ? " " : "\\n";
      }
    }
    std::cout << "      {{" << join_ints(sizes, ',') << "}, \"" << text << "\"},\n";
  }
  std::cout << "  };\n  return fixtures;\n}\n\n}  // namespace ipcover::detail\n";
  return 0;
}

int write_fixtures(const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& key : base_cover_keys()) {
    std::ofstream out(std::filesystem::path(dir) / fixture_name(key));
    write_cover(out, base_cover_lookup(key.family, key.sizes));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Base-cover fixture generator"};
  bool table = false;
  std::string dir;
  app.add_flag("--table", table, "Print the multipartite fixture source");
  app.add_option("--write", dir, "Write fixture files into this directory");
  CLI11_PARSE(app, argc, argv);
  try {
    if (table) return emit_table();
    if (!dir.empty()) return write_fixtures(dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  std::cerr << app.help();
  return 1;
}
