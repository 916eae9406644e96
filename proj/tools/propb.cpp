// propb: build, verify and bound non-2-colorable uniform hypergraphs.
//
// Exit codes: 0 ok, 1 usage or input error, 2 hypergraph is 2-colorable,
// 3 search budget exhausted, 4 generated count disagrees with prediction.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "propb/propb.hpp"

namespace {

enum Exit : int { kOk = 0, kUsage = 1, kColorable = 2, kUnknown = 3, kMismatch = 4 };

// Writes through a sibling temporary file so readers never see a partial result.
template <class F>
void write_atomically(const std::string& path, F&& body) {
  const std::string tmp = path + ".part";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open " + tmp + " for writing");
    body(os);
    os.flush();
    if (!os) throw std::runtime_error("write failed: " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

void print_recipe_error(const std::string& text, const propb::RecipeError& e) {
  std::cerr << "error: " << e.what() << '\n' << "  " << text << '\n' << "  " << std::string(e.offset(), ' ') << "^\n";
}

int cmd_construct(const std::string& text, const std::string& out, bool predict_only) {
  const propb::Recipe r = propb::parse_recipe(text);
  const propb::Prediction p = propb::predict(r);
  std::cout << "recipe      " << propb::to_string(r) << '\n'
            << "uniformity  " << p.uniformity << '\n'
            << "predicted   " << p.count << (p.exact ? " (exact)" : " (upper bound)") << '\n';
  if (predict_only) {
    std::cout << "vertices    " << p.vertices << " (predicted)\n";
    return kOk;
  }
  const propb::Hypergraph h = propb::build_recipe(text);
  std::cout << "vertices    " << h.num_vertices() << '\n' << "edges       " << h.num_edges() << '\n';
  const propb::BigInt got = h.num_edges();
  const bool ok = p.exact ? got == p.count : got <= p.count;
  if (!ok) {
    std::cerr << "error: generated " << got << " edges, predicted " << p.count << '\n';
    return kMismatch;
  }
  std::cout << "check       ok\n";
  if (!out.empty()) {
    write_atomically(out, [&](std::ostream& os) { propb::write_hg(os, h); });
    std::cout << "wrote       " << out << '\n';
  }
  return kOk;
}

int cmd_verify(const std::string& in, std::uint64_t nodes, double seconds, const std::string& engine_name) {
  const propb::Hypergraph h = propb::read_hg_file(in);
  propb::SolveBudget budget;
  if (nodes) budget.max_nodes = nodes;
  if (seconds > 0) budget.max_seconds = std::chrono::duration<double>(seconds);
  static const std::map<std::string, propb::Engine> engines = {
      {"auto", propb::Engine::Auto}, {"exhaustive", propb::Engine::Exhaustive}, {"backtracking", propb::Engine::Backtracking}};
  const propb::ColorabilityVerdict v = propb::decide(h, budget, engines.at(engine_name));
  std::cout << "verdict  " << propb::to_string(v.kind) << '\n'
            << "engine   " << (v.stats.engine == propb::Engine::Exhaustive ? "exhaustive" : "backtracking") << '\n'
            << "nodes    " << v.stats.nodes << '\n'
            << "seconds  " << v.stats.elapsed.count() << '\n';
  switch (v.kind) {
    case propb::VerdictKind::NonColorable: return kOk;
    case propb::VerdictKind::Colorable:
      std::cout << "witness  " << propb::to_string(*v.witness) << '\n'
                << "audit    " << (propb::verify_witness(h, *v.witness) ? "ok" : "FAILED") << '\n';
      return kColorable;
    case propb::VerdictKind::Unknown: return kUnknown;
  }
  return kUsage;
}

int cmd_export_cnf(const std::string& in, const std::string& out) {
  const propb::Hypergraph h = propb::read_hg_file(in);
  write_atomically(out, [&](std::ostream& os) { propb::write_nae_cnf(os, h); });
  std::cout << "variables " << h.num_vertices() << "\nclauses   " << 2 * h.num_edges() << '\n';
  return kOk;
}

int cmd_info(const std::string& in) {
  const propb::Hypergraph h = propb::read_hg_file(in);
  const auto deg = h.degrees();
  std::map<std::size_t, std::size_t> hist;
  for (auto d : deg) ++hist[d];
  std::cout << "uniformity " << h.uniformity() << '\n'
            << "vertices   " << h.num_vertices() << '\n'
            << "edges      " << h.num_edges() << '\n';
  if (!deg.empty()) {
    std::cout << "degree min " << *std::min_element(deg.begin(), deg.end()) << '\n'
              << "degree max " << *std::max_element(deg.begin(), deg.end()) << '\n';
  }
  std::cout << "degrees   ";
  for (const auto& [d, c] : hist) std::cout << ' ' << d << 'x' << c;
  std::cout << '\n';
  return kOk;
}

int cmd_lower(int n, bool tsv) {
  if (n == 5) {
    const propb::Certificate c = propb::m5_certificate();
    const auto g = propb::goldberg_lower(5);
    if (tsv) {
      std::cout << propb::render_tsv(g.certificate) << propb::render_tsv(c);
    } else {
      std::cout << "min-max scan: " << g.certificate.claim << " (x = " << g.x << ")\n" << propb::render_text(c);
    }
    return c.valid ? kOk : kUsage;
  }
  const auto g = propb::goldberg_lower(n, 100000);
  std::cout << (tsv ? propb::render_tsv(g.certificate) : propb::render_text(g.certificate));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-2-colorable uniform hypergraphs: constructions, verification and bounds"};
  app.require_subcommand(1);

  std::string recipe, in, out, engine = "auto";
  bool predict_only = false, legacy = false, tsv = false;
  std::uint64_t budget_nodes = 0;
  double budget_seconds = 0;
  int lower_n = 5;

  auto* construct = app.add_subcommand("construct", "Generate a hypergraph from a recipe");
  construct->add_option("-r,--recipe", recipe, "Recipe, e.g. \"aht(fano)\" or \"preset(m13)\"")->required();
  construct->add_option("-o,--output", out, "Write the hypergraph in .hg format");
  construct->add_flag("--predict-only", predict_only, "Report the closed-form counts without generating");

  auto* verify = app.add_subcommand("verify", "Decide 2-colorability of a .hg file");
  verify->add_option("-i,--input", in, "Input .hg file")->required()->check(CLI::ExistingFile);
  verify->add_option("--budget-nodes", budget_nodes, "Stop after this many search nodes");
  verify->add_option("--budget-seconds", budget_seconds, "Stop after this many seconds");
  verify->add_option("--engine", engine, "auto, exhaustive or backtracking")
      ->check(CLI::IsMember({"auto", "exhaustive", "backtracking"}));

  auto* cnf = app.add_subcommand("export-cnf", "Write the NAE-SAT encoding as DIMACS CNF");
  cnf->add_option("-i,--input", in, "Input .hg file")->required()->check(CLI::ExistingFile);
  cnf->add_option("-o,--output", out, "Output .cnf file")->required();

  auto* bounds = app.add_subcommand("bounds", "Print the upper-bound table for m(1)..m(17)");
  bounds->add_flag("--legacy", legacy, "Bounds before the multi-core and modified block constructions");
  bounds->add_flag("--tsv", tsv, "Tab-separated output");

  auto* lower = app.add_subcommand("lower", "Print a lower-bound certificate");
  lower->add_option("--n", lower_n, "Uniformity (5 gives the full case analysis)")->check(CLI::Range(4, 18));
  lower->add_flag("--tsv", tsv, "Tab-separated output");

  auto* info = app.add_subcommand("info", "Summarize a .hg file");
  info->add_option("-i,--input", in, "Input .hg file")->required()->check(CLI::ExistingFile);

  auto* list = app.add_subcommand("presets", "List the preset recipes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*construct) return cmd_construct(recipe, out, predict_only);
    if (*verify) return cmd_verify(in, budget_nodes, budget_seconds, engine);
    if (*cnf) return cmd_export_cnf(in, out);
    if (*bounds) {
      const propb::BoundTable t = legacy ? propb::legacy_table() : propb::build_paper_table();
      std::cout << (tsv ? propb::format_table_tsv(t) : propb::format_table(t));
      return kOk;
    }
    if (*lower) return cmd_lower(lower_n, tsv);
    if (*info) return cmd_info(in);
    if (*list) {
      for (int i = 1; i <= 17; ++i) {
        const std::string name = "m" + std::to_string(i);
        std::cout << name << '\t' << propb::presets().at(name) << '\n';
      }
      return kOk;
    }
  } catch (const propb::RecipeError& e) {
    print_recipe_error(recipe, e);
    return kUsage;
  } catch (const propb::CountMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
