#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "semitrans/generator.hpp"
#include "semitrans/harness.hpp"
#include "semitrans/ones_matrix.hpp"
#include "semitrans/orientation.hpp"
#include "semitrans/split_semitrans.hpp"

namespace {

using namespace semitrans;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

// Largest |I| for which a failed recognition is refined into a forbidden
// subgraph witness.
constexpr std::size_t kWitnessSearchLimit = 40;

struct Globals {
  bool machine = false;
  bool verify = true;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// Splits generator output at "# instance" lines; text without separators is
// one instance.
std::vector<std::string> split_instances(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line, current;
  bool any = false;
  while (std::getline(in, line)) {
    if (line.rfind("# instance", 0) == 0) {
      if (any) out.push_back(current);
      current.clear();
      any = true;
      continue;
    }
    current += line;
    current += '\n';
  }
  if (any || out.empty()) out.push_back(current);
  return out;
}

SplitPartition load_partition(const std::string& text) {
  auto file = parse_graph_file(text);
  if (file.clique) return partition_with_clique(file.graph, *file.clique);
  auto p = split_partition(file.graph);
  if (!p) throw std::invalid_argument("graph is not a split graph");
  return *p;
}

void print_ok(const Globals& g, bool yes) {
  std::cout << (g.machine ? "result=" : "") << (yes ? "SEMI-TRANSITIVE" : "NOT-SEMI-TRANSITIVE")
            << '\n';
}

int run_recognize(const Globals& g, const std::string& path) {
  SplitPartition p = load_partition(read_file(path));
  Decision d = recognize(p, {.build_orientation = true, .verify = g.verify});
  if (d.semi_transitive()) {
    if (g.verify) {
      SplitPartition q = normalize_partition(p);
      if (!validate_labeling(q, *d.labeling) || !is_semi_transitive_orientation(*d.orientation)) {
        throw InternalError("certificate failed verification");
      }
    }
  } else if (p.independent.size() <= kWitnessSearchLimit) {
    if (auto w = find_forbidden_subgraph(p.graph)) {
      if (g.verify && !forbidden_witness_holds(p.graph, *w)) {
        throw InternalError("forbidden subgraph witness failed verification");
      }
      d.refutation = w->kind == ForbiddenCase::A   ? RefutationKind::CaseA
                     : w->kind == ForbiddenCase::B ? RefutationKind::CaseB
                                                   : RefutationKind::CaseC;
      d.witness = w->vertices();
    }
  }
  std::cout << format_decision(d, g.machine);
  return d.semi_transitive() ? kExitYes : kExitNo;
}

int run_check_orientation(const Globals& g, const std::string& path) {
  Orientation o = parse_orientation(read_file(path));
  if (!is_acyclic(o)) {
    print_ok(g, false);
    std::cout << (g.machine ? "reason=cycle\n" : "reason: cycle\n");
    return kExitNo;
  }
  auto w = find_shortcut(o);
  print_ok(g, !w);
  if (!w) return kExitYes;
  if (g.verify && !witness_holds(o, *w)) throw InternalError("shortcut witness failed verification");
  std::ostringstream path_text;
  for (std::size_t i = 0; i < w->path.size(); ++i) path_text << (i ? " " : "") << w->path[i];
  if (g.machine) {
    std::cout << "reason=shortcut\npath=" << path_text.str() << "\nclosing=" << w->closing.first
              << '>' << w->closing.second << "\nmissing=" << w->missing.first << ' '
              << w->missing.second << '\n';
  } else {
    std::cout << "shortcut: " << path_text.str() << "\nclosing: " << w->closing.first << " > "
              << w->closing.second << "\nmissing: " << w->missing.first << ' '
              << w->missing.second << '\n';
  }
  return kExitNo;
}

int run_oracle(const Globals& g, const std::string& path, int max_vertices) {
  Graph graph = parse_graph_file(read_file(path)).graph;
  auto o = oracle_semi_transitive(graph, max_vertices);
  print_ok(g, o.has_value());
  if (!o) return kExitNo;
  if (g.verify && !is_semi_transitive_orientation(*o)) {
    throw InternalError("oracle orientation failed verification");
  }
  if (g.machine) {
    std::cout << "orientation=";
    bool first = true;
    for (auto [u, v] : o->arcs()) {
      std::cout << (first ? "" : " ") << u << '>' << v;
      first = false;
    }
    std::cout << '\n';
  } else {
    std::cout << "orientation:\n";
    for (auto [u, v] : o->arcs()) std::cout << u << " > " << v << '\n';
  }
  return kExitYes;
}

int run_ones(const Globals& g, const std::string& path, OnesMode mode) {
  BinaryMatrix m = parse_matrix(read_file(path));
  auto perm = mode == OnesMode::Consecutive ? has_consecutive_ones(m) : has_circular_ones(m);
  if (perm && g.verify) {
    const bool ok = mode == OnesMode::Consecutive ? check_c1p_under_perm(m, *perm)
                                                  : check_circ_under_perm(m, *perm);
    if (!ok) throw InternalError("row permutation failed verification");
  }
  std::cout << (g.machine ? "certificate=" : "") << format_certificate(perm) << '\n';
  return perm ? kExitYes : kExitNo;
}

int run_forbidden(const Globals& g, const std::string& path) {
  Graph graph = parse_graph_file(read_file(path)).graph;
  auto w = find_forbidden_subgraph(graph);
  if (!w) {
    std::cout << (g.machine ? "witness=none\n" : "none\n");
    return kExitYes;
  }
  if (g.verify && !forbidden_witness_holds(graph, *w)) {
    throw InternalError("forbidden subgraph witness failed verification");
  }
  std::ostringstream verts;
  auto vs = w->vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) verts << (i ? " " : "") << vs[i];
  if (g.machine) {
    std::cout << "witness=" << case_tag(w->kind) << "\nwitness_vertices=" << verts.str() << '\n';
  } else {
    std::cout << case_tag(w->kind) << ' ' << verts.str() << '\n';
  }
  return kExitNo;
}

struct GenArgs {
  GenSpec spec;
  std::string mode = "random";
  std::size_t count = 1;
};

void add_gen_options(CLI::App* cmd, GenArgs& args) {
  cmd->add_option("--k", args.spec.k, "clique size")->check(CLI::NonNegativeNumber);
  cmd->add_option("--t", args.spec.t, "independent-set size")->check(CLI::NonNegativeNumber);
  cmd->add_option("--density", args.spec.density, "I-C adjacency probability")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--seed", args.spec.seed, "64-bit seed");
  cmd->add_option("--mode", args.mode, "random | exhaustive | planted-yes | planted-no");
  cmd->add_option("--count", args.count, "number of instances");
}

// "k=4,t=3,density=0.5,seed=1,mode=random,count=100"
void apply_spec_string(const std::string& text, GenArgs& args) {
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad --spec item '" + item + "'");
    const std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    if (key == "k") {
      args.spec.k = std::stoi(value);
    } else if (key == "t") {
      args.spec.t = std::stoi(value);
    } else if (key == "density") {
      args.spec.density = std::stod(value);
    } else if (key == "seed") {
      args.spec.seed = std::stoull(value);
    } else if (key == "mode") {
      args.mode = value;
    } else if (key == "count") {
      args.count = std::stoull(value);
    } else {
      throw std::invalid_argument("unknown --spec key '" + key + "'");
    }
  }
}

int run_gen(GenArgs args, const std::string& out_dir) {
  args.spec.mode = parse_gen_mode(args.mode);
  auto corpus = generate(args.spec, args.count);
  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& p = corpus[i];
    std::string text = format_graph(p.graph, std::span<const int>(p.clique));
    if (out_dir.empty()) {
      std::cout << "# instance " << i << '\n' << text;
    } else {
      std::ofstream(std::filesystem::path(out_dir) / ("instance_" + std::to_string(i) + ".txt"))
          << text;
    }
  }
  return kExitYes;
}

int run_difftest(GenArgs args, const std::string& spec_text,
                 const std::vector<std::string>& inputs, const std::string& methods,
                 bool timings) {
  DiffOptions options;
  options.methods = parse_methods(methods);
  DiffReport report;
  if (!inputs.empty()) {
    std::vector<SplitPartition> corpus;
    for (const auto& path : inputs) {
      for (const auto& text : split_instances(read_file(path))) corpus.push_back(load_partition(text));
    }
    report = difftest(corpus, options);
  } else {
    if (!spec_text.empty()) apply_spec_string(spec_text, args);
    args.spec.mode = parse_gen_mode(args.mode);
    report = difftest(args.spec, args.count, options);
  }
  std::cout << report.format(timings);
  return report.ok() ? kExitYes : kExitNo;
}

int run_bench(const std::vector<int>& ks, const std::vector<int>& ts, int reps,
              std::uint64_t seed) {
  std::cout << bench(ks, ts, reps, seed).format();
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semi-transitive orientations of split graphs"};
  app.require_subcommand(1);
  Globals globals;
  app.add_flag("--machine", globals.machine, "key=value output");
  app.add_flag("--verify,!--no-verify", globals.verify,
               "re-check every certificate before printing (default on)");

  std::string path;
  auto* recognize_cmd = app.add_subcommand("recognize", "decide a split graph");
  recognize_cmd->add_option("graph-file", path)->required();

  auto* check_cmd = app.add_subcommand("check-orientation", "check an orientation");
  check_cmd->add_option("orientation-file", path)->required();

  int max_vertices = 12;
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force orientation search");
  oracle_cmd->add_option("graph-file", path)->required();
  oracle_cmd->add_option("--max-vertices", max_vertices, "size guard")->check(CLI::Range(0, 64));

  auto* c1p_cmd = app.add_subcommand("c1p", "consecutive-ones row order");
  c1p_cmd->add_option("matrix-file", path)->required();
  auto* circ_cmd = app.add_subcommand("circ1p", "circular-ones row order");
  circ_cmd->add_option("matrix-file", path)->required();

  auto* forbidden_cmd = app.add_subcommand("forbidden", "search the three forbidden subgraphs");
  forbidden_cmd->add_option("graph-file", path)->required();

  GenArgs gen_args;
  std::string out_dir;
  auto* gen_cmd = app.add_subcommand("gen", "generate split graphs");
  add_gen_options(gen_cmd, gen_args);
  gen_cmd->add_option("--out", out_dir, "write one file per instance into this directory");

  GenArgs diff_args;
  diff_args.count = 100;
  std::string spec_text, methods = "recognize,labeling-oracle,orientation-oracle";
  std::vector<std::string> inputs;
  bool timings = false;
  auto* diff_cmd = app.add_subcommand("difftest", "compare deciders on a corpus");
  add_gen_options(diff_cmd, diff_args);
  diff_cmd->add_option("--spec", spec_text, "k=..,t=..,density=..,seed=..,mode=..,count=..");
  diff_cmd->add_option("--input", inputs, "graph files instead of a generated corpus");
  diff_cmd->add_option("--methods", methods, "comma-separated subset of the deciders");
  diff_cmd->add_flag("--timings", timings, "append per-method timing quantiles");

  std::vector<int> bench_k{250, 500, 1000, 2000}, bench_t{25, 50, 100, 200};
  int reps = 3;
  std::uint64_t bench_seed = 1;
  auto* bench_cmd = app.add_subcommand("bench", "time recognize over a size grid");
  bench_cmd->add_option("--k", bench_k, "clique sizes")->delimiter(',');
  bench_cmd->add_option("--t", bench_t, "independent-set sizes")->delimiter(',');
  bench_cmd->add_option("--reps", reps, "repetitions per cell")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench_seed, "64-bit seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*recognize_cmd) return run_recognize(globals, path);
    if (*check_cmd) return run_check_orientation(globals, path);
    if (*oracle_cmd) return run_oracle(globals, path, max_vertices);
    if (*c1p_cmd) return run_ones(globals, path, OnesMode::Consecutive);
    if (*circ_cmd) return run_ones(globals, path, OnesMode::Circular);
    if (*forbidden_cmd) return run_forbidden(globals, path);
    if (*gen_cmd) return run_gen(gen_args, out_dir);
    if (*diff_cmd) return run_difftest(diff_args, spec_text, inputs, methods, timings);
    if (*bench_cmd) return run_bench(bench_k, bench_t, reps, bench_seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
