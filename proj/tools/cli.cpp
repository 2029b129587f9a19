// Copyright 2026 The TrussLab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "trusslab/approx_truss.hpp"
#include "trusslab/bench.hpp"
#include "trusslab/edge_list_io.hpp"
#include "trusslab/exact_truss.hpp"
#include "trusslab/gadgets.hpp"
#include "trusslab/random_graph.hpp"
#include "trusslab/triangles.hpp"

namespace trusslab {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input = "-";
  std::string out_path;
  std::string format = "edgelist";
  double epsilon = 0.5;
  double zeta = 110.0;
  std::uint64_t seed = 0;
  bool pseudocode_growth = false;
  bool report = false;
  bool exact_order = false;
  std::size_t q = 2;
  std::size_t x = 1;
  std::size_t side = 1;
  std::size_t n = 0;
  double p = 0.0;

  std::string corpus;
  std::vector<std::string> estimators{"exact"};
  std::vector<double> epsilon_grid{0.5};
  std::vector<double> zeta_grid{110.0};
  std::vector<std::uint64_t> seeds;
  std::size_t seed_count = 1;
  bool no_timing = false;
};

// State shared by a command handler: where the input comes from and what
// goes into the run report.
struct Context {
  const Options& opt;
  std::istream& in;
  std::ostringstream body;
  json report;

  LabeledGraph load() {
    LabeledGraph g = opt.input == "-" ? read_edge_list(in) : read_edge_list_file(opt.input);
    report["n"] = g.graph.node_count();
    report["m"] = g.graph.edge_count();
    return g;
  }
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

void emit_graph(Context& ctx, const Graph& g, const std::vector<bool>& spurious = {}) {
  if (ctx.opt.format != "edgelist") throw UsageError("unsupported format '" + ctx.opt.format + "'");
  write_edge_list(ctx.body, g, spurious);
  ctx.report["n"] = g.node_count();
  ctx.report["m"] = g.edge_count();
}

SamplerConfig sampler_config(const Options& opt) {
  SamplerConfig cfg;
  cfg.epsilon = opt.epsilon;
  cfg.zeta = opt.zeta;
  cfg.seed = opt.seed;
  return cfg;
}

void cmd_truss_exact(Context& ctx) {
  const auto g = ctx.load();
  const auto t = trussness(g.graph);
  ctx.body << t << '\n';
  ctx.report["result"] = t;
}

void cmd_truss_decompose(Context& ctx) {
  const auto g = ctx.load();
  const auto dec = truss_decomposition(g.graph).first;
  for (EdgeId e = 0; e < g.graph.edge_count(); ++e) {
    const Edge uv = g.graph.endpoints(e);
    ctx.body << uv.u << ' ' << uv.v << ' ' << dec.edge_trussness[e] << '\n';
  }
  ctx.report["result"] = dec.trussness;
}

void cmd_truss_approx(Context& ctx) {
  const auto g = ctx.load();
  const EstimateResult r = estimate_trussness(
      g.graph, ctx.opt.epsilon, sampler_config(ctx.opt),
      ctx.opt.pseudocode_growth ? Growth::kPseudocode : Growth::kProof);
  ctx.body << to_string(r.estimate) << '\n'
           << "exact_flag " << yes_no(r.exact_flag) << '\n'
           << "iterations " << r.iterations << '\n'
           << "last_marked_x " << r.last_marked_x << '\n'
           << "x_cap_reached " << yes_no(r.hit_x_cap) << '\n'
           << "round x marked p fallback hyperedges\n";
  for (std::size_t i = 0; i < r.trace.size(); ++i) {
    const auto& round = r.trace[i];
    ctx.body << i << ' ' << round.x << ' ' << round.spurious_first << ' '
             << fmt(round.realized_p) << ' ' << round.fell_back_to_exact << ' '
             << round.hyperedges << '\n';
  }
  ctx.report["result"] = to_string(r.estimate);
}

void cmd_truss_threshold(Context& ctx) {
  const auto g = ctx.load();
  const ThresholdResult r = threshold_estimate(g.graph, ctx.opt.epsilon);
  ctx.body << to_string(r.estimate) << '\n' << "round m T\n";
  for (std::size_t i = 0; i < r.rounds.size(); ++i) {
    ctx.body << i << ' ' << r.rounds[i].edges << ' ' << r.rounds[i].triangles << '\n';
  }
  ctx.report["result"] = to_string(r.estimate);
}

void cmd_triangles_count(Context& ctx) {
  const auto g = ctx.load();
  const auto t = count_triangles(g.graph);
  ctx.body << t << '\n';
  ctx.report["triangles"] = t;
  ctx.report["result"] = t;
}

void cmd_triangles_list(Context& ctx) {
  const auto g = ctx.load();
  auto tris = collect_triangles(g.graph);
  std::sort(tris.begin(), tris.end());
  for (const auto& t : tris) {
    ctx.body << t.nodes[0] << ' ' << t.nodes[1] << ' ' << t.nodes[2] << '\n';
  }
  ctx.report["triangles"] = tris.size();
  ctx.report["result"] = tris.size();
}

void cmd_order(Context& ctx) {
  const auto g = ctx.load();
  if (ctx.opt.exact_order) {
    const EdgeOrder ord = truss_decomposition(g.graph).second;
    ctx.body << "# exact\nposition edge u v forward_support\n";
    for (std::size_t i = 0; i < ord.order.size(); ++i) {
      const Edge uv = g.graph.endpoints(ord.order[i]);
      ctx.body << i << ' ' << ord.order[i] << ' ' << uv.u << ' ' << uv.v << ' '
               << ord.forward_support[i] << '\n';
    }
    return;
  }
  const ApproxTrussOrder ord = approx_truss_order(g.graph, sampler_config(ctx.opt));
  ctx.body << "# p=" << fmt(ord.sample.realized_p) << " fallback=" << ord.sample.fell_back_to_exact
           << " hyperedges=" << ord.sample.hyperedges.size() << '\n'
           << "position edge u v sampled_forward_degree\n";
  for (std::size_t i = 0; i < ord.order.size(); ++i) {
    const Edge uv = g.graph.endpoints(ord.order[i]);
    ctx.body << i << ' ' << ord.order[i] << ' ' << uv.u << ' ' << uv.v << ' '
             << ord.sampled_forward_degree[i] << '\n';
  }
}

void cmd_sample(Context& ctx) {
  const auto g = ctx.load();
  const DegeneracyInfo d = degeneracy_order(g.graph);
  const HypergraphSample s = sample_hypergraph(g.graph, d, sampler_config(ctx.opt));
  ctx.body << "# p=" << fmt(s.realized_p) << " fallback=" << s.fell_back_to_exact
           << " hyperedges=" << s.hyperedges.size() << " doublings=" << s.doublings << '\n';
  for (const auto& h : s.hyperedges) ctx.body << h[0] << ' ' << h[1] << ' ' << h[2] << '\n';
  ctx.report["result"] = s.hyperedges.size();
}

void cmd_gadget_blowup(Context& ctx) {
  const auto g = ctx.load();
  emit_graph(ctx, materialize(blowup(g.graph, ctx.opt.q)));
}

void cmd_gadget_spurious(Context& ctx) {
  const auto g = ctx.load();
  const AugmentedGraph aug = add_spurious_cliques(g.graph, ctx.opt.x);
  emit_graph(ctx, aug.graph, aug.spurious);
}

void cmd_gadget_ladder(Context& ctx) { emit_graph(ctx, ladder_gadget(ctx.opt.x).graph); }

void cmd_gadget_bipartite_apex(Context& ctx) { emit_graph(ctx, bipartite_apex(ctx.opt.side)); }

void cmd_gen_random(Context& ctx) { emit_graph(ctx, gen_random(ctx.opt.n, ctx.opt.p, ctx.opt.seed)); }

std::size_t bench_threads() {
  std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("TRUSSLAB_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(cap, &end, 10);
    if (end == cap || *end != '\0' || v == 0) {
      throw UsageError("TRUSSLAB_THREADS must be a positive integer");
    }
    threads = std::min<std::size_t>(threads, v);
  }
  return threads;
}

void cmd_bench(Context& ctx) {
  const Options& opt = ctx.opt;
  BenchConfig cfg;
  cfg.estimators.clear();
  for (const auto& name : opt.estimators) cfg.estimators.push_back(parse_estimator(name));
  cfg.epsilons = opt.epsilon_grid;
  cfg.zetas = opt.zeta_grid;
  if (!opt.seeds.empty()) {
    cfg.seeds = opt.seeds;
  } else {
    cfg.seeds.clear();
    for (std::size_t i = 0; i < opt.seed_count; ++i) cfg.seeds.push_back(opt.seed + i);
  }
  cfg.pseudocode_growth = opt.pseudocode_growth;
  cfg.timing = !opt.no_timing;
  cfg.threads = bench_threads();
  const auto corpus = read_corpus_file(opt.corpus);
  write_bench_csv(ctx.body, run_bench(corpus, cfg), cfg);
  ctx.report["graphs"] = corpus.size();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  Options opt;
  CLI::App app{"trusslab: exact and approximate graph trussness"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  std::function<void(Context&)> handler;
  std::string command;
  auto bind = [&](CLI::App* sub, std::string name, void (*fn)(Context&)) {
    sub->callback([&handler, &command, name = std::move(name), fn] {
      command = name;
      handler = fn;
    });
  };
  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", opt.out_path, "Write output to PATH instead of stdout");
    sub->add_flag("--report", opt.report, "Print a JSON run report on stderr");
  };
  auto with_input = [&](CLI::App* sub) {
    sub->add_option("input", opt.input, "Edge-list file, '-' for stdin");
    common(sub);
  };
  auto randomized = [&](CLI::App* sub, double default_epsilon) {
    sub->add_option("--epsilon", opt.epsilon, "Accuracy parameter")
        ->default_val(default_epsilon);
    sub->add_option("--zeta", opt.zeta, "Sampling constant")->default_val(110.0);
    sub->add_option("--seed", opt.seed, "RNG seed")->default_val(0);
  };
  auto graph_output = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"edgelist"}));
  };

  auto* truss = app.add_subcommand("truss", "Trussness computations")->require_subcommand(1);
  {
    auto* s = truss->add_subcommand("exact", "Graph trussness");
    with_input(s);
    bind(s, "truss exact", cmd_truss_exact);

    s = truss->add_subcommand("decompose", "Per-edge trussness as 'u v t' lines");
    with_input(s);
    bind(s, "truss decompose", cmd_truss_decompose);

    s = truss->add_subcommand("approx", "(1 +- epsilon) sampling estimator");
    with_input(s);
    randomized(s, 0.5);
    s->add_flag("--pseudocode-growth", opt.pseudocode_growth,
                "Grow the clique parameter by (1 + epsilon) instead of (1 + epsilon / 6)");
    bind(s, "truss approx", cmd_truss_approx);

    s = truss->add_subcommand("threshold", "(3 + epsilon) support-thresholding estimator");
    with_input(s);
    s->add_option("--epsilon", opt.epsilon, "Accuracy parameter")->default_val(0.1);
    bind(s, "truss threshold", cmd_truss_threshold);
  }

  auto* tri = app.add_subcommand("triangles", "Triangle counting and listing")->require_subcommand(1);
  {
    auto* s = tri->add_subcommand("count", "Number of triangles");
    with_input(s);
    bind(s, "triangles count", cmd_triangles_count);
    s = tri->add_subcommand("list", "One 'a b c' line per triangle, sorted");
    with_input(s);
    bind(s, "triangles list", cmd_triangles_list);
  }

  {
    auto* s = app.add_subcommand("order", "Approximate (or exact) truss order");
    with_input(s);
    randomized(s, 0.5);
    s->add_flag("--exact", opt.exact_order, "Exact min-support peeling order");
    bind(s, "order", cmd_order);

    s = app.add_subcommand("sample", "Sampled triangle hypergraph as edge-id triples");
    with_input(s);
    randomized(s, 0.5);
    bind(s, "sample", cmd_sample);
  }

  auto* gadget = app.add_subcommand("gadget", "Gadget constructions")->require_subcommand(1);
  {
    auto* s = gadget->add_subcommand("blowup", "Q-fold blow-up of the input");
    with_input(s);
    graph_output(s);
    s->add_option("-q", opt.q, "Copies per node")->required()->check(CLI::PositiveNumber);
    bind(s, "gadget blowup", cmd_gadget_blowup);

    s = gadget->add_subcommand("spurious", "Input plus disjoint (x+2)-cliques");
    with_input(s);
    graph_output(s);
    s->add_option("-x", opt.x, "Clique parameter")->required();
    bind(s, "gadget spurious", cmd_gadget_spurious);

    s = gadget->add_subcommand("ladder", "K_x with x pendants");
    common(s);
    graph_output(s);
    s->add_option("-x", opt.x, "Clique size")->required()->check(CLI::PositiveNumber);
    bind(s, "gadget ladder", cmd_gadget_ladder);

    s = gadget->add_subcommand("bipartite-apex", "K_{s,s} plus an apex");
    common(s);
    graph_output(s);
    s->add_option("-s", opt.side, "Side size")->required()->check(CLI::PositiveNumber);
    bind(s, "gadget bipartite-apex", cmd_gadget_bipartite_apex);
  }

  auto* gen = app.add_subcommand("gen", "Graph generators")->require_subcommand(1);
  {
    auto* s = gen->add_subcommand("random", "Erdos-Renyi G(n, p)");
    common(s);
    graph_output(s);
    s->add_option("-n", opt.n, "Nodes")->required();
    s->add_option("-p", opt.p, "Edge probability")->required()->check(CLI::Range(0.0, 1.0));
    s->add_option("--seed", opt.seed, "RNG seed")->default_val(0);
    bind(s, "gen random", cmd_gen_random);
  }

  {
    auto* s = app.add_subcommand("bench", "Accuracy and runtime table (CSV)");
    common(s);
    s->add_option("--corpus", opt.corpus, "Corpus file")->required();
    s->add_option("--estimators", opt.estimators, "exact, threshold, approx")
        ->delimiter(',')
        ->check(CLI::IsMember({"exact", "threshold", "approx"}));
    s->add_option("--epsilon", opt.epsilon_grid, "Epsilon grid")->delimiter(',');
    s->add_option("--zeta", opt.zeta_grid, "Zeta grid")->delimiter(',');
    s->add_option("--seeds", opt.seeds, "Explicit seed list")->delimiter(',');
    s->add_option("--seed", opt.seed, "First seed when --seeds is absent");
    s->add_option("--seed-count", opt.seed_count, "Number of consecutive seeds");
    s->add_flag("--pseudocode-growth", opt.pseudocode_growth, "See 'truss approx'");
    s->add_flag("--no-timing", opt.no_timing, "Omit the runtime column");
    bind(s, "bench", cmd_bench);
  }

  std::vector<std::string> argv_storage{"trusslab"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  Context ctx{opt, in, {}, json::object()};
  const auto start = std::chrono::steady_clock::now();
  try {
    handler(ctx);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const EdgeListError& e) {
    const std::string source = command == "bench" ? opt.corpus
                               : opt.input == "-"   ? std::string("<stdin>")
                                                    : opt.input;
    err << "error: " << source << ": " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
  const double wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (opt.out_path.empty()) {
    out << ctx.body.str();
  } else {
    std::ofstream file(opt.out_path);
    file << ctx.body.str();
    if (!file) {
      err << "error: cannot write " << opt.out_path << '\n';
      return kExitIo;
    }
  }

  if (opt.report) {
    json& r = ctx.report;
    r["command"] = command;
    r["wall_ms"] = wall_ms;
    r["seed"] = opt.seed;
    r["config"] = {{"epsilon", opt.epsilon},
                   {"zeta", opt.zeta},
                   {"pseudocode_growth", opt.pseudocode_growth}};
    err << r.dump() << '\n';
  }
  return kExitOk;
}

}  // namespace trusslab
