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

#include "trusslab/bench.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "trusslab/approx_truss.hpp"
#include "trusslab/edge_list_io.hpp"
#include "trusslab/exact_truss.hpp"
#include "trusslab/gadgets.hpp"
#include "trusslab/random_graph.hpp"
#include "trusslab/rational.hpp"
#include "trusslab/triangles.hpp"

namespace trusslab {

namespace {

template <class T>
T parse_number(const std::string& word, std::size_t line) {
  std::istringstream in(word);
  T value{};
  if (!(in >> value) || !in.eof()) throw EdgeListError(line, "bad number '" + word + "'");
  return value;
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

struct Cell {
  std::size_t graph;
  Estimator estimator;
  double epsilon;
  double zeta;
  std::uint64_t seed;
};

struct Truth {
  std::uint32_t trussness;
  std::uint64_t triangles;
};

BenchRow run_cell(const CorpusEntry& entry, const Truth& truth, const Cell& cell,
                  const BenchConfig& cfg) {
  BenchRow row;
  row.graph = entry.name;
  row.nodes = entry.graph.node_count();
  row.edges = entry.graph.edge_count();
  row.triangles = truth.triangles;
  row.exact = truth.trussness;
  row.estimator = cell.estimator;
  row.epsilon = cell.epsilon;
  row.zeta = cell.zeta;
  row.seed = cell.seed;

  const Rational t(truth.trussness);
  Rational estimate;
  const auto start = std::chrono::steady_clock::now();
  switch (cell.estimator) {
    case Estimator::kExact:
      estimate = trussness(entry.graph);
      row.within = estimate == t;
      row.exact_flag = true;
      break;
    case Estimator::kThreshold: {
      estimate = threshold_estimate(entry.graph, cell.epsilon).estimate;
      const Rational c = Rational(3) + rational_from_double(cell.epsilon);
      row.within = estimate <= t && t <= c * estimate;
      break;
    }
    case Estimator::kApprox: {
      SamplerConfig sc;
      sc.zeta = cell.zeta;
      sc.seed = cell.seed;
      const EstimateResult r =
          estimate_trussness(entry.graph, cell.epsilon, sc,
                             cfg.pseudocode_growth ? Growth::kPseudocode : Growth::kProof);
      estimate = r.estimate;
      row.exact_flag = r.exact_flag;
      row.fell_back = true;
      for (const auto& round : r.trace) row.fell_back = row.fell_back && round.fell_back_to_exact;
      const Rational eps = rational_from_double(cell.epsilon);
      const Rational diff = estimate > t ? estimate - t : t - estimate;
      row.within = diff <= eps * t;
      break;
    }
  }
  row.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  row.estimate = to_string(estimate);
  if (truth.trussness == 0) {
    row.ratio = estimate == 0 ? 1.0 : std::numeric_limits<double>::infinity();
  } else {
    row.ratio = to_double(estimate / t);
  }
  return row;
}

}  // namespace

std::vector<CorpusEntry> read_corpus(std::istream& in) {
  std::vector<CorpusEntry> out;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    std::vector<std::string> w;
    for (std::string s; words >> s;) w.push_back(s);
    if (w.empty()) continue;

    std::size_t q = 1;
    if (w.size() > 1 && w.back().size() > 1 && w.back()[0] == 'x') {
      q = parse_number<std::size_t>(w.back().substr(1), line);
      if (q == 0) throw EdgeListError(line, "blow-up factor must be positive");
      w.pop_back();
    }

    const std::string& kind = w[0];
    auto arity = [&](std::size_t k) {
      if (w.size() != k + 1) {
        throw EdgeListError(line, "'" + kind + "' takes " + std::to_string(k) + " argument(s)");
      }
    };
    CorpusEntry entry;
    if (kind == "random") {
      arity(3);
      const auto n = parse_number<std::size_t>(w[1], line);
      const auto p = parse_number<double>(w[2], line);
      const auto seed = parse_number<std::uint64_t>(w[3], line);
      if (!(p >= 0.0 && p <= 1.0)) throw EdgeListError(line, "probability outside [0, 1]");
      entry.graph = gen_random(n, p, seed);
      entry.name = "random-" + w[1] + "-" + w[2] + "-" + w[3];
    } else if (kind == "clique") {
      arity(1);
      entry.graph = complete_graph(parse_number<std::size_t>(w[1], line));
      entry.name = "K" + w[1];
    } else if (kind == "bipartite-apex") {
      arity(1);
      const auto side = parse_number<std::size_t>(w[1], line);
      if (side == 0) throw EdgeListError(line, "side must be positive");
      entry.graph = bipartite_apex(side);
      entry.name = "bipartite-apex-" + w[1];
    } else if (kind == "ladder") {
      arity(1);
      const auto x = parse_number<std::size_t>(w[1], line);
      if (x == 0) throw EdgeListError(line, "ladder size must be positive");
      entry.graph = ladder_gadget(x).graph;
      entry.name = "ladder-" + w[1];
    } else if (kind == "file") {
      arity(1);
      entry.graph = read_edge_list_file(w[1]).graph;
      entry.name = w[1];
    } else {
      throw EdgeListError(line, "unknown corpus entry '" + kind + "'");
    }
    if (q > 1) {
      entry.graph = materialize(blowup(entry.graph, q));
      entry.name += "-x" + std::to_string(q);
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<CorpusEntry> read_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_corpus(in);
}

Estimator parse_estimator(const std::string& name) {
  if (name == "exact") return Estimator::kExact;
  if (name == "threshold") return Estimator::kThreshold;
  if (name == "approx") return Estimator::kApprox;
  throw std::invalid_argument("unknown estimator '" + name + "'");
}

const char* estimator_name(Estimator e) {
  switch (e) {
    case Estimator::kExact:
      return "exact";
    case Estimator::kThreshold:
      return "threshold";
    case Estimator::kApprox:
      return "approx";
  }
  return "?";
}

std::vector<BenchRow> run_bench(const std::vector<CorpusEntry>& corpus, const BenchConfig& cfg) {
  std::vector<Truth> truth;
  truth.reserve(corpus.size());
  for (const auto& entry : corpus) {
    truth.push_back({trussness(entry.graph), count_triangles(entry.graph)});
  }

  std::vector<Cell> cells;
  for (std::size_t g = 0; g < corpus.size(); ++g) {
    for (Estimator est : cfg.estimators) {
      if (est == Estimator::kExact) {
        cells.push_back({g, est, 0.0, 0.0, 0});
        continue;
      }
      for (double eps : cfg.epsilons) {
        if (est == Estimator::kThreshold) {
          cells.push_back({g, est, eps, 0.0, 0});
          continue;
        }
        for (double zeta : cfg.zetas) {
          for (std::uint64_t seed : cfg.seeds) cells.push_back({g, est, eps, zeta, seed});
        }
      }
    }
  }

  std::vector<BenchRow> rows(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < cells.size();) {
      rows[i] = run_cell(corpus[cells[i].graph], truth[cells[i].graph], cells[i], cfg);
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(cfg.threads, cells.size()));
  std::vector<std::jthread> pool;
  for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows, const BenchConfig& cfg) {
  out << "graph,n,m,triangles,exact,estimator,epsilon,zeta,seed,estimate,ratio,within,"
         "exact_flag,fell_back";
  if (cfg.timing) out << ",runtime_ms";
  out << '\n';
  for (const auto& r : rows) {
    const bool uses_eps = r.estimator != Estimator::kExact;
    const bool uses_zeta = r.estimator == Estimator::kApprox;
    out << r.graph << ',' << r.nodes << ',' << r.edges << ',' << r.triangles << ',' << r.exact
        << ',' << estimator_name(r.estimator) << ',' << (uses_eps ? format_double(r.epsilon) : "")
        << ',' << (uses_zeta ? format_double(r.zeta) : "") << ','
        << (uses_zeta ? std::to_string(r.seed) : "") << ',' << r.estimate << ','
        << format_double(r.ratio) << ',' << r.within << ',' << r.exact_flag << ',' << r.fell_back;
    if (cfg.timing) out << ',' << format_double(r.runtime_ms);
    out << '\n';
  }

  struct Agg {
    std::size_t runs = 0, within = 0, exact_ratio = 0;
    double ratio_min = std::numeric_limits<double>::infinity();
    double ratio_max = 0.0;
  };
  std::map<std::tuple<int, double, double>, Agg> agg;
  for (const auto& r : rows) {
    Agg& a = agg[{static_cast<int>(r.estimator), r.epsilon, r.zeta}];
    ++a.runs;
    a.within += r.within;
    a.exact_ratio += r.ratio == 1.0;
    a.ratio_min = std::min(a.ratio_min, r.ratio);
    a.ratio_max = std::max(a.ratio_max, r.ratio);
  }
  for (const auto& [key, a] : agg) {
    const auto est = static_cast<Estimator>(std::get<0>(key));
    out << "# aggregate estimator=" << estimator_name(est);
    if (est != Estimator::kExact) out << " epsilon=" << format_double(std::get<1>(key));
    if (est == Estimator::kApprox) out << " zeta=" << format_double(std::get<2>(key));
    out << " runs=" << a.runs << " within=" << a.within
        << " within_rate=" << format_double(static_cast<double>(a.within) / a.runs)
        << " exact_rate=" << format_double(static_cast<double>(a.exact_ratio) / a.runs)
        << " ratio_min=" << format_double(a.ratio_min) << " ratio_max=" << format_double(a.ratio_max)
        << '\n';
  }
}

}  // namespace trusslab
