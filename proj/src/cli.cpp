// Copyright 2026 The permagg Authors
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

#include "permagg/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "permagg/coupon_sim.hpp"
#include "permagg/generators.hpp"
#include "permagg/graph.hpp"
#include "permagg/perm_group.hpp"
#include "permagg/pg_aggregate.hpp"
#include "permagg/rw_estimator.hpp"
#include "permagg/serialize.hpp"
#include "permagg/substructure.hpp"
#include "permagg/wl.hpp"

#ifndef PERMAGG_VERSION
#define PERMAGG_VERSION "0.0.0"
#endif

namespace permagg {

namespace {

struct GraphSource {
  std::string in;
  std::string gen;
};

struct Options {
  std::uint64_t seed = 0;
  std::string out;  // empty: the subcommand's default
  GraphSource graph;
  // count
  std::string kind = "triangle";
  // cover
  std::size_t n = 0;
  std::string emit = "report";
  std::string variant = "sigma";
  // wl / distinguish
  std::string a;
  std::string b;
  std::size_t k = 1;
  std::size_t max_nodes_k2 = WlBudget{}.max_nodes_k2;
  std::size_t max_nodes_k3 = WlBudget{}.max_nodes_k3;
  std::string channels;
  std::size_t layers = 2;
  std::size_t hidden = 8;
  std::string agg = "elman";
  double alpha = 0.5;
  std::string weights;
  double tolerance = 1e-9;
  // estimate
  Node node = 0;
  std::size_t r = 100000;
  std::size_t seeds = 1;
  std::string augment = "auto";
  std::string start = "degree";
  std::string weight = "center";
  std::optional<std::size_t> burn_in;
  // coupon
  std::string n_range;
  std::size_t trials = 1000;
  std::string mode = "undirected";
  std::size_t threads = 1;
};

Graph LoadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return ReadEdgeList(in);
}

Graph LoadGraph(const GraphSource& src, std::uint64_t seed) {
  if (src.in.empty() == src.gen.empty()) {
    throw std::invalid_argument("give exactly one of --in and --gen");
  }
  if (!src.in.empty()) return LoadFile(src.in);
  return FromGeneratorSpec(src.gen, seed);
}

// An existing file path, otherwise a generator spec.
Graph LoadNamedGraph(const std::string& name, std::uint64_t seed) {
  if (std::filesystem::is_regular_file(name)) return LoadFile(name);
  return FromGeneratorSpec(name, seed);
}

void AddGraphOptions(CLI::App* cmd, Options& o) {
  cmd->add_option("--in", o.graph.in, "edge-list file");
  cmd->add_option("--gen", o.graph.gen, "generator spec, e.g. er:10:0.3");
}

void AddCommonOptions(CLI::App* cmd, Options& o, const std::string& out) {
  cmd->add_option("--seed", o.seed, "random seed")->capture_default_str();
  cmd->add_option("--out", o.out, "output format (default " + out + ")")
      ->check(CLI::IsMember({"json", "csv"}));
}

struct Range {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t step = 1;
};

Range ParseRange(const std::string& text) {
  std::vector<std::size_t> parts;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ':')) {
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
      value = std::stoull(piece, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (piece.empty() || used != piece.size()) {
      throw std::invalid_argument("bad range '" + text +
                                  "'; expected n or begin:end[:step]");
    }
    parts.push_back(static_cast<std::size_t>(value));
  }
  if (parts.empty() || parts.size() > 3) {
    throw std::invalid_argument("bad range '" + text +
                                "'; expected n or begin:end[:step]");
  }
  Range r;
  r.begin = parts[0];
  r.end = parts.size() > 1 ? parts[1] : parts[0];
  r.step = parts.size() > 2 ? parts[2] : 1;
  return r;
}

std::vector<Channel> ParseChannels(const std::string& text) {
  std::vector<Channel> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    if (piece.empty() || piece == "none") continue;
    const auto c = ParseChannel(piece);
    if (!c) throw std::invalid_argument("unknown channel '" + piece + "'");
    out.push_back(*c);
  }
  return out;
}

Json ChannelNames(const std::vector<Channel>& channels) {
  Json j = Json::array();
  for (Channel c : channels) j.push_back(ToString(c));
  return j;
}

void EmitJson(std::ostream& out, const Options& o,
              const std::vector<std::string>& args, Json result) {
  Json wrapped;
  wrapped["tool_version"] = ToolVersion();
  wrapped["seed"] = o.seed;
  wrapped["args"] = args;
  wrapped["result"] = std::move(result);
  out << wrapped.dump(2) << '\n';
}

void RunCount(const Options& o, const std::vector<std::string>& args,
              std::ostream& out) {
  const Graph g = LoadGraph(o.graph, o.seed);
  if (o.kind == "clustering") {
    const auto c = ClusteringCoefficients(g);
    if (o.out == "csv") {
      out << "node,clustering\n";
      for (std::size_t v = 0; v < c.size(); ++v) out << v << ',' << c[v] << '\n';
    } else {
      EmitJson(out, o, args, {{"kind", "clustering"}, {"values", c}});
    }
    return;
  }
  CountVector counts;
  if (o.kind == "triangle") {
    counts = IncidenceTriangles(g);
  } else if (o.kind == "4clique") {
    counts = IncidenceFourCliques(g);
  } else if (o.kind == "wedge") {
    counts = IncidenceWedges(g);
  } else {
    counts = IncidenceTrianglesDirected(g);
  }
  if (o.out == "csv") {
    WriteCountCsv(out, counts);
  } else {
    EmitJson(out, o, args,
             {{"kind", ToString(counts.kind)},
              {"counts", ToJson(counts)},
              {"total", counts.total()}});
  }
}

void RunCover(const Options& o, const std::vector<std::string>& args,
              std::ostream& out) {
  const Permutation gen = o.variant == "sigma" ? Sigma(o.n) : SigmaPrime(o.n);
  const PermutationGroup group = GenerateGroup(gen);
  const auto arrangements = Arrangements(group);
  if (o.emit == "arrangements") {
    if (o.out == "csv") {
      out << "index,ring\n";
      for (std::size_t i = 0; i < arrangements.size(); ++i) {
        out << i << ',';
        for (std::size_t t = 0; t < arrangements[i].ring.size(); ++t) {
          out << (t ? " " : "") << arrangements[i].ring[t];
        }
        out << '\n';
      }
    } else {
      EmitJson(out, o, args,
               {{"n", o.n},
                {"generator", gen.cycle_notation()},
                {"arrangements", ToJson(arrangements)}});
    }
    return;
  }
  const CoverageReport report = MakeCoverageReport(arrangements, o.n);
  if (o.out == "csv") {
    out << "arrangements,covered,total\n";
    for (std::size_t i = 0; i < report.covered_after.size(); ++i) {
      out << i + 1 << ',' << report.covered_after[i] << ','
          << report.total_pairs() << '\n';
    }
    return;
  }
  EmitJson(out, o, args,
           {{"n", o.n},
            {"generator", gen.cycle_notation()},
            {"image", ToJson(gen)},
            {"group_order", group.size()},
            {"report", ToJson(report)}});
}

void RunWl(const Options& o, const std::vector<std::string>& args,
           std::ostream& out) {
  const Graph a = LoadNamedGraph(o.a, o.seed);
  const Graph b = LoadNamedGraph(o.b, o.seed);
  WlBudget budget;
  budget.max_nodes_k2 = o.max_nodes_k2;
  budget.max_nodes_k3 = o.max_nodes_k3;
  const WlVerdict verdict = WlDistinguish(a, b, o.k, budget);
  std::vector<ColorHistogram> hist;
  if (a.node_count() == b.node_count()) {
    const Graph* graphs[] = {&a, &b};
    hist = o.k == 1 ? std::vector<ColorHistogram>{Wl1Refine(a), Wl1Refine(b)}
                    : RefineJointly(graphs, o.k, budget);
  }
  if (o.out == "csv") {
    out << "iteration,classes_a,classes_b\n";
    if (!hist.empty()) {
      const std::size_t rounds =
          std::max(hist[0].iterations.size(), hist[1].iterations.size());
      for (std::size_t t = 0; t < rounds; ++t) {
        out << t << ',';
        if (t < hist[0].iterations.size()) out << hist[0].class_count(t);
        out << ',';
        if (t < hist[1].iterations.size()) out << hist[1].class_count(t);
        out << '\n';
      }
    }
    out << "# verdict," << ToString(verdict) << '\n';
    return;
  }
  Json result{{"verdict", ToString(verdict)}, {"k", o.k}};
  if (!hist.empty()) {
    result["a"] = ToJson(hist[0]);
    result["b"] = ToJson(hist[1]);
  }
  EmitJson(out, o, args, std::move(result));
}

void RunEstimate(const Options& o, const std::vector<std::string>& args,
                 std::ostream& out) {
  const Graph g = LoadGraph(o.graph, o.seed);
  WalkConfig cfg;
  cfg.steps = o.r;
  cfg.seed = o.seed;
  if (o.augment == "on") cfg.augment = true;
  if (o.augment == "off") cfg.augment = false;
  cfg.start_policy = o.start == "uniform" ? StartPolicy::kUniform
                                          : StartPolicy::kDegreeProportional;
  cfg.weight = o.weight == "any" ? TriangleWeight::kAnyTriangle
                                 : TriangleWeight::kCenterTriangles;
  cfg.burn_in = o.burn_in;
  const auto runs = EstimateEnsemble(g, o.node, cfg, o.seeds);
  if (o.out == "csv") {
    out << "seed,z0,y1,y2\n";
    const auto precision = out.precision(12);
    for (std::size_t s = 0; s < runs.size(); ++s) {
      out << o.seed + s << ',' << runs[s].z0 << ',' << runs[s].y1 << ','
          << runs[s].y2 << '\n';
    }
    out.precision(precision);
    return;
  }
  Json result = EnsembleToJson(o.node, runs);
  result["exact_tau"] = IncidenceTriangles(g)[o.node];
  EmitJson(out, o, args, std::move(result));
}

void RunCoupon(const Options& o, const std::vector<std::string>& args,
               std::ostream& out) {
  const Range range = ParseRange(o.n_range);
  const bool undirected = o.mode != "directed";
  const bool directed = o.mode != "undirected";
  const auto rows = CoverSweep(range.begin, range.end, range.step, undirected,
                               directed, o.trials, o.seed, o.threads);
  if (o.out == "csv") {
    WriteSweepCsv(out, rows);
    return;
  }
  Json j = Json::array();
  for (const auto& row : rows) j.push_back(ToJson(row));
  EmitJson(out, o, args, {{"rows", std::move(j)}});
}

void RunDistinguish(const Options& o, const std::vector<std::string>& args,
                    std::ostream& out) {
  const Graph a = LoadNamedGraph(o.a, o.seed);
  const Graph b = LoadNamedGraph(o.b, o.seed);
  DistinguishConfig cfg;
  cfg.kind = o.agg == "linear" ? AggregatorKind::kLinearRecurrence
                               : AggregatorKind::kElman;
  cfg.alpha = o.alpha;
  cfg.layers = o.layers;
  cfg.hidden = o.hidden;
  cfg.seed = o.seed;
  cfg.tolerance = o.tolerance;
  std::optional<ModelWeights> weights;
  if (!o.weights.empty()) {
    std::ifstream in(o.weights);
    if (!in) throw std::runtime_error("cannot open '" + o.weights + "'");
    weights = ModelWeightsFromJson(Json::parse(in));
  }

  // Without --channels, try no channel, then triangles, then 4-cliques, and
  // report the first set that separates the graphs.
  std::vector<std::vector<Channel>> attempts;
  if (o.channels.empty()) {
    attempts = {{}, {Channel::kTriangles}, {Channel::kFourCliques}};
  } else {
    attempts = {ParseChannels(o.channels)};
  }
  Json tried = Json::array();
  Json witness = nullptr;
  WlVerdict verdict = WlVerdict::kIndistinguishable;
  for (const auto& channels : attempts) {
    cfg.channels = channels;
    const auto res = DistinguishByAggregation(a, b, cfg,
                                              weights ? &*weights : nullptr);
    tried.push_back({{"channels", ChannelNames(channels)},
                     {"verdict", ToString(res.verdict)},
                     {"max_gap", res.max_gap}});
    if (res.verdict == WlVerdict::kDistinguished) {
      verdict = res.verdict;
      witness = ChannelNames(channels);
      break;
    }
  }
  if (o.out == "csv") {
    out << "verdict,witness\n" << ToString(verdict) << ',';
    if (!witness.is_null()) {
      for (std::size_t i = 0; i < witness.size(); ++i) {
        out << (i ? ";" : "") << witness[i].get<std::string>();
      }
      if (witness.empty()) out << "degree";
    }
    out << '\n';
    return;
  }
  EmitJson(out, o, args,
           {{"verdict", ToString(verdict)},
            {"witness_channels", witness},
            {"attempts", std::move(tried)}});
}

}  // namespace

const char* ToolVersion() { return PERMAGG_VERSION; }

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Permutation-group aggregation and substructure counting tools",
               "permagg"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ToolVersion()));
  Options o;

  auto* count = app.add_subcommand("count", "per-node substructure counts");
  AddGraphOptions(count, o);
  AddCommonOptions(count, o, "json");
  count->add_option("--kind", o.kind, "substructure")
      ->check(CLI::IsMember(
          {"triangle", "4clique", "wedge", "clustering", "directed-triangle"}))
      ->capture_default_str();

  auto* cover = app.add_subcommand("cover", "arrangement coverage of K_n");
  AddCommonOptions(cover, o, "json");
  cover->add_option("--n", o.n, "number of neighbors")->required();
  cover->add_option("--emit", o.emit, "what to print")
      ->check(CLI::IsMember({"report", "arrangements"}))
      ->capture_default_str();
  cover->add_option("--variant", o.variant, "generating permutation")
      ->check(CLI::IsMember({"sigma", "sigma-prime"}))
      ->capture_default_str();

  auto* wl = app.add_subcommand("wl", "Weisfeiler-Lehman test on two graphs");
  AddCommonOptions(wl, o, "json");
  wl->add_option("--a", o.a, "first graph: file or generator spec")->required();
  wl->add_option("--b", o.b, "second graph: file or generator spec")
      ->required();
  wl->add_option("--k", o.k, "tuple size")
      ->check(CLI::Range(1, 3))
      ->capture_default_str();
  wl->add_option("--max-nodes-k2", o.max_nodes_k2, "k=2 node budget")
      ->capture_default_str();
  wl->add_option("--max-nodes-k3", o.max_nodes_k3, "k=3 node budget")
      ->capture_default_str();

  auto* estimate = app.add_subcommand(
      "estimate", "random-walk estimate of a node's incidence triangles");
  AddGraphOptions(estimate, o);
  AddCommonOptions(estimate, o, "json");
  estimate->add_option("--node", o.node, "center node")->required();
  estimate->add_option("--r", o.r, "walk length after burn-in")
      ->capture_default_str();
  estimate->add_option("--seeds", o.seeds, "ensemble size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  estimate->add_option("--augment", o.augment, "apex augmentation")
      ->check(CLI::IsMember({"auto", "on", "off"}))
      ->capture_default_str();
  estimate->add_option("--start", o.start, "initial node distribution")
      ->check(CLI::IsMember({"uniform", "degree"}))
      ->capture_default_str();
  estimate->add_option("--weight", o.weight, "closed 2-paths counted")
      ->check(CLI::IsMember({"center", "any"}))
      ->capture_default_str();
  estimate->add_option("--burn-in", o.burn_in, "discarded steps");

  auto* coupon = app.add_subcommand(
      "coupon", "cover-time simulation of random orderings on K_n");
  AddCommonOptions(coupon, o, "csv");
  coupon->add_option("--n", o.n_range, "n or begin:end[:step]")->required();
  coupon->add_option("--trials", o.trials, "trials per n")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  coupon->add_option("--mode", o.mode, "edge mode")
      ->check(CLI::IsMember({"undirected", "directed", "both"}))
      ->capture_default_str();
  coupon->add_option("--threads", o.threads, "worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* distinguish = app.add_subcommand(
      "distinguish", "separate two graphs by aggregated node features");
  AddCommonOptions(distinguish, o, "json");
  distinguish->add_option("--a", o.a, "first graph")->required();
  distinguish->add_option("--b", o.b, "second graph")->required();
  distinguish->add_option("--channels", o.channels,
                          "comma list of triangles,4clique,wedges");
  distinguish->add_option("--layers", o.layers, "layer count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  distinguish->add_option("--hidden", o.hidden, "elman state width")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  distinguish->add_option("--agg", o.agg, "sequence function")
      ->check(CLI::IsMember({"elman", "linear"}))
      ->capture_default_str();
  distinguish->add_option("--alpha", o.alpha, "linear recurrence weight")
      ->capture_default_str();
  distinguish->add_option("--weights", o.weights, "JSON weight file");
  distinguish->add_option("--tolerance", o.tolerance, "feature tolerance")
      ->capture_default_str();

  std::vector<const char*> argv{"permagg"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  if (o.out.empty()) o.out = coupon->parsed() ? "csv" : "json";
  try {
    if (count->parsed()) {
      RunCount(o, args, out);
    } else if (cover->parsed()) {
      RunCover(o, args, out);
    } else if (wl->parsed()) {
      RunWl(o, args, out);
    } else if (estimate->parsed()) {
      RunEstimate(o, args, out);
    } else if (coupon->parsed()) {
      RunCoupon(o, args, out);
    } else {
      RunDistinguish(o, args, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace permagg
