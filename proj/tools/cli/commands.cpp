#include "commands.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gnns/engine.hpp"
#include "gnns/errors.hpp"
#include "gnns/graph.hpp"
#include "gnns/louvain.hpp"
#include "gnns/metrics.hpp"
#include "gnns/partition_io.hpp"
#include "gnns/random.hpp"
#include "gnns/sbm.hpp"
#include "gnns/temporal.hpp"

namespace gnns::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

std::string general(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  out << text;
}

void write_json(const fs::path& path, const json& doc) { write_text(path, doc.dump(2) + "\n"); }

std::vector<std::vector<std::string>> read_csv(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    rows.push_back(split_csv_record(line));
  }
  return rows;
}

std::optional<Directedness> treat_as(bool directed, bool undirected) {
  if (directed && undirected) throw ConfigError("--directed and --undirected are exclusive");
  if (directed) return Directedness::kDirected;
  if (undirected) return Directedness::kUndirected;
  return std::nullopt;
}

GraphFormat format_for(const std::string& flag, const fs::path& path) {
  if (!flag.empty()) return parse_graph_format(flag);
  return path.extension() == ".net" ? GraphFormat::kPajek : GraphFormat::kEdgeList;
}

// ---------------------------------------------------------------------------
// Methods

struct Method {
  std::string name;
  bool louvain = false;
  std::size_t samples = 100;
};

Method parse_method(const std::string& text) {
  if (text == "louvain") return {text, true, 0};
  if (text.rfind("gnns", 0) == 0) {
    const std::string digits = text.substr(4);
    if (digits.empty()) return {"gnns100", false, 100};
    std::size_t samples = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), samples);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return {text, false, samples};
  }
  throw ConfigError("unknown method '" + text + "' (expected gnns<S> or louvain)");
}

struct RunOutcome {
  BestOfResult runs;
  double seconds = 0.0;
};

struct RunSettings {
  std::size_t attempts = 1;
  std::size_t max_communities = 0;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
};

RunOutcome run_method(const Graph& g, const Method& method, const RunSettings& settings,
                      const Clock& clock) {
  RunOutcome outcome;
  if (method.louvain) {
    if (g.directed()) {
      throw ConfigError("louvain needs an undirected graph; pass --symmetrize");
    }
    const double start = clock();
    outcome.runs = best_of([&](std::uint64_t s) { return louvain(g, s); }, settings.attempts,
                           settings.seed);
    outcome.seconds = clock() - start;
    return outcome;
  }
  ScheduleConfig config;
  config.samples = method.samples;
  config.max_communities = settings.max_communities;
  config.threads = settings.threads;
  config.validate();
  const double start = clock();
  const ModularityMatrix mm = modularity_matrix(g, true);
  outcome.runs = best_of(
      [&](std::uint64_t s) {
        ScheduleConfig c = config;
        c.seed = s;
        return gnns_search(mm, c).partition;
      },
      settings.attempts, settings.seed);
  outcome.seconds = clock() - start;
  return outcome;
}

json run_report(const std::string& dataset, const Method& method, const RunSettings& settings,
                const RunOutcome& outcome, std::size_t nodes, const std::string& partition_file) {
  return json{
      {"dataset", dataset},
      {"method", method.name},
      {"score", outcome.runs.best.score},
      {"communities", outcome.runs.best.communities},
      {"nodes", nodes},
      {"attempts", settings.attempts},
      {"best_attempt", outcome.runs.best_attempt},
      {"attempt_scores", outcome.runs.scores},
      {"seconds", outcome.seconds},
      {"seed", settings.seed},
      {"partition_file", partition_file},
  };
}

// ---------------------------------------------------------------------------
// partition

struct PartitionArgs {
  std::string input;
  std::string format;
  bool directed = false;
  bool undirected = false;
  bool symmetrize = false;
  std::string method = "gnns";
  std::size_t samples = 100;
  RunSettings settings;
  std::string out;
};

int cmd_partition(const PartitionArgs& a, std::ostream& out, const Clock& clock) {
  Method method = parse_method(a.method == "gnns" ? "gnns" + std::to_string(a.samples) : a.method);
  Graph g = load_graph(a.input, format_for(a.format, a.input), treat_as(a.directed, a.undirected));
  if (a.symmetrize) g = symmetrize(g);
  const RunOutcome outcome = run_method(g, method, a.settings, clock);
  const Partition& best = outcome.runs.best;

  std::string partition_file;
  if (!a.out.empty()) {
    partition_file = a.out + ".csv";
    std::ostringstream csv;
    write_partition_csv(csv, g.node_labels(), best.labels);
    write_text(partition_file, csv.str());
    write_json(a.out + ".json", run_report(fs::path(a.input).stem().string(), method, a.settings,
                                           outcome, g.node_count(), partition_file));
  }
  out << "score " << fixed(best.score, 6) << "\n"
      << "communities " << best.communities << "\n"
      << "seconds " << general(outcome.seconds) << "\n";
  return kOk;
}

// ---------------------------------------------------------------------------
// benchmark

struct BenchmarkArgs {
  std::string manifest;
  std::string methods = "gnns100,louvain";
  std::size_t attempts = 20;
  bool symmetrize = false;
  RunSettings settings;
  std::string out;
};

struct Dataset {
  std::string name;
  fs::path path;
  GraphFormat format = GraphFormat::kEdgeList;
  bool directed = false;
};

bool parse_bool(const std::string& text, const std::string& where) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw DataError(where + ": expected true/false, got '" + text + "'");
}

std::vector<Dataset> read_manifest(const fs::path& path) {
  auto rows = read_csv(path);
  std::vector<Dataset> datasets;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (r == 0 && !row.empty() && row[0] == "name") continue;
    if (row.size() != 4) {
      throw ParseError(path.string(), r + 1, "expected name,path,format,directed");
    }
    Dataset d;
    d.name = row[0];
    d.path = fs::path(row[1]).is_absolute() ? fs::path(row[1]) : path.parent_path() / row[1];
    d.format = parse_graph_format(row[2]);
    d.directed = parse_bool(row[3], path.string() + ":" + std::to_string(r + 1));
    datasets.push_back(std::move(d));
  }
  return datasets;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

int cmd_benchmark(const BenchmarkArgs& a, std::ostream& out, std::ostream& err,
                  const Clock& clock) {
  std::vector<Method> methods;
  for (const std::string& m : split_list(a.methods)) methods.push_back(parse_method(m));
  if (methods.empty()) throw ConfigError("no methods given");
  const std::vector<Dataset> datasets = read_manifest(a.manifest);
  const fs::path root(a.out);
  fs::create_directories(root);

  struct Cell {
    std::optional<double> score;
    std::optional<double> seconds;
    std::string status = "ok";
  };
  std::vector<std::vector<Cell>> cells(datasets.size(), std::vector<Cell>(methods.size()));
  std::vector<std::size_t> nodes(datasets.size(), 0);
  json failures = json::array();

  for (std::size_t d = 0; d < datasets.size(); ++d) {
    const Dataset& ds = datasets[d];
    std::optional<Graph> g;
    try {
      g = load_graph(ds.path, ds.format,
                     ds.directed ? Directedness::kDirected : Directedness::kUndirected);
      if (a.symmetrize && g->directed()) g = symmetrize(*g);
      nodes[d] = g->node_count();
    } catch (const Error& e) {
      err << "warning: " << ds.name << ": " << e.what() << "\n";
      for (Cell& c : cells[d]) c.status = "load failed";
      failures.push_back({{"dataset", ds.name}, {"method", nullptr}, {"error", e.what()}});
      continue;
    }
    for (std::size_t m = 0; m < methods.size(); ++m) {
      Cell& cell = cells[d][m];
      const Method& method = methods[m];
      if (method.louvain && g->directed()) {
        cell.status = "skipped: directed";
        continue;
      }
      RunSettings settings = a.settings;
      settings.attempts = method.louvain ? a.attempts : 1;
      try {
        const RunOutcome outcome = run_method(*g, method, settings, clock);
        const std::string stem = ds.name + "_" + method.name;
        const fs::path partition_file = root / "partitions" / (stem + ".csv");
        std::ostringstream csv;
        write_partition_csv(csv, g->node_labels(), outcome.runs.best.labels);
        write_text(partition_file, csv.str());
        write_json(root / "reports" / (stem + ".json"),
                   run_report(ds.name, method, settings, outcome, g->node_count(),
                              partition_file.string()));
        cell.score = outcome.runs.best.score;
        cell.seconds = outcome.seconds;
      } catch (const Error& e) {
        err << "warning: " << ds.name << "/" << method.name << ": " << e.what() << "\n";
        cell.status = "failed";
        failures.push_back({{"dataset", ds.name}, {"method", method.name}, {"error", e.what()}});
      }
    }
  }

  // Aggregate table: scores (6 decimals), best score, times.
  std::ostringstream table;
  table << "dataset,nodes";
  for (const Method& m : methods) table << "," << m.name << "_score";
  table << ",best_score";
  for (const Method& m : methods) table << "," << m.name << "_seconds";
  table << "\n";

  std::vector<double> score_pct_sum(methods.size(), 0.0), time_pct_sum(methods.size(), 0.0);
  std::vector<std::size_t> score_pct_n(methods.size(), 0), time_pct_n(methods.size(), 0);
  for (std::size_t d = 0; d < datasets.size(); ++d) {
    std::optional<double> best_score, best_time;
    for (const Cell& c : cells[d]) {
      if (c.score) best_score = std::max(best_score.value_or(*c.score), *c.score);
      if (c.seconds) best_time = std::min(best_time.value_or(*c.seconds), *c.seconds);
    }
    table << csv_escape(datasets[d].name) << "," << nodes[d];
    for (const Cell& c : cells[d]) table << "," << (c.score ? fixed(*c.score, 6) : "");
    table << "," << (best_score ? fixed(*best_score, 6) : "");
    for (const Cell& c : cells[d]) table << "," << (c.seconds ? general(*c.seconds) : "");
    table << "\n";
    for (std::size_t m = 0; m < methods.size(); ++m) {
      const Cell& c = cells[d][m];
      if (c.score && best_score && *best_score > 0.0) {
        score_pct_sum[m] += 100.0 * *c.score / *best_score;
        ++score_pct_n[m];
      }
      if (c.seconds && best_time && *best_time > 0.0) {
        time_pct_sum[m] += 100.0 * *c.seconds / *best_time;
        ++time_pct_n[m];
      }
    }
  }
  json average = json::object();
  table << "Avg % to best,";
  for (std::size_t m = 0; m < methods.size(); ++m) {
    const bool have = score_pct_n[m] > 0;
    const double pct = have ? score_pct_sum[m] / static_cast<double>(score_pct_n[m]) : 0.0;
    table << "," << (have ? fixed(pct, 3) : "");
    if (have) average[methods[m].name] = pct;
  }
  table << ",";
  for (std::size_t m = 0; m < methods.size(); ++m) {
    const bool have = time_pct_n[m] > 0;
    table << "," << (have ? fixed(time_pct_sum[m] / static_cast<double>(time_pct_n[m]), 3) : "");
  }
  table << "\n";
  write_text(root / "table.csv", table.str());

  json status = json::array();
  for (std::size_t d = 0; d < datasets.size(); ++d) {
    for (std::size_t m = 0; m < methods.size(); ++m) {
      status.push_back({{"dataset", datasets[d].name},
                        {"method", methods[m].name},
                        {"status", cells[d][m].status}});
    }
  }
  write_json(root / "summary.json", json{{"avg_percent_to_best", average},
                                         {"runs", status},
                                         {"failures", failures}});
  out << table.str();
  return failures.empty() ? kOk : kData;
}

// ---------------------------------------------------------------------------
// temporal

struct TemporalArgs {
  std::string layers;
  std::string format;
  std::string warmup = "aggregate";
  int fine_tune_iters = 20;
  std::size_t samples = 100;
  RunSettings settings;
  std::string reference;
  std::string out;
};

WarmupSpec parse_warmup(const std::string& text) {
  if (text == "aggregate") return {WarmupSpec::Kind::kAggregate, 0};
  if (text.rfind("first:", 0) == 0) {
    const std::string digits = text.substr(6);
    std::size_t k = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) {
      return {WarmupSpec::Kind::kFirstK, k};
    }
  }
  throw ConfigError("warm-up must be 'aggregate' or 'first:K' (got '" + text + "')");
}

// Layer list from a `layer_id,path` manifest, or from a file-name pattern
// (`dir/layer_*.net`) expanded in lexicographic order.
std::vector<std::pair<std::string, fs::path>> resolve_layers(const std::string& spec) {
  std::vector<std::pair<std::string, fs::path>> layers;
  const fs::path path(spec);
  if (fs::is_regular_file(path)) {
    auto rows = read_csv(path);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == 0 && !rows[r].empty() && rows[r][0] == "layer_id") continue;
      if (rows[r].size() != 2) throw ParseError(spec, r + 1, "expected layer_id,path");
      const fs::path file(rows[r][1]);
      layers.emplace_back(rows[r][0], file.is_absolute() ? file : path.parent_path() / file);
    }
  } else {
    const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
    const std::string pattern = path.filename().string();
    if (fs::is_directory(dir)) {
      for (const auto& entry : fs::directory_iterator(dir)) {
        const std::string name = entry.path().filename().string();
        if (entry.is_regular_file() && fnmatch(pattern.c_str(), name.c_str(), 0) == 0) {
          layers.emplace_back(entry.path().stem().string(), entry.path());
        }
      }
    }
    std::sort(layers.begin(), layers.end(),
              [](const auto& x, const auto& y) { return x.second < y.second; });
  }
  if (layers.empty()) throw DataError("no layers match '" + spec + "'");
  return layers;
}

std::map<std::string, double> read_reference(const fs::path& path) {
  std::map<std::string, double> scores;
  auto rows = read_csv(path);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != 2) throw ParseError(path.string(), r + 1, "expected layer_id,score");
    try {
      std::size_t used = 0;
      const double v = std::stod(rows[r][1], &used);
      if (used != rows[r][1].size()) throw std::invalid_argument("trailing text");
      scores[rows[r][0]] = v;
    } catch (const std::logic_error&) {
      if (r == 0) continue;  // header
      throw ParseError(path.string(), r + 1, "invalid score '" + rows[r][1] + "'");
    }
  }
  return scores;
}

int cmd_temporal(const TemporalArgs& a, std::ostream& out, std::ostream& err,
                 const Clock& clock) {
  const WarmupSpec warmup = parse_warmup(a.warmup);
  ScheduleConfig config;
  config.samples = a.samples;
  config.max_communities = a.settings.max_communities;
  config.seed = a.settings.seed;
  config.threads = a.settings.threads;
  config.validate();

  const auto named = resolve_layers(a.layers);
  std::vector<Graph> graphs;
  graphs.reserve(named.size());
  for (const auto& [id, path] : named) graphs.push_back(load_graph(path, format_for(a.format, path)));

  std::map<std::string, double> reference;
  if (!a.reference.empty()) {
    if (fs::exists(a.reference)) {
      reference = read_reference(a.reference);
    } else {
      err << "warning: reference " << a.reference << " not found; ratios omitted\n";
    }
  }
  const TemporalResult result = temporal_search(graphs, config, warmup, a.fine_tune_iters, clock);

  const bool with_reference = !reference.empty();
  std::ostringstream timeline, partitions;
  timeline << "layer_id,score,communities,seconds" << (with_reference ? ",reference,ratio" : "")
           << "\n";
  partitions << "layer_id,node_label,community\n";
  double ratio_sum = 0.0;
  std::size_t ratio_n = 0, better = 0;
  json layers = json::array();
  for (const LayerResult& layer : result.layers) {
    const std::string& id = named[layer.layer].first;
    const Partition& p = layer.partition;
    timeline << csv_escape(id) << "," << fixed(p.score, 6) << "," << p.communities << ","
             << general(layer.seconds);
    json record{{"layer_id", id},
                {"score", p.score},
                {"communities", p.communities},
                {"seconds", layer.seconds}};
    if (with_reference) {
      auto it = reference.find(id);
      if (it != reference.end() && it->second != 0.0) {
        const double ratio = p.score / it->second;
        timeline << "," << fixed(it->second, 6) << "," << fixed(ratio, 6);
        record["reference"] = it->second;
        record["ratio"] = ratio;
        ratio_sum += ratio;
        ++ratio_n;
        better += p.score > it->second;
      } else {
        timeline << ",,";
      }
    }
    timeline << "\n";
    layers.push_back(record);
    const auto& labels = graphs[layer.layer].node_labels();
    for (std::size_t i = 0; i < p.labels.size(); ++i) {
      partitions << csv_escape(id) << "," << csv_escape(labels[i]) << "," << p.labels[i] << "\n";
    }
  }

  json summary{{"layers", result.layers.size()},
               {"warmup", a.warmup},
               {"warmup_score", result.warmup.partition.score},
               {"warmup_seconds", result.warmup_seconds},
               {"total_seconds", result.total_seconds()},
               {"fine_tune_iters", a.fine_tune_iters},
               {"samples", a.samples},
               {"seed", a.settings.seed},
               {"mean_ratio", nullptr},
               {"fraction_better", nullptr},
               {"timeline", layers}};
  if (ratio_n > 0) {
    summary["mean_ratio"] = ratio_sum / static_cast<double>(ratio_n);
    summary["fraction_better"] = static_cast<double>(better) / static_cast<double>(ratio_n);
  }
  const fs::path root(a.out);
  write_text(root / "timeline.csv", timeline.str());
  write_text(root / "partitions.csv", partitions.str());
  write_json(root / "summary.json", summary);

  out << "layers " << result.layers.size() << "\n"
      << "total_seconds " << general(result.total_seconds()) << "\n";
  if (ratio_n > 0) out << "mean_ratio " << fixed(summary["mean_ratio"].get<double>(), 6) << "\n";
  return kOk;
}

// ---------------------------------------------------------------------------
// synth

struct SynthArgs {
  std::string kind;
  std::string blocks = "100,100,100";
  double nu = 2.0;
  double p_out = 0.05;
  double drift = 0.05;
  std::size_t count = 10;
  std::uint64_t seed = 0;
  std::string out;
};

void write_truth(const fs::path& path, const LabeledGraph& lg) {
  std::ostringstream csv;
  write_partition_csv(csv, lg.graph.node_labels(), lg.truth);
  write_text(path, csv.str());
}

std::string numbered(const std::string& prefix, std::size_t k) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%03zu", k);
  return prefix + buf;
}

int cmd_synth(const SynthArgs& a, std::ostream& out) {
  SbmSpec spec;
  for (const std::string& b : split_list(a.blocks)) {
    std::size_t size = 0;
    auto [ptr, ec] = std::from_chars(b.data(), b.data() + b.size(), size);
    if (ec != std::errc() || ptr != b.data() + b.size()) {
      throw ConfigError("invalid block size '" + b + "'");
    }
    spec.block_sizes.push_back(size);
  }
  spec.nu = a.nu;
  spec.p_out = a.p_out;
  spec.seed = a.seed;
  spec.validate();

  const fs::path root(a.out);
  fs::create_directories(root);
  if (a.count == 0) {
    out << "wrote 0 graphs\n";
    return kOk;
  }

  std::ostringstream seeds;
  seeds << "name,seed\n";
  if (a.kind == "sbm") {
    std::ostringstream manifest;
    manifest << "name,path,format,directed\n";
    for (std::size_t k = 0; k < a.count; ++k) {
      const std::string name = numbered("sbm_", k);
      SbmSpec s = spec;
      s.seed = derive_seed(a.seed, k);
      const LabeledGraph lg = sbm_generate(s);
      write_pajek(root / (name + ".net"), lg.graph);
      write_truth(root / (name + "_truth.csv"), lg);
      manifest << name << "," << name << ".net,pajek,false\n";
      seeds << name << "," << s.seed << "\n";
    }
    write_text(root / "manifest.csv", manifest.str());
  } else {
    std::ostringstream manifest;
    manifest << "layer_id,path\n";
    const std::vector<LabeledGraph> series = sbm_drift_series(spec, a.count, a.drift);
    for (std::size_t k = 0; k < series.size(); ++k) {
      const std::string name = numbered("layer_", k);
      write_pajek(root / (name + ".net"), series[k].graph);
      write_truth(root / (name + "_truth.csv"), series[k]);
      manifest << name << "," << name << ".net\n";
    }
    seeds << "series," << a.seed << "\n";
    write_text(root / "layers.csv", manifest.str());
  }
  write_text(root / "seeds.csv", seeds.str());
  out << "wrote " << a.count << " graphs to " << root.string() << "\n";
  return kOk;
}

// ---------------------------------------------------------------------------
// nmi

int cmd_nmi(const std::string& first, const std::string& second, std::ostream& out) {
  const auto a = read_partition_csv(first);
  const auto b = read_partition_csv(second);
  std::map<std::string, int> lookup(b.begin(), b.end());
  if (a.size() != b.size()) {
    throw DataError("partitions cover " + std::to_string(a.size()) + " and " +
                    std::to_string(b.size()) + " nodes");
  }
  std::vector<int> la, lb;
  for (const auto& [node, community] : a) {
    auto it = lookup.find(node);
    if (it == lookup.end()) throw DataError("node '" + node + "' missing from " + second);
    la.push_back(community);
    lb.push_back(it->second);
  }
  out << fixed(nmi(la, lb), 6) << "\n";
  return kOk;
}

void add_run_settings(CLI::App* app, RunSettings& s) {
  app->add_option("--max-communities", s.max_communities, "community cap m (0: min(n, 32))");
  app->add_option("--seed", s.seed, "master seed");
  app->add_option("--threads", s.threads, "worker threads per search (0: all cores)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const Clock& clock) {
  CLI::App app{"Community detection by modularity maximisation"};
  app.name("gnns");
  app.require_subcommand(1);

  PartitionArgs pa;
  auto* partition = app.add_subcommand("partition", "partition one graph");
  partition->add_option("--input", pa.input, "graph file")->required();
  partition->add_option("--format", pa.format, "edgelist or pajek (default: from extension)");
  partition->add_flag("--directed", pa.directed, "read edges as arcs");
  partition->add_flag("--undirected", pa.undirected, "read arcs as edges");
  partition->add_flag("--symmetrize", pa.symmetrize, "replace e(i,j) by e(i,j) + e(j,i)");
  partition->add_option("--method", pa.method, "gnns or louvain");
  partition->add_option("--samples", pa.samples, "population size S for gnns");
  partition->add_option("--attempts", pa.settings.attempts, "best-of attempts");
  partition->add_option("--out", pa.out, "output prefix for <prefix>.csv and <prefix>.json");
  add_run_settings(partition, pa.settings);

  BenchmarkArgs ba;
  auto* benchmark = app.add_subcommand("benchmark", "run methods over a dataset manifest");
  benchmark->add_option("--manifest", ba.manifest, "CSV name,path,format,directed")->required();
  benchmark->add_option("--methods", ba.methods, "comma list of gnns<S> and louvain");
  benchmark->add_option("--attempts", ba.attempts, "best-of attempts for louvain");
  benchmark->add_flag("--symmetrize", ba.symmetrize, "symmetrize directed datasets");
  benchmark->add_option("--out", ba.out, "output directory")->required();
  add_run_settings(benchmark, ba.settings);

  TemporalArgs ta;
  auto* temporal = app.add_subcommand("temporal", "warm-up plus per-layer fine-tuning");
  temporal->add_option("--layers", ta.layers, "layer manifest (layer_id,path) or file pattern")
      ->required();
  temporal->add_option("--format", ta.format, "edgelist or pajek (default: from extension)");
  temporal->add_option("--warmup", ta.warmup, "aggregate or first:K");
  temporal->add_option("--fine-tune-iters", ta.fine_tune_iters, "steps per layer");
  temporal->add_option("--samples", ta.samples, "population size S for the warm-up");
  temporal->add_option("--reference", ta.reference, "CSV layer_id,score to compare against");
  temporal->add_option("--out", ta.out, "output directory")->required();
  add_run_settings(temporal, ta.settings);

  SynthArgs sa;
  auto* synth = app.add_subcommand("synth", "generate planted-partition graphs");
  synth->add_option("kind", sa.kind, "sbm or sbm-drift")
      ->required()
      ->check(CLI::IsMember({"sbm", "sbm-drift"}));
  synth->add_option("--blocks", sa.blocks, "comma list of block sizes");
  synth->add_option("--nu", sa.nu, "p_in / p_out");
  synth->add_option("--p-out", sa.p_out, "cross-block edge probability");
  synth->add_option("--drift", sa.drift, "per-layer move probability (sbm-drift)");
  synth->add_option("--count", sa.count, "graphs (sbm) or layers (sbm-drift)");
  synth->add_option("--seed", sa.seed, "master seed");
  synth->add_option("--out", sa.out, "output directory")->required();

  std::string nmi_a, nmi_b;
  auto* nmi_cmd = app.add_subcommand("nmi", "normalised mutual information of two partitions");
  nmi_cmd->add_option("first", nmi_a, "partition CSV")->required();
  nmi_cmd->add_option("second", nmi_b, "partition CSV")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (partition->parsed()) return cmd_partition(pa, out, clock);
    if (benchmark->parsed()) return cmd_benchmark(ba, out, err, clock);
    if (temporal->parsed()) return cmd_temporal(ta, out, err, clock);
    if (synth->parsed()) return cmd_synth(sa, out);
    if (nmi_cmd->parsed()) return cmd_nmi(nmi_a, nmi_b, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DataError& e) {
    err << "error: " << e.what() << "\n";
    return kData;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kData;
  }
  return kUsage;
}

}  // namespace gnns::cli
