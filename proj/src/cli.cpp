#include "leapx/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "leapx/claims.hpp"
#include "leapx/compositions.hpp"
#include "leapx/coronas.hpp"
#include "leapx/invariants.hpp"
#include "leapx/io.hpp"
#include "leapx/report.hpp"

namespace leapx {
namespace {

struct UsageError : Error {
  using Error::Error;
};

std::vector<Graph> load_inputs(const RunConfig& cfg) {
  std::vector<Graph> graphs;
  for (const auto& path : cfg.inputs) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
      file.open(path);
      if (!file) throw UsageError("cannot open input file: " + path);
      in = &file;
    }
    if (cfg.format == "graph6") {
      auto batch = read_graph6_lines(*in);
      graphs.insert(graphs.end(), batch.begin(), batch.end());
    } else if (cfg.format == "edgelist") {
      graphs.push_back(parse_edgelist(*in));
    } else {
      throw UsageError("unknown input format: " + cfg.format);
    }
  }
  return graphs;
}

std::vector<Graph> load_graph6_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open graph6 file: " + path);
  return read_graph6_lines(file);
}

void write_sidecar(const RunConfig& cfg, const Json& j) {
  if (cfg.provenance_out.empty()) return;
  std::ofstream out(cfg.provenance_out);
  if (!out) throw UsageError("cannot write sidecar: " + cfg.provenance_out);
  out << j.dump(2) << "\n";
}

int run_indices(const RunConfig& cfg, std::ostream& out) {
  auto graphs = load_inputs(cfg);
  if (graphs.empty()) throw UsageError("indices: no input graphs");
  std::vector<std::pair<std::string, IndexReport>> rows;
  for (const auto& g : graphs)
    rows.emplace_back(write_graph6(g), index_report(g));
  if (cfg.output == "json")
    out << indices_report_json(rows).dump(2) << "\n";
  else if (cfg.output == "csv")
    out << indices_report_csv(rows);
  else
    for (const auto& [g6, rep] : rows) out << human_index_report(g6, rep);
  return 0;
}

int emit_construction(const RunConfig& cfg, const Json& j, std::ostream& out) {
  write_sidecar(cfg, j);
  if (cfg.output == "json")
    out << j.dump(2) << "\n";
  else if (cfg.output == "human")
    out << j["graph6"].get<std::string>() << "\n";
  else
    throw UsageError("construct/join/corona support json or human output");
  return 0;
}

int run_construct(const RunConfig& cfg, std::ostream& out) {
  auto graphs = load_inputs(cfg);
  if (graphs.size() != 1) throw UsageError("construct: exactly one input graph");
  DerivedKind kind;
  if (cfg.op == "line")
    kind = DerivedKind::Line;
  else if (cfg.op == "S")
    kind = DerivedKind::Subdivision;
  else if (cfg.op == "Q")
    kind = DerivedKind::Q;
  else if (cfg.op == "R")
    kind = DerivedKind::R;
  else if (cfg.op == "T")
    kind = DerivedKind::Total;
  else
    throw UsageError("construct: --op must be line|S|Q|R|T");
  return emit_construction(cfg, construction_json(derive(kind, graphs[0])), out);
}

int run_join(const RunConfig& cfg, std::ostream& out) {
  auto graphs = load_inputs(cfg);
  if (cfg.kind == "vertex" || cfg.kind == "edge") {
    if (graphs.size() != 2)
      throw UsageError("join --kind " + cfg.kind + ": exactly two input graphs");
    auto j = cfg.kind == "vertex" ? sd_vertex_join(graphs[0], graphs[1])
                                  : sd_edge_join(graphs[0], graphs[1]);
    return emit_construction(cfg, construction_json(j), out);
  }
  if (cfg.kind == "vertex-edge") {
    if (graphs.size() != 3)
      throw UsageError("join --kind vertex-edge: exactly three input graphs");
    auto j = sd_vertex_edge_join(graphs[0], graphs[1], graphs[2]);
    return emit_construction(cfg, construction_json(j), out);
  }
  throw UsageError("join: --kind must be vertex|edge|vertex-edge");
}

int run_corona(const RunConfig& cfg, std::ostream& out) {
  auto graphs = load_inputs(cfg);
  if (graphs.size() != 3) throw UsageError("corona: exactly three input graphs");
  DerivedKind kind;
  if (cfg.kind == "S")
    kind = DerivedKind::Subdivision;
  else if (cfg.kind == "Q")
    kind = DerivedKind::Q;
  else if (cfg.kind == "R")
    kind = DerivedKind::R;
  else if (cfg.kind == "T")
    kind = DerivedKind::Total;
  else
    throw UsageError("corona: --kind must be S|Q|R|T");
  auto c = double_corona(kind, graphs[0], graphs[1], graphs[2]);
  return emit_construction(cfg, construction_json(c), out);
}

Family parse_family(const std::string& name) {
  auto f = family_from_name(name);
  if (!f) throw UsageError("unknown family: " + name);
  return *f;
}

void check_cap(int max_n) {
  int cap = effective_exhaustive_cap();
  if (max_n > cap)
    throw UsageError("max-n " + std::to_string(max_n) +
                     " exceeds the exhaustive cap " + std::to_string(cap));
  if (max_n < 1) throw UsageError("max-n must be at least 1");
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
  check_cap(cfg.max_n);
  SweepConfig sc;
  sc.claim_ids = resolve_claim_ids(cfg.claims);
  sc.family = parse_family(cfg.family);
  sc.max_n = cfg.max_n;
  sc.samples = cfg.samples;
  sc.seed = cfg.seed;
  if (sc.family == Family::Custom) {
    if (cfg.custom_file.empty())
      throw UsageError("family custom needs --custom-file");
    sc.custom = load_graph6_file(cfg.custom_file);
  }
  if (!cfg.h_file.empty()) sc.h_set = load_graph6_file(cfg.h_file);
  SweepReport report = sweep(sc);
  if (cfg.output == "json")
    out << sweep_report_json(report).dump(2) << "\n";
  else if (cfg.output == "csv")
    out << sweep_report_csv(report);
  else
    out << human_sweep_report(report);
  return report.has_violations() ? 2 : 0;
}

int run_counterexample(const RunConfig& cfg, std::ostream& out) {
  check_cap(cfg.max_n);
  if (cfg.property.empty()) throw UsageError("counterexample: --property required");
  auto ce = find_counterexample(cfg.property, cfg.max_n,
                                parse_family(cfg.family));
  if (cfg.output == "json" || cfg.output == "csv")
    out << counterexample_json(ce).dump(2) << "\n";
  else if (ce.found)
    out << "counterexample to " << ce.property << ": " << write_graph6(ce.graph)
        << " vertex " << ce.witness_vertex << " expected " << ce.expected
        << " actual " << ce.actual << "\n";
  else
    out << "no counterexample to " << ce.property << " up to n=" << ce.max_n
        << " in family " << ce.family << "\n";
  return 0;
}

}  // namespace

int effective_exhaustive_cap() {
  int cap = kExhaustiveCap;
  if (const char* env = std::getenv("LEAPX_MAX_N")) {
    try {
      int v = std::stoi(env);
      if (v >= 1 && v < cap) cap = v;
    } catch (const std::exception&) {
      // ignore unparsable values; the hard cap stands
    }
  }
  return cap;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "indices") return run_indices(cfg, out);
    if (cfg.command == "construct") return run_construct(cfg, out);
    if (cfg.command == "join") return run_join(cfg, out);
    if (cfg.command == "corona") return run_corona(cfg, out);
    if (cfg.command == "verify") return run_verify(cfg, out);
    if (cfg.command == "counterexample") return run_counterexample(cfg, out);
    err << "error: unknown command '" << cfg.command << "'\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace leapx
