#include "leapx/report.hpp"

#include <sstream>

#include "leapx/io.hpp"

namespace leapx {
namespace {

Json index_fields(const IndexReport& rep) {
  Json j;
  j["n"] = rep.n;
  j["m"] = rep.m;
  j["M1"] = rep.M1;
  j["LM1"] = rep.LM1;
  j["theta"] = rep.theta;
  j["xiC"] = rep.xiC;
  j["LxiC"] = rep.LxiC;
  j["sum_d2"] = rep.sum_d2;
  return j;
}

Json provenance_json(const Provenance& p, int vertex) {
  Json j;
  j["vertex"] = vertex;
  j["class"] = provenance_class_name(p.kind);
  j["base_index"] = p.index;
  if (p.copy >= 0) j["copy"] = p.copy;
  return j;
}

}  // namespace

Json index_report_json(const IndexReport& rep, const std::string& graph6) {
  Json j;
  j["graph6"] = graph6;
  j.update(index_fields(rep));
  return j;
}

Json indices_report_json(
    const std::vector<std::pair<std::string, IndexReport>>& rows) {
  Json j;
  j["report"] = "indices";
  j["graphs"] = Json::array();
  for (const auto& [g6, rep] : rows)
    j["graphs"].push_back(index_report_json(rep, g6));
  return j;
}

std::string indices_report_csv(
    const std::vector<std::pair<std::string, IndexReport>>& rows) {
  std::ostringstream out;
  out << "graph6,n,m,M1,LM1,theta,xiC,LxiC,sum_d2\n";
  for (const auto& [g6, r] : rows)
    out << g6 << "," << r.n << "," << r.m << "," << r.M1 << "," << r.LM1 << ","
        << r.theta << "," << r.xiC << "," << r.LxiC << "," << r.sum_d2 << "\n";
  return out.str();
}

Json claim_result_json(const ClaimResult& r) {
  Json j;
  j["claim_id"] = r.claim_id;
  j["instance"] = r.instance;
  j["status"] = claim_status_name(r.status);
  j["lhs"] = r.lhs;
  if (r.lower) j["lower"] = *r.lower;
  if (r.upper) j["upper"] = *r.upper;
  if (!r.witness.empty()) j["witness"] = r.witness;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json sweep_report_json(const SweepReport& r) {
  Json j;
  j["report"] = "sweep";
  Json cfg;
  cfg["family"] = r.family;
  cfg["max_n"] = r.max_n;
  cfg["samples"] = r.samples;
  cfg["seed"] = r.seed;
  cfg["h_set"] = r.h_set;
  j["config"] = cfg;
  j["claims"] = Json::array();
  for (const auto& [id, t] : r.tallies) {
    Json c;
    c["claim_id"] = id;
    const Claim* claim = find_claim(id);
    c["kind"] = claim ? statement_kind_name(claim->kind) : "?";
    c["equality_holds"] = t.equality_holds;
    c["strict"] = t.strict;
    c["bound_holds"] = t.bound_holds;
    c["violation"] = t.violation;
    c["not_applicable"] = t.not_applicable;
    c["total"] = t.total();
    j["claims"].push_back(c);
  }
  j["violations"] = Json::array();
  for (const auto& v : r.violations) j["violations"].push_back(claim_result_json(v));
  return j;
}

std::string sweep_report_csv(const SweepReport& r) {
  std::ostringstream out;
  out << "section,claim_id,equality_holds,strict,bound_holds,violation,"
         "not_applicable,total,instance,lhs,lower,upper,witness\n";
  for (const auto& [id, t] : r.tallies)
    out << "claim," << id << "," << t.equality_holds << "," << t.strict << ","
        << t.bound_holds << "," << t.violation << "," << t.not_applicable
        << "," << t.total() << ",,,,,\n";
  auto opt = [](const std::optional<long long>& v) {
    return v ? std::to_string(*v) : std::string();
  };
  for (const auto& v : r.violations) {
    std::string witness = v.witness;
    for (char& ch : witness)
      if (ch == ',') ch = ';';
    out << "violation," << v.claim_id << ",,,,,,," << v.instance << ","
        << v.lhs << "," << opt(v.lower) << "," << opt(v.upper) << "," << witness
        << "\n";
  }
  return out.str();
}

Json counterexample_json(const Counterexample& c) {
  Json j;
  j["report"] = "counterexample";
  j["property"] = c.property;
  j["family"] = c.family;
  j["max_n"] = c.max_n;
  j["found"] = c.found;
  if (c.found) {
    j["graph6"] = write_graph6(c.graph);
    j["n"] = c.graph.vertex_count();
    j["witness_vertex"] = c.witness_vertex;
    j["expected"] = c.expected;
    j["actual"] = c.actual;
  }
  return j;
}

namespace {

template <typename T>
Json construction_body(const std::string& op, const T& value) {
  Json j;
  j["report"] = "construction";
  j["op"] = op;
  j["graph6"] = write_graph6(value.graph);
  j["n"] = value.graph.vertex_count();
  j["m"] = value.graph.edge_count();
  Json prov = Json::array();
  for (int v = 0; v < value.graph.vertex_count(); ++v)
    prov.push_back(provenance_json(value.provenance(v), v));
  j["provenance"] = prov;
  return j;
}

}  // namespace

Json construction_json(const DerivedGraph& d) {
  Json j = construction_body(derived_kind_name(d.kind), d);
  j["base"] = {{"n", d.base_n}, {"m", d.base_m}};
  return j;
}

Json construction_json(const JoinGraph& jg) {
  Json j = construction_body("join-" + join_kind_name(jg.kind), jg);
  j["params"] = {{"n", jg.n},   {"m", jg.m},   {"n1", jg.n1},
                 {"m1", jg.m1}, {"n2", jg.n2}, {"m2", jg.m2}};
  return j;
}

Json construction_json(const CoronaGraph& c) {
  Json j = construction_body("corona-" + derived_kind_name(c.base_kind), c);
  j["params"] = {{"n", c.n},   {"m", c.m},   {"n1", c.n1},
                 {"m1", c.m1}, {"n2", c.n2}, {"m2", c.m2}};
  return j;
}

std::string human_index_report(const std::string& graph6,
                               const IndexReport& r) {
  std::ostringstream out;
  out << graph6 << ": n=" << r.n << " m=" << r.m << " M1=" << r.M1
      << " LM1=" << r.LM1 << " theta=" << r.theta << " xiC=" << r.xiC
      << " LxiC=" << r.LxiC << " sum_d2=" << r.sum_d2 << "\n";
  return out.str();
}

std::string human_sweep_report(const SweepReport& r) {
  std::ostringstream out;
  out << "sweep family=" << r.family << " max_n=" << r.max_n
      << " samples=" << r.samples << " seed=" << r.seed << "\n";
  for (const auto& [id, t] : r.tallies)
    out << "  " << id << ": equality=" << t.equality_holds
        << " strict=" << t.strict << " bound=" << t.bound_holds
        << " violation=" << t.violation << " n/a=" << t.not_applicable << "\n";
  for (const auto& v : r.violations) {
    out << "  VIOLATION " << v.claim_id << " on " << v.instance
        << " lhs=" << v.lhs;
    if (v.lower) out << " lower=" << *v.lower;
    if (v.upper) out << " upper=" << *v.upper;
    if (!v.witness.empty()) out << " witness: " << v.witness;
    out << "\n";
  }
  return out.str();
}

}  // namespace leapx
