// Acceptance suite: runs every acceptance criterion and prints one PASS/FAIL
// line per criterion. Exit status is the number of failed criteria.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "leapx/cli.hpp"
#include "leapx/claims.hpp"
#include "leapx/compositions.hpp"
#include "leapx/constructions.hpp"
#include "leapx/coronas.hpp"
#include "leapx/invariants.hpp"
#include "leapx/io.hpp"
#include "leapx/report.hpp"
#include "oracles.hpp"

using namespace leapx;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report_line(int criterion, bool pass, const std::string& detail) {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": "
            << detail << "\n";
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

// ---------------------------------------------------------------------------

void criterion_1_structural() {
  auto start = std::chrono::steady_clock::now();
  const std::vector<std::string> claim_ids{"lem-2.2", "lem-2.4.i", "lem-2.4.ii",
                                           "lem-4.1"};
  long long instances = 0, violations = 0, count_failures = 0;
  std::string first_bad;
  const Graph k1 = Graph::complete(1);
  const Graph k2 = Graph::complete(2);
  const Graph p3 = Graph::path(3);

  enumerate_connected(6, [&](const Graph& g) {
    ++instances;
    for (const auto& id : claim_ids) {
      auto r = check_claim(id, {g});
      if (r.status == ClaimStatus::Violation) {
        ++violations;
        if (first_bad.empty())
          first_bad = id + " on " + r.instance + " (" + r.witness + ")";
      }
    }
    const long long n = g.vertex_count(), m = g.edge_count();
    const long long ell = first_zagreb(g) / 2 - m;
    auto expect = [&](bool ok, const char* what) {
      if (!ok) {
        ++count_failures;
        if (first_bad.empty())
          first_bad = std::string(what) + " on " + write_graph6(g);
      }
    };
    auto L = line_graph(g);
    expect(L.graph.vertex_count() == m, "line graph order");
    expect(L.graph.edge_count() == ell, "line graph size");
    auto S = subdivision(g), Q = q_graph(g), R = r_graph(g), T = total_graph(g);
    for (const auto* d : {&S, &Q, &R, &T})
      expect(d->graph.vertex_count() == n + m, "derived order");
    expect(S.graph.edge_count() == 2 * m, "S size");
    expect(Q.graph.edge_count() == 2 * m + ell, "Q size");
    expect(R.graph.edge_count() == 3 * m, "R size");
    expect(T.graph.edge_count() == 3 * m + ell, "T size");

    if (n >= 2) {
      auto vj = sd_vertex_join(g, k2);
      expect(vj.graph.vertex_count() == n + m + 2, "vertex join order");
      expect(vj.graph.edge_count() == 2 * m + 2 * n + 1, "vertex join size");
      auto ej = sd_edge_join(g, k2);
      expect(ej.graph.edge_count() == 2 * m + 2 * m + 1, "edge join size");
      auto vej = sd_vertex_edge_join(g, k1, k1);
      expect(vej.graph.vertex_count() == n + m + 2, "ve join order");
      expect(vej.graph.edge_count() == 2 * m + n + m, "ve join size");
    }
    for (auto kind : {DerivedKind::Subdivision, DerivedKind::Total}) {
      auto c = double_corona(kind, g, k2, p3);
      expect(c.graph.vertex_count() == n * 3 + m * 4, "corona order");
    }
  });

  double secs = seconds_since(start);
  std::ostringstream detail;
  detail << "structural exhaustive n<=6: " << instances << " graphs, "
         << violations << " claim violations, " << count_failures
         << " count failures, " << secs << "s";
  if (!first_bad.empty()) detail << "; first: " << first_bad;
  report_line(1, violations == 0 && count_failures == 0 && secs <= 300.0,
              detail.str());
}

void run_claims_exhaustive(int criterion, const std::vector<std::string>& ids,
                           const std::string& label) {
  long long violations = 0, checked = 0;
  std::string first_bad;
  enumerate_connected(6, [&](const Graph& g) {
    for (const auto& id : ids) {
      auto r = check_claim(id, {g});
      if (r.status == ClaimStatus::NotApplicable) continue;
      ++checked;
      if (r.status == ClaimStatus::Violation) {
        ++violations;
        if (first_bad.empty())
          first_bad = id + " on " + r.instance + " (" + r.witness + ")";
      }
    }
  });
  std::ostringstream detail;
  detail << label << ": " << checked << " checks, " << violations
         << " violations";
  if (!first_bad.empty()) detail << "; first: " << first_bad;
  report_line(criterion, violations == 0, detail.str());
}

void criterion_4_spot_values() {
  bool ok = true;
  std::ostringstream detail;

  auto c4 = Graph::cycle(4);
  ok &= leap_ecc_connectivity(c4) == 8;
  ok &= oracle::leap_ecc_connectivity(c4) == 8;

  auto s_c4 = subdivision(c4).graph;
  ok &= leap_ecc_connectivity(s_c4) == 64;
  ok &= oracle::leap_ecc_connectivity(s_c4) == 64;
  ok &= leap_ecc_connectivity(Graph::cycle(8)) == 64;
  auto r25 = check_claim("thm-2.5", {c4});
  ok &= r25.status == ClaimStatus::BoundHolds && r25.lhs == 64 &&
        r25.lower == 64 && r25.upper == 80;

  auto j33 = sd_vertex_join(Graph::star(3), Graph::complete(2));
  ok &= oracle::leap_ecc_connectivity(j33.graph) == 42;
  auto r33 = check_claim("thm-3.3", {Graph::star(3), Graph::complete(2)});
  ok &= r33.status == ClaimStatus::EqualityHolds && r33.lhs == 42;

  auto j313 = sd_vertex_edge_join(Graph::path(4), Graph::complete(1),
                                  Graph::complete(1));
  ok &= oracle::leap_ecc_connectivity(j313.graph) == 96;
  auto r313 = check_claim(
      "thm-3.13", {Graph::path(4), Graph::complete(1), Graph::complete(1)});
  ok &= r313.status == ClaimStatus::EqualityHolds && r313.lhs == 96;

  detail << "spot equalities: LxiC(C4)=8, LxiC(S(C4))=64 with thm-2.5 lower "
            "64, thm-3.3 both sides 42, thm-3.13 both sides 96, each "
            "re-derived by the independent distance oracle";
  report_line(4, ok, detail.str());
}

void criterion_5_counterexample() {
  bool ok = true;
  std::ostringstream detail;

  RunConfig cfg;
  cfg.command = "counterexample";
  cfg.property = "yarahmadi-s-ecc";
  cfg.max_n = 3;
  cfg.output = "json";
  std::ostringstream out, err;
  int code = run(cfg, out, err);
  ok &= code == 0;
  auto j = nlohmann::json::parse(out.str());
  ok &= j["found"] == true && j["n"] == 3 && j["graph6"] == "Bw";

  auto bip = find_counterexample("yarahmadi-s-ecc", 6, Family::Bipartite);
  ok &= !bip.found;

  detail << "counterexample search: triangle witness at n=3 via the CLI "
            "surface, none on bipartite graphs up to n=6";
  report_line(5, ok, detail.str());
}

const std::set<std::string> kMustBeClean{
    "thm-2.5", "thm-2.10", "thm-2.14", "thm-3.3",
    "thm-3.8", "thm-3.9",  "thm-3.12", "thm-3.13"};

void criterion_6_audit_sweeps(const fs::path& findings_path) {
  struct Spec {
    std::vector<std::string> claims;
    Family family;
    int max_n;
    int samples;
  };
  const std::vector<std::string> sec2{
      "thm-2.5", "cor-2.6",  "cor-2.7",  "thm-2.10", "cor-2.11",
      "thm-2.14", "cor-2.15", "thm-2.18", "cor-2.19", "cor-2.20"};
  const std::vector<std::string> sec2_girth{
      "thm-2.10", "cor-2.11", "thm-2.14", "cor-2.15",
      "thm-2.18", "cor-2.19", "cor-2.20"};
  const std::vector<std::string> sec3_pairs{"thm-3.3", "thm-3.4", "cor-3.5",
                                            "thm-3.8", "thm-3.9"};
  const std::vector<std::string> sec3_triples{"thm-3.12", "thm-3.13"};
  const std::vector<std::string> sec4{
      "thm-4.4",  "cor-4.5",  "cor-4.6",  "thm-4.9",  "cor-4.10",
      "thm-4.13", "cor-4.14", "thm-4.17", "cor-4.18", "cor-4.19"};
  // cor-4.5/4.6 state a bipartite class with no girth condition, so the
  // girth5 family alone would miss their C4-containing instances
  const std::vector<std::string> sec4_s{"thm-4.4", "cor-4.5", "cor-4.6"};
  const std::vector<Spec> specs{
      {sec2, Family::AllConnected, 6, 0},
      {sec2_girth, Family::Girth5, 7, 200},
      {sec3_pairs, Family::AllConnected, 5, 0},
      {sec3_pairs, Family::Stars, 6, 0},
      {sec3_triples, Family::AllConnected, 4, 0},
      {sec3_triples, Family::Stars, 5, 0},
      {sec4, Family::AllConnected, 4, 0},
      {sec4, Family::Girth5, 6, 0},
      {sec4_s, Family::Bipartite, 6, 2000},
  };

  std::string findings;
  {
    std::ifstream in(findings_path);
    std::stringstream buf;
    buf << in.rdbuf();
    findings = buf.str();
  }

  fs::path outdir = fs::temp_directory_path() / "leapx_acceptance";
  fs::create_directories(outdir);

  bool ok = true;
  std::ostringstream detail;
  std::set<std::string> clean_violated, undocumented;
  long long total_violations = 0, evidence_failures = 0;
  int sweep_no = 0;

  for (const auto& spec : specs) {
    SweepConfig sc;
    sc.claim_ids = spec.claims;
    sc.family = spec.family;
    sc.max_n = spec.max_n;
    sc.samples = spec.samples;
    sc.seed = 1;
    auto rep = sweep(sc);

    std::ofstream out(outdir / ("sweep_" + std::to_string(sweep_no++) + ".json"));
    out << sweep_report_json(rep).dump(2) << "\n";

    for (const auto& v : rep.violations) {
      ++total_violations;
      if (kMustBeClean.count(v.claim_id)) clean_violated.insert(v.claim_id);
      if (!v.lower && !v.upper && v.witness.empty()) ++evidence_failures;
      if (findings.find(v.claim_id) == std::string::npos)
        undocumented.insert(v.claim_id);
    }
  }

  ok &= clean_violated.empty() && undocumented.empty() &&
        evidence_failures == 0;
  detail << "audit sweeps over " << specs.size() << " family specs, reports in "
         << outdir.string() << "; " << total_violations
         << " violations, all with integer evidence";
  if (!clean_violated.empty()) {
    detail << "; UNEXPECTED violations in:";
    for (const auto& id : clean_violated) detail << " " << id;
  }
  if (!undocumented.empty()) {
    detail << "; undocumented violating claims:";
    for (const auto& id : undocumented) detail << " " << id;
  }
  if (evidence_failures > 0)
    detail << "; " << evidence_failures << " violations lacked evidence";
  report_line(6, ok, detail.str());
}

void criterion_7_determinism() {
  bool ok = true;

  SweepConfig sc;
  sc.claim_ids = {"thm-2.5", "thm-3.4", "thm-4.9", "cor-3.5"};
  sc.family = Family::Girth5;
  sc.max_n = 6;
  sc.samples = 50;
  sc.seed = 42;
  auto a = sweep_report_json(sweep(sc)).dump(2);
  auto b = sweep_report_json(sweep(sc)).dump(2);
  ok &= a == b;

  int roundtrips = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    int n = 2 + static_cast<int>(seed % 50);
    auto g = random_connected(n, 0.2 + 0.3 * static_cast<double>(seed % 3), seed);
    if (parse_graph6(write_graph6(g)) == g) ++roundtrips;
  }
  ok &= roundtrips == 1000;

  std::ostringstream detail;
  detail << "byte-identical repeated sweep and " << roundtrips
         << "/1000 graph6 round trips";
  report_line(7, ok, detail.str());
}

}  // namespace

int main() {
  fs::path source_dir = LEAPX_SOURCE_DIR;

  criterion_1_structural();
  run_claims_exhaustive(
      2,
      {"lem-2.3", "lem-2.9.i", "lem-2.9.ii", "lem-2.13.i", "lem-2.13.ii",
       "lem-2.17.i", "lem-2.17.ii"},
      "conditional equalities exhaustive n<=6 (equality exactly on the stated "
      "class)");
  run_claims_exhaustive(
      3,
      {"lem-2.1.i", "lem-2.1.ii", "lem-2.1.bip", "lem-2.8.i", "lem-2.8.ii",
       "lem-2.12.i", "lem-2.12.ii", "lem-2.16.i", "lem-2.16.ii"},
      "eccentricity sandwiches exhaustive n<=6, with the bipartite "
      "sharpening");
  criterion_4_spot_values();
  criterion_5_counterexample();
  criterion_6_audit_sweeps(source_dir / "docs" / "FINDINGS.md");
  criterion_7_determinism();

  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "FAILURES PRESENT")
            << "\n";
  return failures;
}
