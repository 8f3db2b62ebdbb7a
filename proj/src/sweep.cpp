#include <algorithm>
#include <random>
#include <set>

#include "leapx/claims.hpp"
#include "leapx/constructions.hpp"
#include "leapx/io.hpp"

namespace leapx {
namespace {

bool family_member(Family f, const Graph& g) {
  switch (f) {
    case Family::AllConnected: return true;  // enumeration is connected-only
    case Family::Trees: return g.edge_count() == g.vertex_count() - 1;
    case Family::Bipartite: return is_bipartite(g);
    case Family::Girth5: return is_c3_c4_free(g);
    case Family::Stars: return is_star(g);
    case Family::Custom: return true;
  }
  return false;
}

void for_each_family(Family family, int max_n, const std::vector<Graph>& custom,
                     const std::function<void(const Graph&)>& fn) {
  if (family == Family::Custom) {
    for (const auto& g : custom) fn(g);
    return;
  }
  enumerate_connected(max_n, [&](const Graph& g) {
    if (family_member(family, g)) fn(g);
  });
}

// Deterministic sample of `want` distinct indices below `total`.
std::set<std::uint64_t> sample_indices(std::uint64_t total, std::uint64_t want,
                                       std::mt19937_64& rng) {
  std::set<std::uint64_t> chosen;
  while (chosen.size() < want) chosen.insert(rng() % total);
  return chosen;
}

struct SelectedTuples {
  bool exhaustive = true;
  std::set<std::uint64_t> indices;  // flattened, when sampled

  bool contains(std::uint64_t idx) const {
    return exhaustive || indices.count(idx) > 0;
  }
};

SelectedTuples select(std::uint64_t total, int samples, std::mt19937_64& rng) {
  SelectedTuples sel;
  if (samples > 0 && static_cast<std::uint64_t>(samples) < total) {
    sel.exhaustive = false;
    sel.indices = sample_indices(total, samples, rng);
  }
  return sel;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::AllConnected: return "all-connected";
    case Family::Trees: return "trees";
    case Family::Bipartite: return "bipartite";
    case Family::Girth5: return "girth5";
    case Family::Stars: return "stars";
    case Family::Custom: return "custom";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
  if (name == "all-connected") return Family::AllConnected;
  if (name == "trees") return Family::Trees;
  if (name == "bipartite") return Family::Bipartite;
  if (name == "girth5") return Family::Girth5;
  if (name == "stars") return Family::Stars;
  if (name == "custom") return Family::Custom;
  return std::nullopt;
}

std::vector<Graph> build_family(Family family, int max_n,
                                const std::vector<Graph>& custom) {
  std::vector<Graph> out;
  for_each_family(family, max_n, custom,
                  [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::vector<Graph> default_h_set() {
  return {Graph::complete(1), Graph::complete(2), Graph::path(3),
          Graph::cycle(4), Graph::complete(3)};
}

SweepReport sweep(const SweepConfig& config) {
  std::vector<const Claim*> claims;
  for (const auto& id : config.claim_ids) {
    const Claim* c = find_claim(id);
    if (!c) throw UnknownClaim("unknown claim id: " + id);
    claims.push_back(c);
  }
  const std::vector<Graph> h_set =
      config.h_set.empty() ? default_h_set() : config.h_set;
  const std::uint64_t hn = h_set.size();

  bool want_arity[4] = {false, false, false, false};
  for (const Claim* c : claims) want_arity[c->arity] = true;

  std::uint64_t g_total = 0;
  for_each_family(config.family, config.max_n, config.custom,
                  [&](const Graph&) { ++g_total; });

  // One seed stream, consumed in a fixed order regardless of claim order.
  std::mt19937_64 rng(config.seed);
  SelectedTuples sel1, sel2, sel3;
  if (want_arity[1]) sel1 = select(g_total, config.samples, rng);
  if (want_arity[2]) sel2 = select(g_total * hn, config.samples, rng);
  if (want_arity[3]) sel3 = select(g_total * hn * hn, config.samples, rng);

  SweepReport report;
  report.family = family_name(config.family);
  report.max_n = config.max_n;
  report.samples = config.samples;
  report.seed = config.seed;
  for (const auto& h : h_set) report.h_set.push_back(write_graph6(h));
  for (const Claim* c : claims) report.tallies.emplace_back(c->id, ClaimTally{});

  auto tally_of = [&](const std::string& id) -> ClaimTally& {
    for (auto& [cid, t] : report.tallies)
      if (cid == id) return t;
    throw Error("tally lookup failed");
  };

  auto record = [&](const Claim* c, const std::vector<const Graph*>& inst) {
    ClaimResult r = check_claim(c->id, inst);
    ClaimTally& t = tally_of(c->id);
    switch (r.status) {
      case ClaimStatus::EqualityHolds: ++t.equality_holds; break;
      case ClaimStatus::Strict: ++t.strict; break;
      case ClaimStatus::BoundHolds: ++t.bound_holds; break;
      case ClaimStatus::NotApplicable: ++t.not_applicable; break;
      case ClaimStatus::Violation:
        ++t.violation;
        if (r.note.empty()) r.note = c->status_note;
        report.violations.push_back(std::move(r));
        break;
    }
  };

  std::uint64_t gi = 0;
  for_each_family(config.family, config.max_n, config.custom,
                  [&](const Graph& g) {
    if (want_arity[1] && sel1.contains(gi)) {
      std::vector<const Graph*> inst{&g};
      for (const Claim* c : claims)
        if (c->arity == 1) record(c, inst);
    }
    if (want_arity[2]) {
      for (std::uint64_t hi = 0; hi < hn; ++hi) {
        if (!sel2.contains(gi * hn + hi)) continue;
        std::vector<const Graph*> inst{&g, &h_set[hi]};
        for (const Claim* c : claims)
          if (c->arity == 2) record(c, inst);
      }
    }
    if (want_arity[3]) {
      for (std::uint64_t hi = 0; hi < hn; ++hi)
        for (std::uint64_t hj = 0; hj < hn; ++hj) {
          if (!sel3.contains(gi * hn * hn + hi * hn + hj)) continue;
          std::vector<const Graph*> inst{&g, &h_set[hi], &h_set[hj]};
          for (const Claim* c : claims)
            if (c->arity == 3) record(c, inst);
        }
    }
    ++gi;
  });

  std::sort(report.violations.begin(), report.violations.end(),
            [](const ClaimResult& a, const ClaimResult& b) {
              if (a.claim_id != b.claim_id) return a.claim_id < b.claim_id;
              return a.instance < b.instance;
            });
  return report;
}

namespace {

struct Property {
  std::string id;
  std::string description;
  // Returns a witness (vertex, expected, actual) when g refutes the property.
  std::function<std::optional<std::tuple<int, long long, long long>>(const Graph&)>
      refute;
};

const std::vector<Property>& property_registry() {
  static const std::vector<Property> props = {
      {"yarahmadi-s-ecc",
       "for every v in V(G), e(v|S(G)) = 2 e(v|G)",
       [](const Graph& g) -> std::optional<std::tuple<int, long long, long long>> {
         auto pg = eccentricities(g);
         auto s = subdivision(g);
         auto ps = eccentricities(s.graph);
         for (int v = 0; v < g.vertex_count(); ++v) {
           long long expected = 2LL * pg.ecc[v];
           long long actual = ps.ecc[s.original_index(v)];
           if (actual != expected) return std::tuple{v, expected, actual};
         }
         return std::nullopt;
       }},
  };
  return props;
}

}  // namespace

std::vector<std::string> counterexample_properties() {
  std::vector<std::string> out;
  for (const auto& p : property_registry()) out.push_back(p.id);
  return out;
}

Counterexample find_counterexample(const std::string& property_id, int max_n,
                                   Family family) {
  const Property* prop = nullptr;
  for (const auto& p : property_registry())
    if (p.id == property_id) prop = &p;
  if (!prop) throw UnknownProperty("unknown property id: " + property_id);

  Counterexample ce;
  ce.property = property_id;
  ce.family = family_name(family);
  ce.max_n = max_n;
  enumerate_connected_until(max_n, [&](const Graph& g) {
    if (!family_member(family, g)) return false;
    auto witness = prop->refute(g);
    if (!witness) return false;
    ce.found = true;
    ce.graph = g;
    std::tie(ce.witness_vertex, ce.expected, ce.actual) = *witness;
    return true;
  });
  return ce;
}

}  // namespace leapx
