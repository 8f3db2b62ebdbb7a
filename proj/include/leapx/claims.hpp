#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "leapx/graph.hpp"

namespace leapx {

enum class StatementKind { Equality, LowerBound, UpperBound, Sandwich, CaseTable };
enum class ClaimStatus { EqualityHolds, Strict, BoundHolds, Violation, NotApplicable };

std::string statement_kind_name(StatementKind k);
std::string claim_status_name(ClaimStatus s);

/// Structured outcome of checking one registered statement on one instance.
/// A VIOLATION always carries either a witness or the full integer pair.
struct ClaimResult {
  std::string claim_id;
  std::string instance;  // graph6 of the inputs, ';'-separated
  ClaimStatus status = ClaimStatus::NotApplicable;
  long long lhs = 0;
  std::optional<long long> lower;
  std::optional<long long> upper;
  std::string witness;  // vertex or class where a table disagrees
  std::string note;     // free text, e.g. empirical attainment records
};

/// One numbered statement, registered as a checkable object. Applicability
/// failures yield NOT_APPLICABLE, never VIOLATION.
struct Claim {
  std::string id;
  StatementKind kind = StatementKind::Equality;
  int arity = 1;
  std::string description;
  /// Reconciled typos and encoded readings live here, auditable per claim.
  std::string status_note;
  std::function<bool(const std::vector<const Graph*>&)> applicable;
  std::function<ClaimResult(const std::vector<const Graph*>&)> check;
};

/// All registered statements, ids unique, in document order.
const std::vector<Claim>& claim_registry();
const Claim* find_claim(const std::string& id);

/// Expands ids, supporting "all" and a trailing '*' wildcard.
/// Throws UnknownClaim when a pattern matches nothing.
std::vector<std::string> resolve_claim_ids(const std::vector<std::string>& patterns);

ClaimResult check_claim(const std::string& claim_id,
                        const std::vector<const Graph*>& instance);
ClaimResult check_claim(const std::string& claim_id,
                        const std::vector<Graph>& instance);

enum class Family { AllConnected, Trees, Bipartite, Girth5, Stars, Custom };

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

/// Graphs of the family with at most max_n vertices, canonical order
/// (n ascending, then adjacency mask). All families except Custom are
/// filtered exhaustive enumerations, capped at kExhaustiveCap.
std::vector<Graph> build_family(Family family, int max_n,
                                const std::vector<Graph>& custom = {});

/// The h-graphs used for arity-2/3 sweeps unless overridden.
std::vector<Graph> default_h_set();

struct SweepConfig {
  std::vector<std::string> claim_ids;  // already resolved
  Family family = Family::AllConnected;
  int max_n = 5;
  int samples = 0;  // 0 = exhaustive; otherwise sample that many instances
  std::uint64_t seed = 0;
  std::vector<Graph> custom;  // Family::Custom inputs
  std::vector<Graph> h_set;   // empty = default_h_set()
};

struct ClaimTally {
  long long equality_holds = 0;
  long long strict = 0;
  long long bound_holds = 0;
  long long violation = 0;
  long long not_applicable = 0;
  long long total() const {
    return equality_holds + strict + bound_holds + violation + not_applicable;
  }
};

struct SweepReport {
  std::string family;
  int max_n = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> h_set;  // graph6
  std::vector<std::pair<std::string, ClaimTally>> tallies;
  std::vector<ClaimResult> violations;  // sorted by (claim, instance)
  bool has_violations() const { return !violations.empty(); }
};

/// Checks every requested claim over the family (crossed with the h-set for
/// arity 2/3). Deterministic given the config; collects violations instead
/// of aborting.
SweepReport sweep(const SweepConfig& config);

struct Counterexample {
  std::string property;
  std::string family;
  int max_n = 0;
  bool found = false;
  Graph graph;
  int witness_vertex = -1;
  long long expected = 0;
  long long actual = 0;
};

/// Registered refutable properties, searchable by exhaustive enumeration.
std::vector<std::string> counterexample_properties();

/// Smallest-n labeled counterexample in canonical enumeration order, or
/// found = false. Family restricts the search space (AllConnected or
/// Bipartite are the useful ones).
Counterexample find_counterexample(const std::string& property_id, int max_n,
                                   Family family = Family::AllConnected);

}  // namespace leapx
