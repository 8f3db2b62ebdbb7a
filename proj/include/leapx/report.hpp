#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "leapx/claims.hpp"
#include "leapx/compositions.hpp"
#include "leapx/constructions.hpp"
#include "leapx/coronas.hpp"
#include "leapx/invariants.hpp"

namespace leapx {

// All reports use ordered_json so field order is canonical and two runs with
// the same config serialize byte-identically.
using Json = nlohmann::ordered_json;

Json index_report_json(const IndexReport& rep, const std::string& graph6);
Json indices_report_json(const std::vector<std::pair<std::string, IndexReport>>& rows);
std::string indices_report_csv(const std::vector<std::pair<std::string, IndexReport>>& rows);

Json claim_result_json(const ClaimResult& r);
Json sweep_report_json(const SweepReport& r);
std::string sweep_report_csv(const SweepReport& r);

Json counterexample_json(const Counterexample& c);

/// Derived graph plus its provenance sidecar.
Json construction_json(const DerivedGraph& d);
Json construction_json(const JoinGraph& j);
Json construction_json(const CoronaGraph& c);

std::string human_index_report(const std::string& graph6, const IndexReport& rep);
std::string human_sweep_report(const SweepReport& r);

}  // namespace leapx
