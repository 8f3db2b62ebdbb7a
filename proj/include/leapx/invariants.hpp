#pragma once

#include "leapx/graph.hpp"

namespace leapx {

/// The five index functionals plus the auxiliary quantities the verifier
/// needs on both sides of an identity. All exact integers.
struct IndexReport {
  long long n = 0;
  long long m = 0;
  long long M1 = 0;      // sum of squared degrees
  long long LM1 = 0;     // sum of squared second degrees
  long long theta = 0;   // eccentricity sum
  long long xiC = 0;     // sum d1(v) * e(v)
  long long LxiC = 0;    // sum d2(v) * e(v)
  long long sum_d2 = 0;  // sum d2(v), kept separate from M1 - 2m on purpose

  bool operator==(const IndexReport&) const = default;
};

long long first_zagreb(const Graph& g);

// The remaining functionals are eccentricity-dependent and throw
// DisconnectedGraph on disconnected input. K1 (and the empty graph) are fine
// and score zero everywhere.
long long first_leap_zagreb(const Graph& g);
long long eccentricity_sum(const Graph& g);
long long ecc_connectivity(const Graph& g);
long long leap_ecc_connectivity(const Graph& g);

IndexReport index_report(const Graph& g);

}  // namespace leapx
