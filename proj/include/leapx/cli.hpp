#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace leapx {

/// Everything a CLI invocation needs; run() is pure given the config and the
/// input files, so identical configs produce byte-identical reports.
struct RunConfig {
  std::string command;  // indices|construct|join|corona|verify|counterexample
  std::vector<std::string> inputs;  // file paths, "-" for stdin
  std::string format = "graph6";    // graph6 | edgelist
  std::string op;                   // construct: line|S|Q|R|T
  std::string kind;                 // join: vertex|edge|vertex-edge; corona: S|Q|R|T
  std::vector<std::string> claims = {"all"};
  std::string family = "all-connected";
  int max_n = 5;
  int samples = 0;
  std::uint64_t seed = 0;
  std::string property;
  std::string output = "human";  // json | csv | human
  std::string provenance_out;    // sidecar file for construct/join/corona
  std::string custom_file;       // graph6 file backing --family custom
  std::string h_file;            // optional override of the h-graph set
};

/// Exit status: 0 success, 1 usage or I/O error, 2 = a verify sweep found at
/// least one VIOLATION (the report is still emitted).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Exhaustive cap for this process: the hard cap, lowered (never raised) by
/// the LEAPX_MAX_N environment variable.
int effective_exhaustive_cap();

}  // namespace leapx
