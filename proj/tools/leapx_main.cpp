#include <iostream>

#include <CLI11.hpp>

#include "leapx/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"leapx: leap eccentric connectivity indices on subdivision "
               "constructions, with a claim-audit harness"};
  app.require_subcommand(1);

  leapx::RunConfig cfg;

  auto add_io = [&](CLI::App* sub, bool multi) {
    sub->add_option("inputs", cfg.inputs,
                    multi ? "input graph files ('-' for stdin)"
                          : "input graph file ('-' for stdin)")
        ->required();
    sub->add_option("--format", cfg.format, "graph6|edgelist")
        ->default_val("graph6");
    sub->add_option("--output", cfg.output, "json|csv|human")
        ->default_val("human");
  };

  auto* indices = app.add_subcommand("indices", "compute the index report");
  add_io(indices, true);

  auto* construct =
      app.add_subcommand("construct", "emit a derived graph with provenance");
  add_io(construct, false);
  construct->add_option("--op", cfg.op, "line|S|Q|R|T")->required();
  construct->add_option("--provenance-out", cfg.provenance_out,
                        "write the provenance sidecar JSON here");

  auto* join = app.add_subcommand("join", "subdivision join of two or three graphs");
  add_io(join, true);
  join->add_option("--kind", cfg.kind, "vertex|edge|vertex-edge")->required();
  join->add_option("--provenance-out", cfg.provenance_out,
                   "write the provenance sidecar JSON here");

  auto* corona = app.add_subcommand("corona", "double corona over S|Q|R|T");
  add_io(corona, true);
  corona->add_option("--kind", cfg.kind, "S|Q|R|T")->required();
  corona->add_option("--provenance-out", cfg.provenance_out,
                     "write the provenance sidecar JSON here");

  auto* verify = app.add_subcommand("verify", "sweep registered claims over a family");
  verify->add_option("--claims", cfg.claims,
                     "claim ids, 'all', or a prefix like lem-2.*")
      ->delimiter(',');
  verify->add_option("--family", cfg.family,
                     "all-connected|trees|bipartite|girth5|stars|custom")
      ->default_val("all-connected");
  verify->add_option("--max-n", cfg.max_n, "largest base-graph order")
      ->default_val(5);
  verify->add_option("--samples", cfg.samples,
                     "sample this many instances (0 = exhaustive)")
      ->default_val(0);
  verify->add_option("--seed", cfg.seed, "seed for sampling")->default_val(0);
  verify->add_option("--custom-file", cfg.custom_file,
                     "graph6 file backing --family custom");
  verify->add_option("--h-graphs", cfg.h_file,
                     "graph6 file overriding the h-graph set");
  verify->add_option("--output", cfg.output, "json|csv|human")
      ->default_val("human");

  auto* ce = app.add_subcommand("counterexample",
                                "search for a smallest labeled counterexample");
  ce->add_option("--property", cfg.property, "registered property id")
      ->required();
  ce->add_option("--max-n", cfg.max_n, "largest order searched")->default_val(5);
  ce->add_option("--family", cfg.family, "all-connected|bipartite")
      ->default_val("all-connected");
  ce->add_option("--output", cfg.output, "json|human")->default_val("human");

  CLI11_PARSE(app, argc, argv);

  cfg.command = app.get_subcommands().front()->get_name();
  return leapx::run(cfg, std::cout, std::cerr);
}
