#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "orspan_cli/cli.hpp"

using orspan::cli::Command;
using orspan::cli::RunConfig;

int main(int argc, char** argv) {
  CLI::App app{"Build and evaluate oriented geometric spanners"};
  app.require_subcommand(1);

  RunConfig config;
  std::string algorithm = "oneD-greedy";
  std::string kind = "line";
  std::size_t guard = 0;

  const std::vector<std::string> algorithms{"oneD-1spanner", "oneD-2page",   "oneD-greedy",
                                            "oneD-optimal",  "twoD-complete", "twoD-greedy"};
  const std::vector<std::string> kinds{"line", "plane",     "convex",   "greedy-worst",
                                       "near-one", "k4", "nonconvex", "delaunay"};

  auto* build = app.add_subcommand("build", "Construct a spanner and write its edge list");
  build->add_option("--algorithm", algorithm, "Construction")
      ->check(CLI::IsMember(algorithms))
      ->required();
  build->add_option("--input", config.input, "Point file")->required();
  build->add_option("--output", config.output, "Edge file (default: stdout)");
  build->add_flag("--sort", config.sort, "Sort 1D input; indices stay in file order");
  build->add_option("--guard", guard, "Point limit for the optimal search");

  auto* dilation = app.add_subcommand("dilation", "Evaluate the oriented dilation of a graph");
  dilation->add_option("--input", config.input, "Point file")->required();
  dilation->add_option("--edges", config.edges, "Directed edge file")->required();
  dilation->add_option("--output", config.output, "JSON report (default: stdout)");
  dilation->add_flag("--all-pairs", config.all_pairs, "Include the per-pair table");

  auto* oracle = app.add_subcommand("oracle", "Compare fast algorithms with exhaustive search");
  oracle->add_option("--input", config.input, "Point file")->required();
  oracle->add_option("--edges", config.edges, "Undirected edges to orient (2D; default: greedy triangulation)");
  oracle->add_option("--output", config.output, "JSON report (default: stdout)");
  oracle->add_option("--guard", guard, "Point limit (1D) or edge limit (2D)");

  auto* render = app.add_subcommand("render", "Draw a graph as SVG");
  render->add_option("--input", config.input, "Point file")->required();
  render->add_option("--edges", config.edges, "Directed edge file")->required();
  render->add_option("--output", config.output, "SVG file (default: stdout)");

  auto* generate = app.add_subcommand("generate", "Write a random or fixture point set");
  generate->add_option("--kind", kind, "Instance kind")->check(CLI::IsMember(kinds));
  generate->add_option("--n", config.n, "Number of points")->check(CLI::PositiveNumber);
  generate->add_option("--seed", config.seed, "Random seed");
  generate->add_option("--eps", config.eps, "Fixture epsilon");
  generate->add_option("--separation", config.separation, "Delaunay fixture separation");
  generate->add_option("--output", config.output, "Point file (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  if (build->parsed()) config.command = Command::build;
  if (dilation->parsed()) config.command = Command::dilation;
  if (oracle->parsed()) config.command = Command::oracle;
  if (render->parsed()) config.command = Command::render;
  if (generate->parsed()) config.command = Command::generate;
  config.algorithm = *orspan::cli::parse_algorithm(algorithm);
  config.kind = *orspan::cli::parse_instance_kind(kind);
  if (guard > 0) config.guard = guard;

  return orspan::cli::run(config, std::cout, std::cerr);
}
