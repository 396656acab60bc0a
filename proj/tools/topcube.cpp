// topcube: command-line workbench over the cube of families.
//
//   topcube count --n 3
//   topcube verify thm5.3 --n 3 --atoms all
//   topcube demo example5.1 --bound 64 --json out.json

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "topcube/json_io.hpp"
#include "topcube/workbench.hpp"

namespace {

void add_common(CLI::App* cmd, topcube::CommandOptions& o, std::string& coords_file) {
  cmd->add_option("--n", o.n, "number of points");
  cmd->add_option("--seed", o.seed, "seed for random sampling");
  cmd->add_option("--bound", o.bound, "stabilization bound for symbolic chains");
  cmd->add_option("--coords", coords_file, "JSON file with a list of coordinate sets");
  cmd->add_option("--fixture", o.fixture, "fixture name or path");
  cmd->add_option("--fixtures-dir", o.fixture_dir, "directory holding named fixtures");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification workbench for the space of topologies on a set"};
  app.require_subcommand(1);

  topcube::CommandOptions opts;
  std::string coords_file, json_out, target;
  bool quiet = false;
  unsigned count_n = 0;

  auto* count = app.add_subcommand("count", "number of topologies on n points");
  count->add_option("--n", count_n, "number of points")->required();

  auto* verify = app.add_subcommand("verify", "run a verification check");
  verify->add_option("check", target, "check id")->required();
  add_common(verify, opts, coords_file);
  verify->add_option("--x", opts.x, "distinguished point");
  verify->add_option("--atoms", opts.atoms, "all, exhaustive, or sets like 0;1;0,1");
  verify->add_option("--samples", opts.samples, "random samples to draw");

  auto* demo = app.add_subcommand("demo", "run a symbolic construction over the naturals");
  demo->add_option("demo", target, "demo id")->required();
  add_common(demo, opts, coords_file);
  demo->add_option("--gens", opts.gens, "generator fixture");
  demo->add_option("--candidate", opts.candidate, "evens, odds, naturals, or a fixture");

  for (auto* cmd : {count, verify, demo}) {
    cmd->add_option("--json", json_out, "also write the report to this file");
    cmd->add_flag("--quiet", quiet, "print only the verdict line");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  topcube::Report report("none");
  try {
    if (!coords_file.empty())
      opts.coords = topcube::periodic_list_from_json(topcube::load_fixture(coords_file, opts));
    report = topcube::timed([&] {
      if (*count) return topcube::cmd_count(count_n);
      if (*verify) return topcube::cmd_verify(target, opts);
      return topcube::cmd_demo(target, opts);
    });
  } catch (const topcube::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const auto j = report.to_json();
  if (!json_out.empty()) {
    std::ofstream out(json_out);
    if (!out) {
      std::cerr << "error: cannot write " << json_out << "\n";
      return 2;
    }
    out << j.dump(2) << "\n";
  }
  if (quiet)
    std::cout << report.check() << ": " << topcube::to_string(report.verdict()) << "\n";
  else
    std::cout << j.dump(2) << "\n";
  return topcube::exit_code(report.verdict());
}
