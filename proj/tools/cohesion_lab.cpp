#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cohesionlab/errors.hpp"
#include "cohesionlab/scenario.hpp"

namespace {

int read_file(const std::string& path, std::string& out) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    return 2;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cohesion-lab: exact verification scenarios over algebras, presheaves and rigs"};
  app.require_subcommand(1);

  std::string file;
  clab::RunConfig cfg;
  bool json = false;

  CLI::App* run = app.add_subcommand("run", "parse a scenario file and execute its checks");
  run->add_option("file", file, "scenario file")->required();
  run->add_flag("--json", json, "emit the deterministic structured report");
  run->add_flag("--fail-fast", cfg.fail_fast, "stop at the first non-passing check");
  run->add_option("--seed", cfg.seed, "seed for sampled property checks");
  run->add_option("--max-enumeration", cfg.max_enumeration, "enumeration node budget");
  run->add_option("--idempotent-degree-bound", cfg.idempotent_degree_bound,
                  "degree bound for connectedness certificates");

  CLI::App* validate = app.add_subcommand("validate", "parse and resolve a scenario file");
  validate->add_option("file", file, "scenario file")->required();

  CLI::App* catalog = app.add_subcommand("catalog", "list built-in rigs, sites and check kinds");

  CLI11_PARSE(app, argc, argv);

  if (catalog->parsed()) {
    std::cout << clab::catalog_text();
    return 0;
  }

  std::string text;
  if (int rc = read_file(file, text)) return rc;

  clab::Scenario sc;
  try {
    sc = clab::parse_scenario(text);
  } catch (const clab::ParseError& e) {
    std::cerr << file << ": " << e.what() << "\n";
    return 3;
  } catch (const clab::Error& e) {
    std::cerr << file << ": " << e.what() << "\n";
    return 3;
  }

  if (validate->parsed()) {
    std::cout << "ok: " << sc.algebras.size() + sc.sites.size() + sc.presheaves.size() +
                              sc.rigs.size() + sc.subsets.size() + sc.intervals.size()
              << " definitions, " << sc.checks.size() << " checks\n";
    return 0;
  }

  clab::Report rep = clab::run(sc, cfg);
  std::cout << (json ? clab::report_json(rep, cfg) : clab::report_text(rep));
  return rep.exit_code();
}
