#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cohesionlab/algebra.hpp"
#include "cohesionlab/fincat.hpp"
#include "cohesionlab/interval.hpp"
#include "cohesionlab/presheaf.hpp"
#include "cohesionlab/rig.hpp"

namespace clab {

/// One `check` line of a scenario file.
struct Check {
  std::string kind;
  std::vector<std::string> args;       // positional arguments
  std::optional<std::string> expect;   // everything after `expect`, trimmed
  int line = 0;
  std::string text;                    // the original line, trimmed
};

/// Parsed scenario: named definitions plus an ordered list of checks. Sites
/// are heap-allocated so the presheaves' site pointers survive moves.
struct Scenario {
  std::string source;  // verbatim file text; parsing is lossless

  std::map<std::string, FpAlgebra> algebras;
  std::map<std::string, std::unique_ptr<FinCat>> sites;
  struct NamedPresheaf {
    std::string site;
    Presheaf obj;
  };
  std::map<std::string, NamedPresheaf> presheaves;
  std::map<std::string, FiniteRig> rigs;  // explicit definitions; catalog rigs need none
  struct NamedSubset {
    std::string rig;
    Subset members;
  };
  std::map<std::string, NamedSubset> subsets;
  std::map<std::string, QIntervalSet> intervals;

  std::vector<Check> checks;

  const std::string& str() const { return source; }
};

/// Full parse with definition-level validation: ParseError carries line and
/// column; dangling references throw UnresolvedName; malformed tables throw
/// the library's own Error types.
Scenario parse_scenario(const std::string& text, MonomialOrder order = MonomialOrder::Grevlex);

struct RunConfig {
  uint64_t max_enumeration = 10'000'000;
  unsigned idempotent_degree_bound = 4;
  MonomialOrder order = MonomialOrder::Grevlex;
  uint64_t seed = 0;
  bool fail_fast = false;  // implies serial execution (deterministic skip set)
  unsigned workers = 0;    // 0 = min(hardware, COHESION_LAB_WORKERS)
};

struct CheckResult {
  std::string check;             // original check line
  std::string verdict;           // "pass" | "fail" | "error" | "skipped"
  std::vector<std::string> notes;  // computed artifacts, certificates, errors
  double ms = 0.0;               // wall time; surfaced only in the text report
};

struct Report {
  std::vector<CheckResult> checks;  // same order as the scenario
  size_t passed = 0, failed = 0, errored = 0, skipped = 0;

  /// 0 all pass, 1 any failed, 2 any errored, 3 reserved for parse failures.
  int exit_code() const;
};

/// Executes the checks in order; each check's failure or error is captured in
/// its result and never aborts the run unless fail_fast is set.
Report run(const Scenario& s, const RunConfig& cfg);

std::string report_text(const Report& r);
/// Deterministic structured report: byte-identical for identical scenario and
/// config; contains no timing.
std::string report_json(const Report& r, const RunConfig& cfg);

/// Built-in rigs, sites, check kinds and shipped fixtures.
std::string catalog_text();

}  // namespace clab
