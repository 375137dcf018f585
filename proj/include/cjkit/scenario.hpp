#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cjkit/closure.hpp"
#include "cjkit/conditions.hpp"
#include "cjkit/formula.hpp"
#include "cjkit/model.hpp"

namespace cjkit {

// A model description in the line-oriented scenario format:
//
//   worlds: a b c d            # declared first, once
//   atom Dog: a b d            # truth set of an atom
//   av a: a b                  # defaults: av(w) = {w}
//   pv a: a b c d              # defaults: pv(w) = W
//   ob {z}: {z} {x z}          # explicit family for one context
//   seed: ~Dog given true      # make O(~Dog | true) hold; propositional sides
//   options: close2 close3     # closure rules; "noclose" skips closure
//   check a true: <a>Fence     # expectation at a world
//
// '#' starts a comment. Without an options line, seeds imply the
// baseline close2+close3 and a seedless file is used as written.
struct CheckLine {
  int world;
  Formula formula;
  bool expected;
  bool operator==(const CheckLine&) const = default;
};

struct Scenario {
  std::vector<std::string> worlds;
  std::vector<std::pair<std::string, WorldSet>> atoms;  // declaration order
  std::vector<WorldSet> av, pv;                         // resolved, one per world
  ObMap ob;                                             // explicit entries
  std::vector<std::pair<Formula, Formula>> seeds;       // (consequent, antecedent)
  ClosureOptions options;
  bool do_close = false;
  std::vector<CheckLine> checks;

  bool operator==(const Scenario&) const = default;
};

Scenario parse_scenario(const std::string& text);

// Deterministic text such that parse(serialize(s)) == s.
std::string serialize_scenario(const Scenario& s);

// Seeds the explicit map, closes it per the options, assembles the
// model, and judges it against conditions (1)-(4) regardless of which
// rules were enabled; violations of conditions the closure did not
// enforce come back as warnings rather than failures.
struct ScenarioBuild {
  ClosureReport closure;
  std::optional<Model> model;  // absent when closure was inconsistent
  ConditionReport warnings;
};

ScenarioBuild build_scenario_model(const Scenario& s);

struct CheckOutcome {
  CheckLine line;
  bool actual = false;
  bool pass = false;
};

struct ScenarioReport {
  ScenarioBuild build;
  std::vector<CheckOutcome> checks;

  bool checks_pass() const;
  // Built successfully and every check line matched.
  bool ok() const;
};

ScenarioReport run_scenario(const Scenario& s);

// One line per context in ascending mask order:
//   {a, b}, {{b}, {b, c}}
// Families print in (cardinality, mask) order; output is byte-identical
// across runs and platforms.
std::string format_ob_listing(const Model& m);

}  // namespace cjkit
