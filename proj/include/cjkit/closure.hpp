#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cjkit/worldset.hpp"

namespace cjkit {

// Which generation rules the fixpoint applies. Each mirrors the
// like-numbered semantic condition, read left to right as "whenever the
// left side holds, add the right side's membership". Rules 2 and 3 are
// the baseline; rule 4 turns the result into a genuinely well-formed
// map, rule 5 is the conjectured extra condition.
struct ClosureOptions {
  bool close2 = true;
  bool close3 = true;
  bool close4 = false;
  bool close5 = false;
  int max_iterations = 10000;

  bool operator==(const ClosureOptions&) const = default;
};

// One membership added during closure, with the rule instance that
// produced it. premise_context/premise1 (and premise2 for rule 3) name
// the memberships the instance consumed:
//   rule 2: premise1 in pi(context), added has the same trace on context
//   rule 3: premise1, premise2 in pi(context), added is their intersection
//   rule 4: premise1 in pi(premise_context), premise1 and premise_context
//           below context; added = (context \ premise_context) | premise1
//   rule 5: premise1 in pi(premise_context), context below premise_context,
//           context meets premise1; added = premise1
struct ClosureStep {
  int rule;
  WorldSet context;
  WorldSet added;
  WorldSet premise_context;
  WorldSet premise1;
  WorldSet premise2 = 0;  // rule 3 only

  bool operator==(const ClosureStep&) const = default;
};

struct ClosureReport {
  bool consistent = true;
  ObMap ob;  // the fixpoint (diagnostic when inconsistent)

  // Sweeps that changed the map, plus the final confirming sweep.
  int iterations = 0;
  // Memberships added, indexed by rule number (entries 2..5 used).
  std::array<std::size_t, 6> added_by_rule{};

  // Inconsistency data: the first context that received the empty set,
  // and the rule chain deriving it from derivation_base. The chain is
  // empty when the base map already contained the empty set.
  WorldSet bad_context = 0;
  std::vector<ClosureStep> derivation;
  ObMap derivation_base;
};

// Establishes O(Y|Z): adds Y to pi(X) for every subset X of Z that meets
// Y. Throws DisjointSeed when Y and Z do not intersect.
ObMap seed_conditional(ObMap ob, WorldSet y, WorldSet z);

// Runs the enabled rules to a fixpoint, then judges the result.
//
// The rules are monotone on a finite lattice, so a fixpoint always
// exists and is independent of application order; sweeps visit contexts
// in ascending order and rules in the order 2,3,4,5 so iteration counts
// and recorded derivations are reproducible. When rule 5 is enabled it
// joins only after the others have stabilized, which makes an
// inconsistency chain start from the stable map the way the rule's
// critics would present it.
//
// If the empty set was generated anywhere, the report is inconsistent
// and carries a replayable derivation of the first such membership.
// Otherwise the result is verified against every enabled condition plus
// condition (1) before being returned.
ClosureReport close(const ObMap& ob, WorldSet universe, const ClosureOptions& opts);

// Re-applies report.derivation from report.derivation_base, checking
// each step's premises; true when the chain is sound and ends with the
// empty set entering pi(report.bad_context).
bool replay_derivation(const ClosureReport& report);

std::string describe_step(const ClosureStep& step, const std::vector<std::string>& names);

}  // namespace cjkit
