#pragma once

#include <string>

#include "cjkit/worldset.hpp"

// Built-in scenarios used by `cjkit repro` and the test suites. Each is
// self-contained: the scenario text plus, where the expected outcome is
// a whole table, that table.

namespace cjkit::fixtures {

// Two worlds; a conditional obligation with an unreachable consequent.
// Refutes O(B|A) & <>A -> <>B.
extern const std::string kCountermodelScn;

// Three worlds carrying a consistent, logically independent reading of
// the classic help/tell obligation set, with its full obligation table.
extern const std::string kC3Scn;

// Four worlds, dog/sign/fence obligations seeded and closed under the
// baseline rules 2+3.
extern const std::string kDog4Scn;

// Same seeds closed under rules 2+3+4, which repairs the baseline
// table's condition-(4) gaps.
extern const std::string kDog4FullScn;

// Three worlds, single seed O(A|true) with a one-world truth set;
// closing under 2+3+4 forces every context containing that world to the
// upset of it.
extern const std::string kLemma3Scn;

// The same seed with rule 5 enabled as well, which is inconsistent.
extern const std::string kThmCond5Scn;

// The two-world counter-model closed under rule 5: pi({w}) becomes U({w}).
extern const std::string kCond5UpsetScn;

// The fixpoint of the baseline dog4 closure, entry for entry.
ObMap dog4_baseline_table();

}  // namespace cjkit::fixtures
