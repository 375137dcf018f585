#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cjkit/model.hpp"

namespace cjkit {

// Visits every model on the given number of worlds exactly once:
// all frames with w in av(w) sub pv(w), all valuations of the named
// atoms, and all obligation maps satisfying conditions (1)-(4).
//
// Deterministic order: frames advance slowest (per-world (av,pv) pairs,
// lexicographic), then valuations (first atom slowest), then obligation
// maps. Throws TooLarge beyond 2 worlds or 3 atoms; the map count alone
// makes 3 worlds infeasible to exhaust.
void enumerate_models(int n_worlds, const std::vector<std::string>& atoms,
                      const std::function<void(const Model&)>& visit);

std::size_t count_models(int n_worlds, const std::vector<std::string>& atoms);

// The obligation maps alone: every map over P(W) passing (1)-(4),
// ascending in the per-context family encoding.
std::vector<ObMap> enumerate_valid_obmaps(int n_worlds);

}  // namespace cjkit
