#pragma once

#include <map>
#include <string>
#include <vector>

#include "cjkit/worldset.hpp"

namespace cjkit {

// A finite model <W, av, pv, ob, valuation>. Well-formedness requires
// w in av(w) and av(w) a subset of pv(w) for every world; construct via
// make_model, which checks exactly that. Values are immutable by
// convention after construction and safe to share across threads.
struct Model {
  std::vector<std::string> worlds;  // index -> display name
  std::vector<WorldSet> av;         // actually possible worlds, per world
  std::vector<WorldSet> pv;         // potentially possible worlds, per world
  ObMap ob;
  std::map<std::string, WorldSet> valuation;

  int world_count() const { return static_cast<int>(worlds.size()); }
  WorldSet universe() const { return full_set(world_count()); }
  std::string set_name(WorldSet s) const { return set_to_string(s, worlds); }
};

// Validates the frame and basic sanity of the pieces:
//   - worlds nonempty, names unique, at most kMaxWorldsEval of them
//   - av/pv defined for every world, all masks inside the universe
//   - w in av(w) and av(w) subset of pv(w)  (FrameViolation otherwise)
Model make_model(std::vector<std::string> worlds,
                 std::map<std::string, WorldSet> valuation,
                 std::vector<WorldSet> av,
                 std::vector<WorldSet> pv,
                 ObMap ob);

}  // namespace cjkit
