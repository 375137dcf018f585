#include "cjkit/model.hpp"

#include <set>

namespace cjkit {

Model make_model(std::vector<std::string> worlds,
                 std::map<std::string, WorldSet> valuation,
                 std::vector<WorldSet> av,
                 std::vector<WorldSet> pv,
                 ObMap ob) {
  if (worlds.empty()) throw EmptyWorldSet();
  if (worlds.size() > static_cast<std::size_t>(kMaxWorldsEval))
    throw TooLarge("model limited to " + std::to_string(kMaxWorldsEval) + " worlds");

  std::set<std::string> seen;
  for (const auto& name : worlds)
    if (!seen.insert(name).second)
      throw InvalidArgument("duplicate world name: " + name);

  const int n = static_cast<int>(worlds.size());
  const WorldSet universe = full_set(n);
  if (av.size() != worlds.size() || pv.size() != worlds.size())
    throw InvalidArgument("av and pv must be defined for every world");

  for (int w = 0; w < n; ++w) {
    if (!subset_of(av[w], universe) || !subset_of(pv[w], universe))
      throw InvalidArgument("av/pv of " + worlds[w] + " mentions worlds outside the model");
    if (!contains_world(av[w], w))
      throw FrameViolation(w, worlds[w] + " is not in av(" + worlds[w] + ")");
    if (!subset_of(av[w], pv[w]))
      throw FrameViolation(w, "av(" + worlds[w] + ") is not contained in pv(" + worlds[w] + ")");
  }

  for (const auto& [atom, ext] : valuation)
    if (!subset_of(ext, universe))
      throw InvalidArgument("valuation of " + atom + " mentions worlds outside the model");

  for (const auto& [ctx, fam] : ob.entries()) {
    if (!subset_of(ctx, universe))
      throw InvalidArgument("ob context outside the model universe");
    for (WorldSet member : fam)
      if (!subset_of(member, universe))
        throw InvalidArgument("ob member outside the model universe");
  }

  Model m;
  m.worlds = std::move(worlds);
  m.av = std::move(av);
  m.pv = std::move(pv);
  m.ob = std::move(ob);
  m.valuation = std::move(valuation);
  return m;
}

}  // namespace cjkit
