#include "cjkit/enumerate.hpp"

#include "cjkit/conditions.hpp"
#include "cjkit/errors.hpp"

namespace cjkit {

namespace {

constexpr int kMaxEnumWorlds = 2;
constexpr int kMaxEnumAtoms = 3;

std::vector<std::string> world_names(int n) {
  return n == 1 ? std::vector<std::string>{"w"} : std::vector<std::string>{"w", "y"};
}

// All (av, pv) choices for one world, lexicographically ordered.
std::vector<std::pair<WorldSet, WorldSet>> frame_choices(int w, WorldSet universe) {
  std::vector<std::pair<WorldSet, WorldSet>> out;
  for (WorldSet av = 0; av <= universe; ++av) {
    if (!contains_world(av, w)) continue;
    for (WorldSet pv = av; pv <= universe; ++pv)
      if (subset_of(av, pv)) out.push_back({av, pv});
  }
  return out;
}

}  // namespace

std::vector<ObMap> enumerate_valid_obmaps(int n_worlds) {
  const WorldSet universe = full_set(n_worlds);
  const int n_contexts = 1 << n_worlds;
  const std::uint64_t n_families = std::uint64_t{1} << n_contexts;
  const std::vector<std::string> no_names;

  std::vector<ObMap> out;
  // Odometer over per-context family encodings; context 0 is slowest.
  std::vector<std::uint64_t> pick(n_contexts, 0);
  while (true) {
    ObMap ob;
    for (int ctx = 0; ctx < n_contexts; ++ctx)
      for (int member = 0; member < n_contexts; ++member)
        if ((pick[ctx] >> member) & 1) ob.add(static_cast<WorldSet>(ctx), static_cast<WorldSet>(member));

    bool ok = true;
    for (int k = 1; k <= 4 && ok; ++k)
      ok = check_pi_condition(universe, ob, k, no_names).empty();
    if (ok) out.push_back(std::move(ob));

    int at = n_contexts - 1;
    while (at >= 0 && pick[at] + 1 == n_families) pick[at--] = 0;
    if (at < 0) break;
    ++pick[at];
  }
  return out;
}

void enumerate_models(int n_worlds, const std::vector<std::string>& atoms,
                      const std::function<void(const Model&)>& visit) {
  if (n_worlds < 1 || n_worlds > kMaxEnumWorlds)
    throw TooLarge("model enumeration limited to " + std::to_string(kMaxEnumWorlds) + " worlds");
  if (atoms.size() > kMaxEnumAtoms)
    throw TooLarge("model enumeration limited to " + std::to_string(kMaxEnumAtoms) + " atoms");

  const WorldSet universe = full_set(n_worlds);
  const auto names = world_names(n_worlds);
  const auto obmaps = enumerate_valid_obmaps(n_worlds);

  std::vector<std::vector<std::pair<WorldSet, WorldSet>>> frames;
  for (int w = 0; w < n_worlds; ++w) frames.push_back(frame_choices(w, universe));

  std::vector<std::size_t> frame_pick(n_worlds, 0);
  while (true) {
    std::vector<WorldSet> av, pv;
    for (int w = 0; w < n_worlds; ++w) {
      av.push_back(frames[w][frame_pick[w]].first);
      pv.push_back(frames[w][frame_pick[w]].second);
    }

    std::vector<WorldSet> val_pick(atoms.size(), 0);
    while (true) {
      std::map<std::string, WorldSet> valuation;
      for (std::size_t i = 0; i < atoms.size(); ++i) valuation[atoms[i]] = val_pick[i];

      for (const ObMap& ob : obmaps)
        visit(make_model(names, valuation, av, pv, ob));

      if (atoms.empty()) break;
      int at = static_cast<int>(atoms.size()) - 1;
      while (at >= 0 && val_pick[at] == universe) val_pick[at--] = 0;
      if (at < 0) break;
      ++val_pick[at];
    }

    int at = n_worlds - 1;
    while (at >= 0 && frame_pick[at] + 1 == frames[at].size()) frame_pick[at--] = 0;
    if (at < 0) break;
    ++frame_pick[at];
  }
}

std::size_t count_models(int n_worlds, const std::vector<std::string>& atoms) {
  std::size_t n = 0;
  enumerate_models(n_worlds, atoms, [&](const Model&) { ++n; });
  return n;
}

}  // namespace cjkit
