#pragma once

// Random generators shared by the property-style tests: formulas for the
// parser round-trip, and seeded-and-closed models for the validity suite.

#include <random>
#include <string>
#include <vector>

#include "cjkit/closure.hpp"
#include "cjkit/formula.hpp"
#include "cjkit/model.hpp"

namespace testgen {

using cjkit::Formula;
using cjkit::WorldSet;

inline Formula random_formula(std::mt19937& rng, int depth) {
  static const std::vector<std::string> atoms{"A", "B", "C", "p", "q"};
  std::uniform_int_distribution<int> pick_leaf(0, 6);
  std::uniform_int_distribution<int> pick_node(0, 13);
  if (depth <= 0 || pick_leaf(rng) == 0) {
    switch (pick_leaf(rng)) {
      case 0: return Formula::top();
      case 1: return Formula::bottom();
      default: {
        std::uniform_int_distribution<std::size_t> a(0, atoms.size() - 1);
        return Formula::atom(atoms[a(rng)]);
      }
    }
  }
  auto sub = [&] { return random_formula(rng, depth - 1); };
  switch (pick_node(rng)) {
    case 0: return Formula::neg(sub());
    case 1: return Formula::conj(sub(), sub());
    case 2: return Formula::disj(sub(), sub());
    case 3: return Formula::implies(sub(), sub());
    case 4: return Formula::iff(sub(), sub());
    case 5: return Formula::box_strong(sub());
    case 6: return Formula::dia_strong(sub());
    case 7: return Formula::box_actual(sub());
    case 8: return Formula::dia_actual(sub());
    case 9: return Formula::obl_actual(sub());
    case 10: return Formula::obl_ideal(sub());
    case 11: return Formula::obl_cond(sub(), sub());
    case 12: return Formula::viol(sub());
    default: {
      std::uniform_int_distribution<std::size_t> a(0, atoms.size() - 1);
      return Formula::atom(atoms[a(rng)]);
    }
  }
}

// A model on 3 or 4 worlds obtained by seeding random conditional
// obligations and closing under rules 2, 3, 4; nullopt when the draw was
// inconsistent. Atoms A, B, C get random truth sets.
inline std::optional<cjkit::Model> random_closed_model(std::mt19937& rng) {
  std::uniform_int_distribution<int> nw(3, 4);
  const int n = nw(rng);
  const WorldSet universe = cjkit::full_set(n);
  std::uniform_int_distribution<WorldSet> any(0, universe);

  std::vector<std::string> names;
  for (int w = 0; w < n; ++w) names.push_back(std::string(1, static_cast<char>('a' + w)));

  std::vector<WorldSet> av, pv;
  for (int w = 0; w < n; ++w) {
    const WorldSet self = WorldSet{1} << w;
    WorldSet p = self | any(rng);
    WorldSet a = self | (any(rng) & p);
    av.push_back(a);
    pv.push_back(p);
  }

  std::map<std::string, WorldSet> valuation{
      {"A", any(rng)}, {"B", any(rng)}, {"C", any(rng)}};

  cjkit::ObMap ob;
  std::uniform_int_distribution<int> n_seeds(1, 3);
  const int k = n_seeds(rng);
  for (int i = 0; i < k; ++i) {
    WorldSet y = 0, z = 0;
    while (!cjkit::overlaps(y, z)) {
      y = any(rng);
      z = any(rng);
    }
    ob = cjkit::seed_conditional(std::move(ob), y, z);
  }

  cjkit::ClosureOptions opts;
  opts.close4 = true;
  cjkit::ClosureReport rep = cjkit::close(ob, universe, opts);
  if (!rep.consistent) return std::nullopt;
  return cjkit::make_model(names, valuation, av, pv, rep.ob);
}

}  // namespace testgen
