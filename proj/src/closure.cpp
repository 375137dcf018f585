#include "cjkit/closure.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cjkit/conditions.hpp"
#include "cjkit/errors.hpp"

namespace cjkit {

ObMap seed_conditional(ObMap ob, WorldSet y, WorldSet z) {
  if (!overlaps(y, z)) throw DisjointSeed();
  for (WorldSet x = z;; x = (x - 1) & z) {
    if (overlaps(x, y)) ob.add(x, y);
    if (x == 0) break;
  }
  return ob;
}

namespace {

struct Engine {
  ObMap ob;
  WorldSet universe;
  const ClosureOptions& opts;

  std::vector<ClosureStep> steps;
  std::map<std::pair<WorldSet, WorldSet>, int> provenance;  // membership -> step index
  std::optional<std::pair<WorldSet, int>> first_empty;      // context, step index (-1: in base)
  std::array<std::size_t, 6> added_by_rule{};
  int changed_sweeps = 0;
  int total_sweeps = 0;

  Engine(const ObMap& ob0, WorldSet universe, const ClosureOptions& opts)
      : ob(ob0), universe(universe), opts(opts) {}

  // One rule pass over a snapshot of the map; additions apply at the end
  // of the pass, and the first pass to add a membership owns its
  // provenance.
  bool pass(int rule) {
    std::vector<ClosureStep> pending;
    std::set<std::pair<WorldSet, WorldSet>> pending_keys;
    auto propose = [&](ClosureStep s) {
      if (ob.contains(s.context, s.added)) return;
      if (!pending_keys.insert({s.context, s.added}).second) return;
      pending.push_back(s);
    };

    switch (rule) {
      case 2:
        for (const auto& [y, fam] : ob.entries())
          for (WorldSet z : fam)
            for (WorldSet x = 0; x <= universe; ++x)
              if ((x & y) == (z & y))
                propose({2, y, x, y, z});
        break;
      case 3:
        for (const auto& [y, fam] : ob.entries()) {
          const auto& mem = fam.members();
          for (std::size_t i = 0; i < mem.size(); ++i)
            for (std::size_t j = i + 1; j < mem.size(); ++j)
              propose({3, y, mem[i] & mem[j], y, mem[i], mem[j]});
        }
        break;
      case 4:
        for (const auto& [y, fam] : ob.entries())
          for (WorldSet x : fam) {
            if (!subset_of(x, y)) continue;
            for (WorldSet z = 0; z <= universe; ++z)
              if (subset_of(y, z))
                propose({4, z, (z & ~y) | x, y, x});
          }
        break;
      case 5:
        for (const auto& [x, fam] : ob.entries())
          for (WorldSet z : fam)
            for (WorldSet y = 0; y <= universe; ++y)
              if (subset_of(y, x) && overlaps(y, z))
                propose({5, y, z, x, z});
        break;
    }

    for (const ClosureStep& s : pending) {
      ob.add(s.context, s.added);
      provenance[{s.context, s.added}] = static_cast<int>(steps.size());
      if (s.added == 0 && !first_empty)
        first_empty = {s.context, static_cast<int>(steps.size())};
      steps.push_back(s);
      ++added_by_rule[s.rule];
    }
    return !pending.empty();
  }

  void run(const std::vector<int>& rules) {
    while (true) {
      if (++total_sweeps > opts.max_iterations) throw IterationLimit();
      bool changed = false;
      for (int r : rules) changed |= pass(r);
      if (!changed) break;
      ++changed_sweeps;
    }
  }

  std::vector<ClosureStep> extract_chain(int last_step) const {
    std::set<int> used;
    std::vector<int> stack{last_step};
    while (!stack.empty()) {
      int idx = stack.back();
      stack.pop_back();
      if (!used.insert(idx).second) continue;
      const ClosureStep& s = steps[idx];
      std::vector<std::pair<WorldSet, WorldSet>> needs{{s.premise_context, s.premise1}};
      if (s.rule == 3) needs.push_back({s.premise_context, s.premise2});
      for (const auto& key : needs) {
        auto it = provenance.find(key);
        if (it != provenance.end()) stack.push_back(it->second);
      }
    }
    std::vector<ClosureStep> chain;
    for (int idx : used) chain.push_back(steps[idx]);
    return chain;
  }
};

std::optional<WorldSet> context_with_empty(const ObMap& ob) {
  for (const auto& [ctx, fam] : ob.entries())
    if (fam.contains(0)) return ctx;
  return std::nullopt;
}

}  // namespace

ClosureReport close(const ObMap& ob0, WorldSet universe, const ClosureOptions& opts) {
  if (set_size(universe) > kMaxWorldsPowerset)
    throw TooLarge("closure limited to " + std::to_string(kMaxWorldsPowerset) + " worlds");
  if (opts.max_iterations <= 0) throw InvalidArgument("max_iterations must be positive");

  Engine eng(ob0, universe, opts);
  ClosureReport report;
  report.derivation_base = ob0;

  std::vector<int> base_rules;
  if (opts.close2) base_rules.push_back(2);
  if (opts.close3) base_rules.push_back(3);
  if (opts.close4) base_rules.push_back(4);

  if (auto pre = context_with_empty(ob0)) {
    // The input already breaks condition (1); nothing to derive.
    eng.first_empty = {*pre, -1};
  } else {
    eng.run(base_rules);
    if (!eng.first_empty && opts.close5) {
      // Rule 5 starts from the stabilized map, so a failure chain uses
      // the stable memberships as axioms.
      report.derivation_base = eng.ob;
      eng.steps.clear();
      eng.provenance.clear();
      std::vector<int> all_rules = base_rules;
      all_rules.push_back(5);
      eng.run(all_rules);
    }
  }

  report.ob = eng.ob;
  report.iterations = eng.changed_sweeps + 1;
  report.added_by_rule = eng.added_by_rule;

  if (eng.first_empty) {
    report.consistent = false;
    report.bad_context = eng.first_empty->first;
    if (eng.first_empty->second >= 0)
      report.derivation = eng.extract_chain(eng.first_empty->second);
    return report;
  }

  // A consistent fixpoint must satisfy what it closed under, plus (1).
  std::vector<std::string> no_names;
  std::vector<int> verify{1};
  if (opts.close2) verify.push_back(2);
  if (opts.close3) verify.push_back(3);
  if (opts.close4) verify.push_back(4);
  if (opts.close5) verify.push_back(5);
  for (int k : verify)
    if (!check_pi_condition(universe, report.ob, k, no_names).empty())
      throw std::logic_error("closure fixpoint fails condition " + std::to_string(k));
  return report;
}

bool replay_derivation(const ClosureReport& report) {
  if (report.consistent) return false;
  ObMap ob = report.derivation_base;
  if (report.derivation.empty()) return ob.contains(report.bad_context, 0);

  for (const ClosureStep& s : report.derivation) {
    if (!ob.contains(s.premise_context, s.premise1)) return false;
    bool instance_ok = false;
    switch (s.rule) {
      case 2:
        instance_ok = s.premise_context == s.context && (s.added & s.context) == (s.premise1 & s.context);
        break;
      case 3:
        instance_ok = s.premise_context == s.context && ob.contains(s.context, s.premise2) &&
                      s.added == (s.premise1 & s.premise2);
        break;
      case 4:
        instance_ok = subset_of(s.premise1, s.premise_context) &&
                      subset_of(s.premise_context, s.context) &&
                      s.added == ((s.context & ~s.premise_context) | s.premise1);
        break;
      case 5:
        instance_ok = subset_of(s.context, s.premise_context) &&
                      overlaps(s.context, s.premise1) && s.added == s.premise1;
        break;
    }
    if (!instance_ok) return false;
    ob.add(s.context, s.added);
  }
  const ClosureStep& last = report.derivation.back();
  return last.added == 0 && last.context == report.bad_context &&
         ob.contains(report.bad_context, 0);
}

std::string describe_step(const ClosureStep& step, const std::vector<std::string>& names) {
  auto str = [&](WorldSet s) { return set_to_string(s, names); };
  std::string out = "(" + std::to_string(step.rule) + "): " + str(step.added) + " in pi(" +
                    str(step.context) + ")   [from " + str(step.premise1);
  if (step.rule == 3) out += ", " + str(step.premise2);
  out += " in pi(" + str(step.premise_context) + ")]";
  return out;
}

}  // namespace cjkit
