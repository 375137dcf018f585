#include "cjkit/conditions.hpp"

#include <algorithm>

#include "cjkit/errors.hpp"

namespace cjkit {

namespace {

void guard_size(WorldSet universe) {
  if (set_size(universe) > kMaxWorldsPowerset)
    throw TooLarge("condition checking limited to " +
                   std::to_string(kMaxWorldsPowerset) + " worlds");
}

std::string pi_of(WorldSet ctx, const std::vector<std::string>& names) {
  return "pi(" + set_to_string(ctx, names) + ")";
}

void sort_witnesses(std::vector<Violation>& out) {
  std::sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) {
    return a.sets < b.sets;
  });
}

}  // namespace

const char* cond_name(Cond c) {
  switch (c) {
    case Cond::c1: return "condition (1)";
    case Cond::c2: return "condition (2)";
    case Cond::c3: return "condition (3)";
    case Cond::c4: return "condition (4)";
    case Cond::c5: return "condition (5)";
    case Cond::union_law: return "union law";
    case Cond::frame: return "frame";
  }
  return "?";
}

std::vector<Violation> check_pi_condition(WorldSet universe, const ObMap& ob, int k,
                                          const std::vector<std::string>& names) {
  guard_size(universe);
  std::vector<Violation> out;
  auto str = [&](WorldSet s) { return set_to_string(s, names); };

  switch (k) {
    case 1:
      for (WorldSet x = 0; x <= universe; ++x)
        if (ob.contains(x, 0))
          out.push_back({Cond::c1, {x}, -1, "{} in " + pi_of(x, names)});
      break;

    case 2:
      // Biconditional form: every member's whole trace class must be in.
      for (WorldSet x = 0; x <= universe; ++x) {
        for (WorldSet y : ob.family(x)) {
          for (WorldSet z = 0; z <= universe; ++z) {
            if ((y & x) == (z & x) && !ob.contains(x, z))
              out.push_back({Cond::c2,
                             {x, y, z},
                             -1,
                             str(y) + " in " + pi_of(x, names) + " but " + str(z) +
                                 " is not, though both trace to " + str(y & x) + " on it"});
          }
        }
      }
      break;

    case 3:
      for (WorldSet x = 0; x <= universe; ++x) {
        const auto& mem = ob.family(x).members();
        for (std::size_t i = 0; i < mem.size(); ++i)
          for (std::size_t j = i + 1; j < mem.size(); ++j)
            if (!ob.contains(x, mem[i] & mem[j]))
              out.push_back({Cond::c3,
                             {x, mem[i], mem[j]},
                             -1,
                             str(mem[i]) + " and " + str(mem[j]) + " in " + pi_of(x, names) +
                                 " but their intersection " + str(mem[i] & mem[j]) + " is not"});
      }
      break;

    case 4:
      for (WorldSet y = 0; y <= universe; ++y) {
        for (WorldSet x : ob.family(y)) {
          if (!subset_of(x, y)) continue;
          for (WorldSet z = 0; z <= universe; ++z) {
            if (!subset_of(y, z)) continue;
            const WorldSet lifted = (z & ~y) | x;
            if (!ob.contains(z, lifted))
              out.push_back({Cond::c4,
                             {x, y, z},
                             -1,
                             str(x) + " in " + pi_of(y, names) + " with " + str(x) + " sub " +
                                 str(y) + " sub " + str(z) + " requires " + str(lifted) +
                                 " in " + pi_of(z, names)});
          }
        }
      }
      break;

    case 5:
      for (WorldSet x = 0; x <= universe; ++x) {
        for (WorldSet z : ob.family(x)) {
          for (WorldSet y = 0; y <= universe; ++y) {
            if (!subset_of(y, x) || !overlaps(y, z)) continue;
            if (!ob.contains(y, z))
              out.push_back({Cond::c5,
                             {x, y, z},
                             -1,
                             str(z) + " in " + pi_of(x, names) + " and " + str(y) + " sub " +
                                 str(x) + " meets it, but " + str(z) + " not in " +
                                 pi_of(y, names)});
          }
        }
      }
      break;

    default:
      throw InvalidArgument("condition index must be 1..5");
  }

  sort_witnesses(out);
  return out;
}

std::vector<Violation> check_condition(const Model& m, int k) {
  return check_pi_condition(m.universe(), m.ob, k, m.worlds);
}

std::vector<Violation> check_union_property(const Model& m) {
  guard_size(m.universe());
  const WorldSet universe = m.universe();
  std::vector<Violation> out;
  for (WorldSet y = 0; y <= universe; ++y) {
    for (WorldSet z = y + 1; z <= universe; ++z) {
      for (WorldSet x : m.ob.family(y)) {
        if (m.ob.contains(z, x) && !m.ob.contains(y | z, x))
          out.push_back({Cond::union_law,
                         {x, y, z},
                         -1,
                         m.set_name(x) + " in pi of both " + m.set_name(y) + " and " +
                             m.set_name(z) + " but not of their union"});
      }
    }
  }
  sort_witnesses(out);
  return out;
}

std::vector<Violation> check_frame(const Model& m) {
  std::vector<Violation> out;
  for (int w = 0; w < m.world_count(); ++w) {
    if (!contains_world(m.av[w], w))
      out.push_back({Cond::frame,
                     {m.av[w], m.pv[w]},
                     w,
                     m.worlds[w] + " is not in av(" + m.worlds[w] + ")"});
    else if (!subset_of(m.av[w], m.pv[w]))
      out.push_back({Cond::frame,
                     {m.av[w], m.pv[w]},
                     w,
                     "av(" + m.worlds[w] + ") exceeds pv(" + m.worlds[w] + ")"});
  }
  return out;
}

ConditionReport check_all(const Model& m, bool include5) {
  ConditionReport r;
  r.include5 = include5;
  r.frame = check_frame(m);
  r.c1 = check_condition(m, 1);
  r.c2 = check_condition(m, 2);
  r.c3 = check_condition(m, 3);
  r.c4 = check_condition(m, 4);
  if (include5) r.c5 = check_condition(m, 5);
  return r;
}

std::vector<Violation> ConditionReport::all() const {
  std::vector<Violation> out;
  for (const auto* v : {&frame, &c1, &c2, &c3, &c4, &c5})
    out.insert(out.end(), v->begin(), v->end());
  return out;
}

bool recheck(const Model& m, const Violation& v) {
  const auto& s = v.sets;
  switch (v.cond) {
    case Cond::c1:
      return m.ob.contains(s[0], 0);
    case Cond::c2:
      return (s[1] & s[0]) == (s[2] & s[0]) && m.ob.contains(s[0], s[1]) &&
             !m.ob.contains(s[0], s[2]);
    case Cond::c3:
      return m.ob.contains(s[0], s[1]) && m.ob.contains(s[0], s[2]) &&
             !m.ob.contains(s[0], s[1] & s[2]);
    case Cond::c4:
      return subset_of(s[0], s[1]) && subset_of(s[1], s[2]) && m.ob.contains(s[1], s[0]) &&
             !m.ob.contains(s[2], (s[2] & ~s[1]) | s[0]);
    case Cond::c5:
      return m.ob.contains(s[0], s[2]) && subset_of(s[1], s[0]) && overlaps(s[1], s[2]) &&
             !m.ob.contains(s[1], s[2]);
    case Cond::union_law:
      return m.ob.contains(s[1], s[0]) && m.ob.contains(s[2], s[0]) &&
             !m.ob.contains(s[1] | s[2], s[0]);
    case Cond::frame:
      return !contains_world(m.av[v.world], v.world) || !subset_of(m.av[v.world], m.pv[v.world]);
  }
  return false;
}

}  // namespace cjkit
