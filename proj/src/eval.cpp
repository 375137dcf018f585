#include "cjkit/eval.hpp"

#include "cjkit/errors.hpp"

namespace cjkit {

namespace {

// Number of subsets of "a" that meet "b": all subsets minus those that
// avoid b entirely.
std::uint64_t overlapping_subset_count(WorldSet a, WorldSet b) {
  return (std::uint64_t{1} << set_size(a)) - (std::uint64_t{1} << set_size(a & ~b));
}

bool conditional_holds(const Model& m, WorldSet consequent, WorldSet antecedent) {
  if (!overlaps(consequent, antecedent)) return false;
  // Every subset of the antecedent that meets the consequent must list the
  // consequent in its family. Contexts with an empty family fail outright,
  // so it is enough to count the stored contexts that qualify.
  std::uint64_t qualifying = 0;
  for (const auto& [ctx, fam] : m.ob.entries()) {
    if (subset_of(ctx, antecedent) && overlaps(ctx, consequent) && fam.contains(consequent))
      ++qualifying;
  }
  return qualifying == overlapping_subset_count(antecedent, consequent);
}

}  // namespace

WorldSet extension(const Model& m, const Formula& f) {
  const WorldSet u = m.universe();
  switch (f.op()) {
    case Op::atom: {
      auto it = m.valuation.find(f.atom_name());
      if (it == m.valuation.end()) throw UnknownAtom(f.atom_name());
      return it->second;
    }
    case Op::top: return u;
    case Op::bottom: return 0;
    case Op::neg: return u & ~extension(m, f.lhs());
    case Op::conj: return extension(m, f.lhs()) & extension(m, f.rhs());
    case Op::disj: return extension(m, f.lhs()) | extension(m, f.rhs());
    case Op::implies: return (u & ~extension(m, f.lhs())) | extension(m, f.rhs());
    case Op::iff: {
      WorldSet a = extension(m, f.lhs()), b = extension(m, f.rhs());
      return u & ~(a ^ b);
    }
    case Op::box_actual:
    case Op::box_strong:
    case Op::dia_actual:
    case Op::dia_strong: {
      const WorldSet e = extension(m, f.lhs());
      const bool actual = f.op() == Op::box_actual || f.op() == Op::dia_actual;
      const bool box = f.op() == Op::box_actual || f.op() == Op::box_strong;
      WorldSet out = 0;
      for (int w = 0; w < m.world_count(); ++w) {
        const WorldSet view = actual ? m.av[w] : m.pv[w];
        const bool v = box ? subset_of(view, e) : overlaps(view, e);
        if (v) out |= WorldSet{1} << w;
      }
      return out;
    }
    case Op::obl_actual:
    case Op::obl_ideal: {
      const WorldSet e = extension(m, f.lhs());
      const bool actual = f.op() == Op::obl_actual;
      WorldSet out = 0;
      for (int w = 0; w < m.world_count(); ++w) {
        const WorldSet view = actual ? m.av[w] : m.pv[w];
        if (m.ob.contains(view, e) && overlaps(view, u & ~e)) out |= WorldSet{1} << w;
      }
      return out;
    }
    case Op::obl_cond: {
      const WorldSet b = extension(m, f.consequent());
      const WorldSet a = extension(m, f.antecedent());
      return conditional_holds(m, b, a) ? u : 0;
    }
    case Op::viol: {
      // By definition an abbreviation: Oi f and not f.
      const WorldSet oi = extension(m, Formula::obl_ideal(f.lhs()));
      return oi & (u & ~extension(m, f.lhs()));
    }
  }
  throw std::logic_error("unreachable formula op");
}

bool holds_at(const Model& m, int world, const Formula& f) {
  if (world < 0 || world >= m.world_count())
    throw InvalidArgument("world index out of range");
  return contains_world(extension(m, f), world);
}

Family conditional_selection(const Model& m, WorldSet x) {
  if (m.world_count() > kMaxWorldsPowerset)
    throw TooLarge("selection function limited to " +
                   std::to_string(kMaxWorldsPowerset) + " worlds");
  const WorldSet u = m.universe();
  if (!subset_of(x, u)) throw InvalidArgument("context outside the model universe");

  Family out;
  for (WorldSet y = 1; y <= u; ++y) {
    if (!overlaps(x, y)) continue;
    bool ok = true;
    for (WorldSet z = x;; z = (z - 1) & x) {  // subsets of x, descending
      if (overlaps(z, y) && !m.ob.contains(z, y)) {
        ok = false;
        break;
      }
      if (z == 0) break;
    }
    if (ok) out.insert(y);
  }
  return out;
}

}  // namespace cjkit
