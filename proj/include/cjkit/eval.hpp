#pragma once

#include "cjkit/formula.hpp"
#include "cjkit/model.hpp"

namespace cjkit {

// The set of worlds where f holds. Boolean connectives are set algebra;
// the modal clauses are, writing E for the extension of the child:
//
//   [a]f  at w   iff  av(w) is a subset of E
//   []f   at w   iff  pv(w) is a subset of E
//   <a>f, <>f    duals (nonempty intersection)
//   Oa f  at w   iff  E in ob(av(w))  and  av(w) meets the complement of E
//   Oi f  at w   iff  E in ob(pv(w))  and  pv(w) meets the complement of E
//   O(B|A)       iff  ||B|| meets ||A||  and  ||B|| in ob(X) for every
//                     X inside ||A|| that meets ||B||   (world-independent)
//   viol f       expands to  Oi f  and  not f
//
// Throws UnknownAtom when the formula mentions an atom the valuation
// does not define.
WorldSet extension(const Model& m, const Formula& f);

bool holds_at(const Model& m, int world, const Formula& f);

// The conditional-obligation clause is world-independent, so it is the
// image of a selection function on contexts:
//
//   f(X) = { Y : X meets Y, and Y in ob(Z) for every Z inside X
//                that meets Y }
//
// and O(B|A) holds exactly when ||B|| is in f(||A||). Requires a model
// small enough to walk P(W) (at most kMaxWorldsPowerset worlds).
Family conditional_selection(const Model& m, WorldSet x);

}  // namespace cjkit
