#pragma once

#include <string>
#include <vector>

#include "cjkit/model.hpp"

namespace cjkit {

// The checkable requirements on a model: the five numbered conditions on
// the obligation map, the union law they entail, and the frame shape.
enum class Cond {
  c1,     // the empty set is never obligatory
  c2,     // membership in ob(X) depends only on the trace on X
  c3,     // ob(X) closed under intersection
  c4,     // X in ob(Y), X sub Y sub Z  =>  (Z\Y) u X in ob(Z)
  c5,     // Z in ob(X), Y sub X, Y meets Z  =>  Z in ob(Y)
  union_law,  // X in ob(Y), X in ob(Z)  =>  X in ob(Y u Z)
  frame,  // w in av(w) sub pv(w)
};

const char* cond_name(Cond c);

// One failed instance. The sets instantiate the condition in the order
// its statement introduces them; re-checking the condition on exactly
// these sets reproduces the failure (see recheck).
struct Violation {
  Cond cond;
  std::vector<WorldSet> sets;
  int world = -1;  // frame violations only
  std::string message;

  bool operator==(const Violation&) const = default;
};

// All violating tuples, in ascending lexicographic order of the witness
// sets. Witness lists are exhaustive rather than first-found so reports
// are stable diagnostics. k must be 1..5; models above kMaxWorldsPowerset
// worlds are rejected with TooLarge.
std::vector<Violation> check_condition(const Model& m, int k);

// The same checks phrased on a bare obligation map over the given
// universe; check_condition is this plus naming.
std::vector<Violation> check_pi_condition(WorldSet universe, const ObMap& ob, int k,
                                          const std::vector<std::string>& names);

// The derived law: X in ob(Y) and X in ob(Z) imply X in ob(Y u Z).
// Follows from conditions (1)-(4), so it can only fail on maps that
// break one of those.
std::vector<Violation> check_union_property(const Model& m);

std::vector<Violation> check_frame(const Model& m);

struct ConditionReport {
  std::vector<Violation> frame;
  std::vector<Violation> c1, c2, c3, c4, c5;
  bool include5 = false;

  bool empty() const {
    return frame.empty() && c1.empty() && c2.empty() && c3.empty() && c4.empty() &&
           (!include5 || c5.empty());
  }
  std::vector<Violation> all() const;
  std::size_t count() const { return all().size(); }
};

ConditionReport check_all(const Model& m, bool include5);

// True when the violation still fails on its recorded witness sets;
// every reported violation satisfies this.
bool recheck(const Model& m, const Violation& v);

}  // namespace cjkit
