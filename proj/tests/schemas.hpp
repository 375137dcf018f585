#pragma once

// The schema battery: everything that must hold at every world of every
// well-formed model satisfying conditions (1)-(4). Shared between the
// unit validity suite and the acceptance runner.

#include <functional>
#include <string>
#include <vector>

#include "cjkit/conditions.hpp"
#include "cjkit/eval.hpp"
#include "cjkit/parser.hpp"

namespace schemas {

using cjkit::extension;
using cjkit::Formula;
using cjkit::holds_at;
using cjkit::Model;
using cjkit::parse_formula;

struct Named {
  std::string name;
  Formula formula;
};

inline const std::vector<Named>& valid_schemas() {
  static const std::vector<Named> list = [] {
    const std::vector<std::pair<std::string, std::string>> texts = {
        {"duality-strong", "<>A <-> ~[]~A"},
        {"duality-actual", "<a>A <-> ~[a]~A"},
        {"actual-implies-potential", "<a>A -> <>A"},
        {"axiom-T", "([]A -> A) & ([a]A -> A)"},
        {"no-impossible-duty", "~Oa false & ~Oi false"},
        {"conjunction-C", "(Oa A & Oa B) -> Oa (A & B)"},
        {"detachment-actual", "O(B|A) & [a]A & <a>B & <a>~B -> Oa B"},
        {"detachment-ideal", "O(B|A) & []A & <>B & <>~B -> Oi B"},
        {"material-duty-actual", "O(B|A) & <a>(A & B) & <a>(A & ~B) -> Oa (A -> B)"},
        {"material-duty-ideal", "O(B|A) & <>(A & B) & <>(A & ~B) -> Oi (A -> B)"},
        {"deontic-detachment-actual", "Oa A & O(B|A) & <a>(A & B) -> Oa (A & B)"},
        {"deontic-detachment-ideal", "Oi A & O(B|A) & <>(A & B) -> Oi (A & B)"},
        {"settled-excludes-duty-actual", "[a]A -> ~Oa A & ~Oa ~A"},
        {"settled-excludes-duty-ideal", "[]A -> ~Oi A & ~Oi ~A"},
        {"classical-duty-actual", "[a](A <-> B) -> (Oa A <-> Oa B)"},
        {"classical-duty-ideal", "[](A <-> B) -> (Oi A <-> Oi B)"},
        {"absorb-settled-conjunct-actual", "[a]A -> (Oa B -> Oa (A & B))"},
        {"absorb-settled-conjunct-strong", "[]A -> (Oa B -> Oa (A & B))"},
    };
    std::vector<Named> out;
    for (const auto& [name, text] : texts) out.push_back({name, parse_formula(text)});
    return out;
  }();
  return list;
}

// Pairs with provably equal extensions, for the classicality checks.
inline const std::vector<std::pair<Formula, Formula>>& equal_extension_pairs() {
  static const std::vector<std::pair<Formula, Formula>> list = {
      {parse_formula("A"), parse_formula("~~A")},
      {parse_formula("A"), parse_formula("A & (A | B)")},
      {parse_formula("A & B"), parse_formula("B & A")},
      {parse_formula("true"), parse_formula("A | ~A")},
      {parse_formula("false"), parse_formula("A & ~A")},
      {parse_formula("B"), parse_formula("A & B | ~A & B")},
  };
  return list;
}

// Runs the whole battery on one model; calls fail(description) for every
// breach. The model must define atoms A and B (C is optional).
inline void check_model(const Model& m, const std::function<void(const std::string&)>& fail) {
  const int n = m.world_count();

  for (const auto& schema : valid_schemas()) {
    const cjkit::WorldSet ext = extension(m, schema.formula);
    if (ext != m.universe()) fail(schema.name);
  }

  for (const auto& [f, g] : equal_extension_pairs()) {
    if (extension(m, f) != extension(m, g)) {
      fail("extension algebra");
      continue;
    }
    for (int w = 0; w < n; ++w) {
      if (holds_at(m, w, Formula::obl_actual(f)) != holds_at(m, w, Formula::obl_actual(g)))
        fail("classicality of Oa");
      if (holds_at(m, w, Formula::obl_ideal(f)) != holds_at(m, w, Formula::obl_ideal(g)))
        fail("classicality of Oi");
    }
    for (const char* c : {"A", "B", "true"}) {
      Formula cf = parse_formula(c);
      if (holds_at(m, 0, Formula::obl_cond(cf, f)) != holds_at(m, 0, Formula::obl_cond(cf, g)))
        fail("classicality of O in the antecedent");
      if (holds_at(m, 0, Formula::obl_cond(f, cf)) != holds_at(m, 0, Formula::obl_cond(g, cf)))
        fail("classicality of O in the consequent");
    }
  }

  // Restricted strengthening of the antecedent: O(B|A) plus a nonempty
  // ||A & A' & B|| yield O(B|A & A').
  {
    const bool has_c = m.valuation.count("C") != 0;
    const std::vector<const char*> aprimes =
        has_c ? std::vector<const char*>{"C", "true", "~B", "A | B", "B"}
              : std::vector<const char*>{"true", "~B", "A | B", "B"};
    const Formula a = parse_formula("A"), b = parse_formula("B");
    for (const char* ap_text : aprimes) {
      Formula ap = parse_formula(ap_text);
      if (!holds_at(m, 0, Formula::obl_cond(b, a))) continue;
      if (extension(m, Formula::conj(Formula::conj(a, ap), b)) == 0) continue;
      if (!holds_at(m, 0, Formula::obl_cond(b, Formula::conj(a, ap))))
        fail(std::string("restricted antecedent strengthening via ") + ap_text);
    }
  }

  if (!check_union_property(m).empty()) fail("union law");

  // O(B|A) agrees with membership in the selection function's image.
  for (const char* bt : {"A", "B", "A & B", "~A"}) {
    for (const char* at : {"A", "B", "A | B", "true"}) {
      Formula bf = parse_formula(bt), af = parse_formula(at);
      bool via_selection =
          cjkit::conditional_selection(m, extension(m, af)).contains(extension(m, bf));
      for (int w = 0; w < n; ++w)
        if (holds_at(m, w, Formula::obl_cond(bf, af)) != via_selection)
          fail("selection function equivalence");
    }
  }
}

}  // namespace schemas
