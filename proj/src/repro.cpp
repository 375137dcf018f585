#include "cjkit/repro.hpp"

#include <algorithm>
#include <set>

#include "cjkit/errors.hpp"
#include "cjkit/eval.hpp"
#include "cjkit/fixtures.hpp"
#include "cjkit/parser.hpp"
#include "cjkit/scenario.hpp"

namespace cjkit {

void ReproResult::expect(bool pass, const std::string& what) {
  lines.push_back(std::string(pass ? "  ok    " : "  FAIL  ") + what);
  ok = ok && pass;
}

namespace {

void expect_checks(ReproResult& r, const ScenarioReport& rep, const Scenario& s) {
  for (const auto& c : rep.checks)
    r.expect(c.pass, "check " + s.worlds[c.line.world] + " " +
                         (c.line.expected ? "true" : "false") + ": " +
                         render_formula(c.line.formula));
}

bool has_witness(const std::vector<Violation>& vs, std::vector<WorldSet> sets) {
  return std::any_of(vs.begin(), vs.end(),
                     [&](const Violation& v) { return v.sets == sets; });
}

ReproResult repro_countermodel() {
  ReproResult r{"countermodel"};
  Scenario s = parse_scenario(fixtures::kCountermodelScn);
  ScenarioReport rep = run_scenario(s);
  r.expect(rep.build.model.has_value(), "model built");
  if (!rep.build.model) return r;
  r.expect(rep.build.warnings.empty(), "conditions (1)-(4) hold");
  expect_checks(r, rep, s);
  r.expect(rep.checks_pass(), "schema O(B|A) & <>A -> <>B refuted at w");
  return r;
}

ReproResult repro_c3() {
  ReproResult r{"c3"};
  Scenario s = parse_scenario(fixtures::kC3Scn);
  ScenarioReport rep = run_scenario(s);
  r.expect(rep.build.model.has_value(), "model built");
  if (!rep.build.model) return r;
  const Model& m = *rep.build.model;
  const WorldSet X = 1, Y = 2, Z = 4, W = 7;

  r.expect(rep.build.warnings.empty(), "conditions (1)-(4) hold");

  const Family uz = upset(Z, W), ux = upset(X, W);
  bool table = m.ob.family(Z) == uz && m.ob.family(X | Z) == uz && m.ob.family(Y | Z) == uz &&
               m.ob.family(W) == uz && m.ob.family(X) == ux && m.ob.family(X | Y) == ux &&
               m.ob.family(0).empty() && m.ob.family(Y).empty();
  r.expect(table, "pi table: U({z}) on the four z-contexts, U({x}) on {x},{x,y}, else empty");

  expect_checks(r, rep, s);

  bool oddity = true;
  for (WorldSet ctx = 0; ctx <= W; ++ctx) oddity = oddity && !m.ob.contains(ctx, Y);
  r.expect(oddity, "pragmatic oddity avoided: {y} in no pi(X)");

  // Least common member of the nonempty families.
  std::set<WorldSet> common;
  bool first = true;
  for (const auto& [ctx, fam] : m.ob.entries()) {
    std::set<WorldSet> here(fam.begin(), fam.end());
    if (first) {
      common = here;
      first = false;
    } else {
      std::set<WorldSet> kept;
      for (WorldSet v : common)
        if (here.count(v)) kept.insert(v);
      common = kept;
    }
  }
  WorldSet least = 0;
  bool have_least = false;
  for (WorldSet cand : common) {
    if (std::all_of(common.begin(), common.end(),
                    [&](WorldSet o) { return subset_of(cand, o); })) {
      least = cand;
      have_least = true;
      break;
    }
  }
  const WorldSet iff_ext = extension(m, parse_formula("A <-> B"));
  r.expect(have_least && least == (X | Z) && iff_ext == (X | Z),
           "least common member of nonempty pi's is {x, z} = ||A <-> B||");

  auto v5 = check_condition(m, 5);
  r.expect(v5.size() == 7 && has_witness(v5, {W, Y, Y | Z}),
           "condition (5) fails here: 7 witnesses, including (X=W, Y={y}, Z={y, z})");
  return r;
}

ReproResult repro_dog4() {
  ReproResult r{"dog4"};
  Scenario s = parse_scenario(fixtures::kDog4Scn);
  ScenarioReport rep = run_scenario(s);
  r.expect(rep.build.closure.consistent, "baseline closure (rules 2,3) reaches a fixpoint");
  r.expect(rep.build.model.has_value(), "model built");
  if (!rep.build.model) return r;
  const Model& m = *rep.build.model;

  const ObMap table = fixtures::dog4_baseline_table();
  int matching = 0;
  for (WorldSet ctx = 1; ctx <= m.universe(); ++ctx)
    if (m.ob.family(ctx) == table.family(ctx)) ++matching;
  r.expect(matching == 15 && m.ob.family(0).empty(),
           std::to_string(matching) + " pi entries match the baseline table");
  r.expect(m.ob == table, "fixpoint equals the baseline table exactly");

  expect_checks(r, rep, s);

  r.expect(check_condition(m, 1).empty() && check_condition(m, 2).empty() &&
               check_condition(m, 3).empty(),
           "conditions (1)-(3) hold");
  auto v4 = check_condition(m, 4);
  r.expect(!v4.empty() && has_witness(v4, {8, 11, 15}),
           "condition (4) warning issued: witness (X={d}, Y={a, b, d}, Z={a, b, c, d})");
  return r;
}

ReproResult repro_dog4_full() {
  ReproResult r{"dog4-full"};
  Scenario s = parse_scenario(fixtures::kDog4FullScn);
  ScenarioReport rep = run_scenario(s);
  r.expect(rep.build.closure.consistent, "closure with rule 4 reaches a fixpoint");
  r.expect(rep.build.model.has_value(), "model built");
  if (!rep.build.model) return r;
  const Model& m = *rep.build.model;

  r.expect(rep.build.warnings.empty(), "conditions (1)-(4) hold");
  expect_checks(r, rep, s);

  constexpr WorldSet C = 4, D = 8, B = 2;
  r.expect(m.ob.contains(m.universe(), C) && m.ob.contains(m.universe(), C | D) &&
               m.ob.contains(m.universe(), B | C | D),
           "pi(W) gained {c, d} and {b, c, d} next to {c}");
  return r;
}

ReproResult repro_lemma3() {
  ReproResult r{"lemma3"};
  Scenario s = parse_scenario(fixtures::kLemma3Scn);
  ScenarioReport rep = run_scenario(s);
  r.expect(rep.build.closure.consistent, "closure with rules 2,3,4 reaches a fixpoint");
  if (!rep.build.model) return r;
  const Model& m = *rep.build.model;
  const Family ua = upset(1, m.universe());
  bool shape = true;
  for (WorldSet ctx = 0; ctx <= m.universe(); ++ctx) {
    if (contains_world(ctx, 0))
      shape = shape && m.ob.family(ctx) == ua;
    else
      shape = shape && m.ob.family(ctx).empty();
  }
  r.expect(shape, "pi(X) = U({a}) for every X containing a, empty otherwise");
  return r;
}

ReproResult repro_thm_cond5() {
  ReproResult r{"thm-cond5"};
  Scenario s = parse_scenario(fixtures::kThmCond5Scn);
  ScenarioBuild build = build_scenario_model(s);
  const ClosureReport& c = build.closure;
  r.expect(!c.consistent, "adding rule 5 is inconsistent");
  if (c.consistent) return r;
  for (const auto& step : c.derivation) r.lines.push_back("    " + describe_step(step, s.worlds));
  r.lines.push_back("    (1): fails at " + set_to_string(c.bad_context, s.worlds));

  std::vector<int> rules;
  for (const auto& step : c.derivation) rules.push_back(step.rule);
  r.expect(rules == std::vector<int>{5, 5, 2, 2, 3}, "derivation uses rule 5 twice, 2 twice, 3 once");
  r.expect(c.bad_context == 6, "condition (1) failure lands at {b, c}");
  r.expect(!c.derivation.empty() && c.derivation.back().added == 0,
           "derivation ends with the empty set");
  r.expect(replay_derivation(c), "derivation replays from the stable map");
  return r;
}

ReproResult repro_cond5_upset() {
  ReproResult r{"cond5-upset"};
  Scenario s = parse_scenario(fixtures::kCond5UpsetScn);
  ScenarioReport rep = run_scenario(s);
  r.expect(rep.build.closure.consistent, "closing the counter-model under rule 5 stays consistent");
  if (!rep.build.model) return r;
  const Model& m = *rep.build.model;
  expect_checks(r, rep, s);
  r.expect(m.ob.family(1) == upset(1, m.universe()), "pi({w}) = U({w})");
  return r;
}

ReproResult repro_cases() {
  ReproResult r{"cases"};
  Scenario s = parse_scenario(fixtures::kDog4FullScn);
  ScenarioBuild build = build_scenario_model(s);
  r.expect(build.model.has_value(), "well-formed four-world model built");
  if (!build.model) return r;
  const Model& base = *build.model;

  struct Case {
    const char* name;
    WorldSet av_a;
    const char* premises;
    const char* conclusions;
  };
  const Case cases[] = {
      {"case 1", 5 /* {a, c} */, "Dog & <a>~Dog", "viol(~Dog) & Oa ~Dog"},
      {"case 2", 9 /* {a, d} */, "[a]Dog & <>~Dog",
       "viol(~Dog) & <a>Sign & (<a>~Sign -> Oa Sign)"},
      {"case 3", 3 /* {a, b} */,
       "[a]Dog & <>~Dog & [a]~Sign & <>(Dog & Sign) & ~Fence & <a>Fence",
       "viol(~Dog) & viol(Dog -> Sign) & viol(Dog & ~Sign -> Fence) & Oa Fence"},
  };
  for (const Case& c : cases) {
    std::vector<WorldSet> av = base.av;
    av[0] = c.av_a;
    Model variant = make_model(base.worlds, base.valuation, av, base.pv, base.ob);
    r.expect(holds_at(variant, 0, parse_formula(c.premises)),
             std::string(c.name) + " premises hold at a with av(a) = " + variant.set_name(c.av_a));
    r.expect(holds_at(variant, 0, parse_formula(c.conclusions)),
             std::string(c.name) + " conclusions hold at a");
  }
  return r;
}

}  // namespace

const std::vector<std::string>& repro_names() {
  static const std::vector<std::string> names = {
      "countermodel", "c3", "dog4", "dog4-full", "lemma3", "thm-cond5", "cond5-upset", "cases"};
  return names;
}

ReproResult run_fixture(const std::string& name) {
  if (name == "countermodel") return repro_countermodel();
  if (name == "c3") return repro_c3();
  if (name == "dog4") return repro_dog4();
  if (name == "dog4-full") return repro_dog4_full();
  if (name == "lemma3") return repro_lemma3();
  if (name == "thm-cond5") return repro_thm_cond5();
  if (name == "cond5-upset") return repro_cond5_upset();
  if (name == "cases") return repro_cases();
  throw UnknownFixture(name);
}

int run_repro(const std::string& name, std::ostream& out) {
  ReproResult r = run_fixture(name);
  out << "repro " << r.name << "\n";
  for (const auto& line : r.lines) out << line << "\n";
  out << (r.ok ? "reproduction ok" : "REPRODUCTION MISMATCH") << "\n";
  return r.ok ? 0 : 1;
}

}  // namespace cjkit
