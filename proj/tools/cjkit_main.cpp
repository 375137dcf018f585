#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cjkit/conditions.hpp"
#include "cjkit/errors.hpp"
#include "cjkit/repro.hpp"
#include "cjkit/scenario.hpp"

namespace {

cjkit::Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cjkit::Error("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return cjkit::parse_scenario(text.str());
}

void print_inconsistency(const cjkit::ClosureReport& c, const std::vector<std::string>& worlds) {
  std::cout << "inconsistent: {} in pi(" << cjkit::set_to_string(c.bad_context, worlds) << ")\n";
  if (!c.derivation.empty()) {
    std::cout << "derivation:\n";
    for (const auto& step : c.derivation)
      std::cout << "  " << cjkit::describe_step(step, worlds) << "\n";
    std::cout << "  (1): fails at " << cjkit::set_to_string(c.bad_context, worlds) << "\n";
  }
}

void print_warning_summary(const cjkit::ConditionReport& w) {
  auto group = [](const char* name, const std::vector<cjkit::Violation>& vs) {
    if (vs.empty()) return;
    std::cout << "warning: " << name << " fails on " << vs.size()
              << (vs.size() == 1 ? " tuple" : " tuples") << "; first: " << vs.front().message
              << "\n";
  };
  for (const auto& v : w.frame) std::cout << "warning: frame: " << v.message << "\n";
  group("condition (1)", w.c1);
  group("condition (2)", w.c2);
  group("condition (3)", w.c3);
  group("condition (4)", w.c4);
}

int cmd_eval(const std::string& path) {
  cjkit::Scenario s = load_scenario(path);
  cjkit::ScenarioReport rep = cjkit::run_scenario(s);
  if (!rep.build.model) {
    print_inconsistency(rep.build.closure, s.worlds);
    return 1;
  }
  for (const auto& c : rep.checks) {
    std::cout << "check " << s.worlds[c.line.world] << " "
              << (c.line.expected ? "true" : "false") << ": "
              << cjkit::render_formula(c.line.formula) << " ... "
              << (c.pass ? "pass" : "FAIL") << "\n";
  }
  print_warning_summary(rep.build.warnings);
  if (rep.checks_pass()) {
    std::cout << rep.checks.size() << " of " << rep.checks.size() << " checks passed\n";
    return 0;
  }
  std::cout << "some checks failed\n";
  return 1;
}

int cmd_conditions(const std::string& path, bool cond5) {
  cjkit::Scenario s = load_scenario(path);
  cjkit::ScenarioBuild build = cjkit::build_scenario_model(s);
  if (!build.model) {
    print_inconsistency(build.closure, s.worlds);
    return 1;
  }
  cjkit::ConditionReport rep = cjkit::check_all(*build.model, cond5);
  for (const auto& v : rep.all())
    std::cout << cjkit::cond_name(v.cond) << ": " << v.message << "\n";
  if (rep.empty()) {
    std::cout << "conditions (1)-(4)" << (cond5 ? " and (5)" : "") << " hold\n";
    return 0;
  }
  std::cout << rep.count() << " violations\n";
  return 1;
}

int cmd_close(const std::string& path, bool cond4, bool cond5, bool print_ob) {
  cjkit::Scenario s = load_scenario(path);
  if (cond4 || cond5) {
    s.do_close = true;
    s.options.close4 = s.options.close4 || cond4;
    s.options.close5 = s.options.close5 || cond5;
  }
  cjkit::ScenarioBuild build = cjkit::build_scenario_model(s);
  if (!build.model) {
    print_inconsistency(build.closure, s.worlds);
    return 1;
  }
  const auto& c = build.closure;
  std::cout << "closed in " << c.iterations << " sweeps;";
  for (int rule = 2; rule <= 5; ++rule)
    if (c.added_by_rule[rule])
      std::cout << " rule " << rule << " added " << c.added_by_rule[rule] << ";";
  std::cout << " " << c.ob.total_memberships() << " memberships total\n";
  print_warning_summary(build.warnings);
  if (print_ob) std::cout << cjkit::format_ob_listing(*build.model);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-model toolkit for the deontic logic CJ"};
  app.require_subcommand(1);

  std::string path, fixture;
  bool cond4 = false, cond5 = false, print_ob = false;

  auto* eval = app.add_subcommand("eval", "build a scenario's model and run its check lines");
  eval->add_option("file", path, "scenario file")->required();

  auto* conditions =
      app.add_subcommand("conditions", "report every violation of the semantic conditions");
  conditions->add_option("file", path, "scenario file")->required();
  conditions->add_flag("--cond5", cond5, "also check condition (5)");

  auto* close = app.add_subcommand("close", "close the obligation map and summarize the fixpoint");
  close->add_option("file", path, "scenario file")->required();
  close->add_flag("--cond4", cond4, "enable closure under condition (4)");
  close->add_flag("--cond5", cond5, "enable closure under condition (5)");
  close->add_flag("--print-ob", print_ob, "print the full listing of the closed map");

  auto* repro = app.add_subcommand("repro", "run a built-in fixture against its frozen results");
  std::string names;
  for (const auto& n : cjkit::repro_names()) names += (names.empty() ? "" : ", ") + n;
  repro->add_option("name", fixture, "one of: " + names)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (eval->parsed()) return cmd_eval(path);
    if (conditions->parsed()) return cmd_conditions(path, cond5);
    if (close->parsed()) return cmd_close(path, cond4, cond5, print_ob);
    if (repro->parsed()) return cjkit::run_repro(fixture, std::cout);
  } catch (const cjkit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
