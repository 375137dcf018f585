#include "cjkit/scenario.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "cjkit/errors.hpp"
#include "cjkit/eval.hpp"
#include "cjkit/parser.hpp"

namespace cjkit {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

struct LineParser {
  Scenario s;
  std::map<std::string, int> world_index;
  std::set<std::string> atom_names;
  std::set<std::string> av_seen, pv_seen;
  std::set<WorldSet> ob_seen;
  bool saw_worlds = false;
  bool saw_options = false;
  int line_no = 0;

  [[noreturn]] void fail(const std::string& why) { throw ScenarioError(line_no, why); }

  int world(const std::string& name) {
    auto it = world_index.find(name);
    if (it == world_index.end()) throw UndeclaredWorld(line_no, name);
    return it->second;
  }

  WorldSet world_list(const std::string& text) {
    WorldSet out = 0;
    for (const auto& name : split_ws(text)) out |= WorldSet{1} << world(name);
    return out;
  }

  // One "{a b}" group starting at text[at]; advances at past it.
  WorldSet brace_group(const std::string& text, std::size_t& at) {
    while (at < text.size() && std::isspace(static_cast<unsigned char>(text[at]))) ++at;
    if (at >= text.size() || text[at] != '{') fail("expected '{'");
    std::size_t close = text.find('}', at);
    if (close == std::string::npos) fail("unterminated '{'");
    WorldSet out = world_list(text.substr(at + 1, close - at - 1));
    at = close + 1;
    return out;
  }

  Formula checked_formula(const std::string& text) {
    Formula f;
    try {
      f = parse_formula(text);
    } catch (const Error& e) {
      fail(std::string("bad formula: ") + e.what());
    }
    for (const auto& a : atoms_of(f))
      if (!atom_names.count(a)) throw UndeclaredAtom(line_no, a);
    return f;
  }

  void handle(const std::string& head, const std::string& tail) {
    auto head_toks = split_ws(head);
    const std::string& directive = head_toks[0];
    if (!saw_worlds && directive != "worlds") fail("worlds must be declared first");

    if (directive == "worlds") {
      if (saw_worlds) fail("duplicate worlds line");
      if (head_toks.size() != 1) fail("unexpected text after 'worlds'");
      for (const auto& name : split_ws(tail)) {
        if (world_index.count(name)) fail("duplicate world name: " + name);
        world_index[name] = static_cast<int>(s.worlds.size());
        s.worlds.push_back(name);
      }
      if (s.worlds.empty()) fail("at least one world is required");
      if (s.worlds.size() > static_cast<std::size_t>(kMaxWorldsPowerset))
        fail("scenarios are limited to " + std::to_string(kMaxWorldsPowerset) + " worlds");
      saw_worlds = true;
    } else if (directive == "atom") {
      if (head_toks.size() != 2) fail("expected: atom NAME: worlds...");
      if (!atom_names.insert(head_toks[1]).second) fail("duplicate atom: " + head_toks[1]);
      s.atoms.push_back({head_toks[1], world_list(tail)});
    } else if (directive == "av" || directive == "pv") {
      if (head_toks.size() != 2) fail("expected: " + directive + " WORLD: worlds...");
      auto& seen = directive == "av" ? av_seen : pv_seen;
      if (!seen.insert(head_toks[1]).second) fail("duplicate " + directive + " for " + head_toks[1]);
      int w = world(head_toks[1]);
      (directive == "av" ? s.av : s.pv)[w] = world_list(tail);
    } else if (directive == "ob") {
      std::string ctx_text = trim(head.substr(2));
      std::size_t at = 0;
      WorldSet ctx = brace_group(ctx_text, at);
      if (trim(ctx_text.substr(at)).size()) fail("unexpected text after ob context");
      if (!ob_seen.insert(ctx).second) fail("duplicate ob entry for one context");
      Family fam;
      std::size_t pos = 0;
      while (pos < tail.size()) {
        while (pos < tail.size() && std::isspace(static_cast<unsigned char>(tail[pos]))) ++pos;
        if (pos >= tail.size()) break;
        fam.insert(brace_group(tail, pos));
      }
      s.ob.set_family(ctx, fam);
    } else if (directive == "seed") {
      if (head_toks.size() != 1) fail("unexpected text after 'seed'");
      std::size_t consumed = 0;
      Formula y;
      try {
        y = parse_formula_prefix(tail, consumed);
      } catch (const Error& e) {
        fail(std::string("bad seed formula: ") + e.what());
      }
      auto rest = split_ws(tail.substr(consumed));
      if (rest.empty() || rest[0] != "given") fail("expected 'given' between the seed formulas");
      std::size_t given_at = tail.find("given", consumed);
      Formula z = checked_formula(tail.substr(given_at + 5));
      for (const auto& a : atoms_of(y))
        if (!atom_names.count(a)) throw UndeclaredAtom(line_no, a);
      if (!is_propositional(y) || !is_propositional(z))
        fail("seed formulas must be propositional");
      s.seeds.push_back({y, z});
    } else if (directive == "options") {
      if (saw_options) fail("duplicate options line");
      saw_options = true;
      s.options = ClosureOptions{false, false, false, false, s.options.max_iterations};
      bool noclose = false;
      auto toks = split_ws(tail);
      for (const auto& t : toks) {
        if (t == "close2") s.options.close2 = true;
        else if (t == "close3") s.options.close3 = true;
        else if (t == "close4") s.options.close4 = true;
        else if (t == "close5") s.options.close5 = true;
        else if (t == "noclose") noclose = true;
        else fail("unknown option: " + t);
      }
      if (noclose && toks.size() != 1) fail("noclose excludes the close flags");
      s.do_close = !noclose;
      // The flags are meaningless without closure; keep them at the
      // defaults so equality ignores the difference.
      if (noclose) s.options = ClosureOptions{};
    } else if (directive == "check") {
      if (head_toks.size() != 3) fail("expected: check WORLD BOOL: formula");
      int w = world(head_toks[1]);
      bool expected;
      if (head_toks[2] == "true") expected = true;
      else if (head_toks[2] == "false") expected = false;
      else fail("expected 'true' or 'false', got " + head_toks[2]);
      s.checks.push_back({w, checked_formula(tail), expected});
    } else {
      fail("unknown directive: " + directive);
    }
  }
};

WorldSet propositional_extension(const Scenario& s, const Formula& f) {
  const int n = static_cast<int>(s.worlds.size());
  std::map<std::string, WorldSet> valuation;
  for (const auto& [name, ext] : s.atoms) valuation[name] = ext;
  std::vector<WorldSet> trivial;
  for (int w = 0; w < n; ++w) trivial.push_back(WorldSet{1} << w);
  Model shell = make_model(s.worlds, valuation, trivial, trivial, ObMap{});
  return extension(shell, f);
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  LineParser p;
  std::istringstream in(text);
  std::string raw;
  bool sized = false;
  while (std::getline(in, raw)) {
    ++p.line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string line = trim(raw);
    if (line.empty()) continue;
    std::size_t colon = line.find(':');
    if (colon == std::string::npos) p.fail("expected 'directive: ...'");
    std::string head = trim(line.substr(0, colon));
    std::string tail = trim(line.substr(colon + 1));
    if (head.empty()) p.fail("missing directive");
    p.handle(head, tail);
    if (p.saw_worlds && !sized) {
      sized = true;
      const WorldSet universe = full_set(static_cast<int>(p.s.worlds.size()));
      p.s.av.resize(p.s.worlds.size(), 0);
      p.s.pv.resize(p.s.worlds.size(), universe);
      for (std::size_t w = 0; w < p.s.worlds.size(); ++w) p.s.av[w] = WorldSet{1} << w;
    }
  }
  if (!p.saw_worlds) throw ScenarioError(p.line_no, "no worlds line");
  if (!p.saw_options) {
    p.s.options = ClosureOptions{};
    p.s.do_close = !p.s.seeds.empty();
  }
  return p.s;
}

std::string serialize_scenario(const Scenario& s) {
  std::ostringstream out;
  auto names = [&](WorldSet set) {
    std::string text;
    for (std::size_t w = 0; w < s.worlds.size(); ++w) {
      if (!contains_world(set, static_cast<int>(w))) continue;
      if (!text.empty()) text += " ";
      text += s.worlds[w];
    }
    return text;
  };

  out << "worlds:";
  for (const auto& w : s.worlds) out << " " << w;
  out << "\n";
  for (const auto& [name, ext] : s.atoms) {
    out << "atom " << name << ":";
    if (ext) out << " " << names(ext);
    out << "\n";
  }
  for (std::size_t w = 0; w < s.worlds.size(); ++w)
    out << "av " << s.worlds[w] << ": " << names(s.av[w]) << "\n";
  for (std::size_t w = 0; w < s.worlds.size(); ++w)
    out << "pv " << s.worlds[w] << ": " << names(s.pv[w]) << "\n";
  for (const auto& [ctx, fam] : s.ob.entries()) {
    out << "ob {" << names(ctx) << "}:";
    for (WorldSet member : fam) out << " {" << names(member) << "}";
    out << "\n";
  }
  for (const auto& [y, z] : s.seeds)
    out << "seed: " << render_formula(y) << " given " << render_formula(z) << "\n";
  if (!s.do_close) {
    out << "options: noclose\n";
  } else {
    out << "options:";
    if (s.options.close2) out << " close2";
    if (s.options.close3) out << " close3";
    if (s.options.close4) out << " close4";
    if (s.options.close5) out << " close5";
    out << "\n";
  }
  for (const auto& c : s.checks)
    out << "check " << s.worlds[c.world] << " " << (c.expected ? "true" : "false") << ": "
        << render_formula(c.formula) << "\n";
  return out.str();
}

ScenarioBuild build_scenario_model(const Scenario& s) {
  const WorldSet universe = full_set(static_cast<int>(s.worlds.size()));
  ObMap ob = s.ob;
  for (const auto& [yf, zf] : s.seeds)
    ob = seed_conditional(std::move(ob), propositional_extension(s, yf),
                          propositional_extension(s, zf));

  ScenarioBuild b;
  if (s.do_close) {
    b.closure = close(ob, universe, s.options);
  } else {
    b.closure.consistent = true;
    b.closure.ob = std::move(ob);
    b.closure.iterations = 0;
  }
  if (!b.closure.consistent) return b;

  std::map<std::string, WorldSet> valuation;
  for (const auto& [name, ext] : s.atoms) valuation[name] = ext;
  b.model = make_model(s.worlds, valuation, s.av, s.pv, b.closure.ob);
  b.warnings = check_all(*b.model, false);
  return b;
}

bool ScenarioReport::checks_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.pass; });
}

bool ScenarioReport::ok() const { return build.model.has_value() && checks_pass(); }

ScenarioReport run_scenario(const Scenario& s) {
  ScenarioReport r;
  r.build = build_scenario_model(s);
  if (!r.build.model) return r;
  for (const auto& line : s.checks) {
    CheckOutcome c;
    c.line = line;
    c.actual = holds_at(*r.build.model, line.world, line.formula);
    c.pass = c.actual == line.expected;
    r.checks.push_back(c);
  }
  return r;
}

std::string format_ob_listing(const Model& m) {
  if (m.world_count() > kMaxWorldsPowerset)
    throw TooLarge("ob listing limited to " + std::to_string(kMaxWorldsPowerset) + " worlds");
  std::ostringstream out;
  for (WorldSet ctx = 0; ctx <= m.universe(); ++ctx) {
    out << m.set_name(ctx) << ", {";
    bool first = true;
    for (WorldSet member : m.ob.family(ctx)) {
      if (!first) out << ", ";
      out << m.set_name(member);
      first = false;
    }
    out << "}\n";
  }
  return out.str();
}

}  // namespace cjkit
