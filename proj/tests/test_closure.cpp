#include <doctest.h>

#include <random>

#include "cjkit/closure.hpp"
#include "cjkit/conditions.hpp"
#include "cjkit/errors.hpp"
#include "cjkit/fixtures.hpp"
#include "gen.hpp"
#include "models.hpp"

using namespace cjkit;

namespace {

constexpr WorldSet A = 1, B = 2, C = 4, D = 8;
constexpr WorldSet W4 = 15, W3 = 7;

ObMap dog4_seeds() {
  ObMap ob;
  ob = seed_conditional(std::move(ob), C, W4);            // O(~Dog | true)
  ob = seed_conditional(std::move(ob), A | B | C, C);     // O(~Sign | ~Dog)
  ob = seed_conditional(std::move(ob), D, A | B | D);     // O(Sign | Dog)
  ob = seed_conditional(std::move(ob), B, A | B);         // O(Fence | Dog & ~Sign)
  return ob;
}

// The truth condition for O(Y|Z) phrased on raw sets.
bool conditional_true(const ObMap& ob, WorldSet y, WorldSet z) {
  if (!overlaps(y, z)) return false;
  for (WorldSet x = z;; x = (x - 1) & z) {
    if (overlaps(x, y) && !ob.contains(x, y)) return false;
    if (x == 0) break;
  }
  return true;
}

}  // namespace

TEST_CASE("seeding adds the consequent to every overlapping subcontext") {
  ObMap ob = seed_conditional(ObMap{}, C, W4);
  int touched = 0;
  for (WorldSet x = 0; x <= W4; ++x) {
    if (overlaps(x, C)) {
      CHECK(ob.family(x) == Family{{C}});
      ++touched;
    } else {
      CHECK(ob.family(x).empty());
    }
  }
  CHECK(touched == 8);

  ObMap fence = seed_conditional(ObMap{}, B, A | B);
  CHECK(fence.contains(B, B));
  CHECK(fence.contains(A | B, B));
  CHECK(fence.total_memberships() == 2);

  CHECK_THROWS_AS(seed_conditional(ObMap{}, A, B), DisjointSeed);
}

TEST_CASE("baseline closure of the dog4 seeds reproduces the reference table") {
  ClosureReport rep = close(dog4_seeds(), W4, ClosureOptions{});
  CHECK(rep.consistent);
  CHECK(rep.ob == fixtures::dog4_baseline_table());
  CHECK(rep.derivation.empty());
  // spot entries
  CHECK(rep.ob.family(W4) == Family{{C}});
  CHECK(rep.ob.family(A).empty());
  CHECK(rep.ob.family(A | B) == Family{{B, B | C, B | D, B | C | D}});
  CHECK(rep.ob.family(C) == upset(C, W4));
}

TEST_CASE("closure is monotone over the seeds") {
  ObMap seeds = dog4_seeds();
  ClosureReport rep = close(seeds, W4, ClosureOptions{});
  for (const auto& [ctx, fam] : seeds.entries())
    for (WorldSet member : fam) CHECK(rep.ob.contains(ctx, member));
  CHECK(rep.ob.total_memberships() <= std::size_t{16} * 16);
}

TEST_CASE("closure is idempotent and deterministic") {
  ClosureOptions base;
  ClosureReport first = close(dog4_seeds(), W4, base);
  ClosureReport again = close(first.ob, W4, base);
  CHECK(again.ob == first.ob);
  CHECK(again.iterations == 1);

  ClosureReport repeat = close(dog4_seeds(), W4, base);
  CHECK(repeat.ob == first.ob);
  CHECK(repeat.iterations == first.iterations);
  CHECK(repeat.added_by_rule == first.added_by_rule);

  ClosureOptions with5 = base;
  with5.close5 = true;
  ClosureReport five = close(first.ob, W4, with5);
  CHECK(five.consistent);
  CHECK(five.ob == first.ob);  // the table is already closed under rule 5
  CHECK(five.iterations == 1);
}

TEST_CASE("single seed on three worlds: rules 2,3,4 force the upset shape") {
  ObMap ob = seed_conditional(ObMap{}, A, W3);  // O(A|true), ||A|| = {a}
  ClosureOptions opts;
  opts.close4 = true;
  ClosureReport rep = close(ob, W3, opts);
  REQUIRE(rep.consistent);
  for (WorldSet ctx = 0; ctx <= W3; ++ctx) {
    if (contains_world(ctx, 0))
      CHECK(rep.ob.family(ctx) == upset(A, W3));
    else
      CHECK(rep.ob.family(ctx).empty());
  }
  // the closed map passes (1)-(4) in full
  for (int k = 1; k <= 4; ++k)
    CHECK(check_pi_condition(W3, rep.ob, k, {}).empty());
}

TEST_CASE("adding rule 5 to that seed derives the empty set at {b,c}") {
  ObMap ob = seed_conditional(ObMap{}, A, W3);
  ClosureOptions opts;
  opts.close4 = true;
  opts.close5 = true;
  ClosureReport rep = close(ob, W3, opts);
  REQUIRE_FALSE(rep.consistent);
  CHECK(rep.bad_context == (B | C));

  const std::vector<ClosureStep> expected{
      {5, B | C, A | B, W3, A | B, 0},
      {5, B | C, A | C, W3, A | C, 0},
      {2, B | C, B, B | C, A | B, 0},
      {2, B | C, C, B | C, A | C, 0},
      {3, B | C, 0, B | C, B, C},
  };
  CHECK(rep.derivation == expected);
  CHECK(replay_derivation(rep));

  // the derivation base is the rule-(2,3,4) fixpoint, i.e. the upset shape
  CHECK(rep.derivation_base.family(W3) == upset(A, W3));
}

TEST_CASE("closing the counter-model under rule 5 grows pi({w}) to its upset") {
  Model m = testmodels::countermodel();
  ClosureOptions opts;
  opts.close5 = true;
  ClosureReport rep = close(m.ob, 3, opts);
  REQUIRE(rep.consistent);
  CHECK(rep.ob.family(1) == upset(1, 3));      // pi({w}) = U({w})
  CHECK(rep.ob.family(2) == Family{{2, 3}});   // pi({y}) unchanged
  CHECK(rep.ob.family(3) == Family{{2, 3}});   // pi(W) unchanged
  CHECK(rep.ob.family(0).empty());
}

TEST_CASE("the dog4 seeds stay consistent under rule 5 without rule 4") {
  ClosureOptions opts;
  opts.close5 = true;
  ClosureReport rep = close(dog4_seeds(), W4, opts);
  REQUIRE(rep.consistent);
  CHECK(rep.ob == fixtures::dog4_baseline_table());
}

TEST_CASE("contradictory seeds fail condition (1) during the base phase") {
  ObMap ob;
  ob = seed_conditional(std::move(ob), A, A | B);
  ob = seed_conditional(std::move(ob), B, A | B);
  ClosureReport rep = close(ob, 3, ClosureOptions{});
  REQUIRE_FALSE(rep.consistent);
  CHECK_FALSE(rep.derivation.empty());
  for (const auto& s : rep.derivation) CHECK((s.rule == 2 || s.rule == 3));
  CHECK(replay_derivation(rep));
  CHECK(rep.derivation_base == ob);
}

TEST_CASE("an input that already contains the empty set is reported as such") {
  ObMap ob;
  ob.add(2, 0);
  ClosureReport rep = close(ob, 3, ClosureOptions{});
  REQUIRE_FALSE(rep.consistent);
  CHECK(rep.bad_context == 2);
  CHECK(rep.derivation.empty());
  CHECK(replay_derivation(rep));
}

TEST_CASE("seed faithfulness: every seeded conditional holds in the closed map") {
  std::mt19937 rng(991);
  std::uniform_int_distribution<WorldSet> any(0, W4);
  int closed_models = 0;
  for (int i = 0; i < 400; ++i) {
    std::vector<std::pair<WorldSet, WorldSet>> seeds;
    ObMap ob;
    std::uniform_int_distribution<int> n_seeds(1, 3);
    int k = n_seeds(rng);
    for (int s = 0; s < k; ++s) {
      WorldSet y = 0, z = 0;
      while (!overlaps(y, z)) {
        y = any(rng);
        z = any(rng);
      }
      seeds.push_back({y, z});
      ob = seed_conditional(std::move(ob), y, z);
    }
    ClosureOptions opts;
    opts.close4 = true;
    ClosureReport rep = close(ob, W4, opts);
    if (!rep.consistent) continue;
    ++closed_models;
    for (const auto& [y, z] : seeds) CHECK(conditional_true(rep.ob, y, z));
    for (int c = 1; c <= 4; ++c) CHECK(check_pi_condition(W4, rep.ob, c, {}).empty());
  }
  CHECK(closed_models > 100);
}

TEST_CASE("guards: size, options, iteration limit") {
  CHECK_THROWS_AS(close(ObMap{}, full_set(9), ClosureOptions{}), TooLarge);
  ClosureOptions bad;
  bad.max_iterations = 0;
  CHECK_THROWS_AS(close(ObMap{}, 3, bad), InvalidArgument);
  ClosureOptions tiny;
  tiny.max_iterations = 1;
  CHECK_THROWS_AS(close(dog4_seeds(), W4, tiny), IterationLimit);
}
