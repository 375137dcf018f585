#include <doctest.h>

#include "cjkit/errors.hpp"
#include "cjkit/model.hpp"
#include "cjkit/worldset.hpp"

using namespace cjkit;

namespace {

Family family_of(std::initializer_list<WorldSet> members) {
  Family f;
  for (WorldSet m : members) f.insert(m);
  return f;
}

}  // namespace

TEST_CASE("upset enumerates exactly the supersets inside the universe") {
  // universe {x, y, z} as bits x=1, y=2, z=4
  CHECK(upset(4, 7) == family_of({4, 5, 6, 7}));
  CHECK(upset(0, 3) == family_of({0, 1, 2, 3}));
  // universe {a, b, c}
  CHECK(upset(1, 7) == family_of({1, 3, 5, 7}));
  CHECK(upset(7, 7) == family_of({7}));
  CHECK_THROWS_AS(upset(8, 7), InvalidArgument);
}

TEST_CASE("upset size and membership properties") {
  for (WorldSet universe : {WorldSet{1}, WorldSet{7}, WorldSet{15}, WorldSet{0b10110}}) {
    for (WorldSet base = 0; base <= universe; ++base) {
      if (!subset_of(base, universe)) continue;
      Family u = upset(base, universe);
      CHECK(u.size() == (std::size_t{1} << (set_size(universe) - set_size(base))));
      CHECK(u.contains(0) == (base == 0));
      // closed under intersection and union
      for (WorldSet a : u)
        for (WorldSet b : u) {
          CHECK(u.contains(a & b));
          CHECK(u.contains(a | b));
        }
    }
  }
}

TEST_CASE("family keeps canonical cardinality-then-mask order") {
  Family f;
  f.insert(7);
  f.insert(2);
  f.insert(4);
  f.insert(3);
  f.insert(2);
  CHECK(f.members() == std::vector<WorldSet>{2, 4, 3, 7});
  CHECK(f.size() == 4);
  CHECK(f.contains(3));
  CHECK_FALSE(f.contains(5));
}

TEST_CASE("obmap stores no empty families") {
  ObMap ob;
  CHECK(ob.family(3).empty());
  CHECK(ob.entries().empty());
  ob.add(3, 1);
  ob.add(3, 1);
  CHECK(ob.family(3).size() == 1);
  CHECK(ob.total_memberships() == 1);
  ob.set_family(3, Family{});
  CHECK(ob.entries().empty());
  ObMap other;
  CHECK(ob == other);  // implicit empty equals absent
}

TEST_CASE("make_model accepts the two-world counter-model frame") {
  ObMap ob;
  ob.set_family(2, family_of({2, 3}));
  ob.set_family(3, family_of({2, 3}));
  Model m = make_model({"w", "y"}, {{"A", 3}, {"B", 2}}, {1, 2}, {1, 2}, ob);
  CHECK(m.world_count() == 2);
  CHECK(m.universe() == 3);
  CHECK(m.set_name(3) == "{w, y}");
}

TEST_CASE("make_model accepts a one-world frame") {
  Model m = make_model({"x"}, {}, {1}, {1}, ObMap{});
  CHECK(m.universe() == 1);
}

TEST_CASE("make_model rejects frames breaking w in av(w) sub pv(w)") {
  CHECK_THROWS_AS(make_model({"w", "y"}, {}, {0, 2}, {3, 2}, ObMap{}), FrameViolation);
  CHECK_THROWS_AS(make_model({"w", "y"}, {}, {3, 2}, {1, 2}, ObMap{}), FrameViolation);
  CHECK_THROWS_AS(make_model({}, {}, {}, {}, ObMap{}), EmptyWorldSet);
  CHECK_THROWS_AS(make_model({"w", "w"}, {}, {1, 2}, {1, 2}, ObMap{}), InvalidArgument);
  CHECK_THROWS_AS(make_model({"w"}, {}, {1}, {}, ObMap{}), InvalidArgument);
  CHECK_THROWS_AS(make_model({"w"}, {{"A", 2}}, {1}, {1}, ObMap{}), InvalidArgument);
}

TEST_CASE("frame acceptance is exactly the per-world invariant") {
  // two worlds: every (av0, pv0, av1, pv1) combination
  for (WorldSet av0 = 0; av0 <= 3; ++av0)
    for (WorldSet pv0 = 0; pv0 <= 3; ++pv0)
      for (WorldSet av1 = 0; av1 <= 3; ++av1)
        for (WorldSet pv1 = 0; pv1 <= 3; ++pv1) {
          bool legal = contains_world(av0, 0) && subset_of(av0, pv0) &&
                       contains_world(av1, 1) && subset_of(av1, pv1);
          if (legal)
            CHECK_NOTHROW(make_model({"w", "y"}, {}, {av0, av1}, {pv0, pv1}, ObMap{}));
          else
            CHECK_THROWS_AS(make_model({"w", "y"}, {}, {av0, av1}, {pv0, pv1}, ObMap{}),
                            FrameViolation);
        }
}

TEST_CASE("set_to_string uses declaration order") {
  std::vector<std::string> names{"a", "b", "c", "d"};
  CHECK(set_to_string(0, names) == "{}");
  CHECK(set_to_string(11, names) == "{a, b, d}");
  CHECK(set_to_string(15, names) == "{a, b, c, d}");
}
