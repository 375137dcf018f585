#include "cjkit/fixtures.hpp"

namespace cjkit::fixtures {

const std::string kCountermodelScn = R"(worlds: w y
atom A: w y
atom B: y
av w: w
pv w: w
av y: y
pv y: y
ob {y}: {y} {w y}
ob {w y}: {y} {w y}
check w true: O(B|A) & <>A & []~B
check w false: <>B
check w false: O(B|A) & <>A -> <>B
)";

const std::string kC3Scn = R"(worlds: x y z
atom A: z
atom B: y z
av x: x y
pv x: x y z
av y: y
pv y: y
av z: z
pv z: z
ob {x}: {x} {x y} {x z} {x y z}
ob {x y}: {x} {x y} {x z} {x y z}
ob {z}: {z} {x z} {y z} {x y z}
ob {x z}: {z} {x z} {y z} {x y z}
ob {y z}: {z} {x z} {y z} {x y z}
ob {x y z}: {z} {x z} {y z} {x y z}
check x true: O(A|true)
check x true: O(B|A)
check x true: O(~B|~A)
check x true: [a]~A
check x true: ~B
check x true: <a>B
check x true: <>(A & B)
check x true: O(true|A)
)";

const std::string kDog4Scn = R"(worlds: a b c d
atom Dog: a b d
atom Sign: d
atom Fence: b
av a: a b
pv a: a b c d
seed: ~Dog given true
seed: ~Sign given ~Dog
seed: Sign given Dog
seed: Fence given Dog & ~Sign
options: close2 close3
check a true: [a](Dog & ~Sign)
check a true: <> ~Dog
check a true: <>(Dog & Sign)
check a true: ~Fence
check a true: <a>Fence
)";

const std::string kDog4FullScn = R"(worlds: a b c d
atom Dog: a b d
atom Sign: d
atom Fence: b
av a: a b
pv a: a b c d
seed: ~Dog given true
seed: ~Sign given ~Dog
seed: Sign given Dog
seed: Fence given Dog & ~Sign
options: close2 close3 close4
check a true: [a](Dog & ~Sign)
check a true: <> ~Dog
check a true: <>(Dog & Sign)
check a true: ~Fence
check a true: <a>Fence
check a true: O(~Dog|true)
check a true: O(~Sign|~Dog)
check a true: O(Sign|Dog)
check a true: O(Fence|Dog & ~Sign)
check a true: viol(~Dog)
check a true: viol(Dog -> Sign)
check a true: viol(Dog & ~Sign -> Fence)
check a true: Oa Fence
)";

const std::string kLemma3Scn = R"(worlds: a b c
atom A: a
seed: A given true
options: close2 close3 close4
)";

const std::string kThmCond5Scn = R"(worlds: a b c
atom A: a
seed: A given true
options: close2 close3 close4 close5
)";

const std::string kCond5UpsetScn = R"(worlds: w y
atom A: w y
atom B: y
av w: w
pv w: w
av y: y
pv y: y
ob {y}: {y} {w y}
ob {w y}: {y} {w y}
options: close2 close3 close5
check w true: O(B|A) & <>A & []~B
check w false: <>B
)";

ObMap dog4_baseline_table() {
  constexpr WorldSet A = 1, B = 2, C = 4, D = 8;
  const WorldSet W = A | B | C | D;
  ObMap ob;
  auto put = [&](WorldSet ctx, std::initializer_list<WorldSet> members) {
    for (WorldSet m : members) ob.add(ctx, m);
  };
  ob.set_family(B, upset(B, W));
  ob.set_family(C, upset(C, W));
  ob.set_family(D, upset(D, W));
  put(A | B, {B, B | C, B | D, B | C | D});
  put(A | C, {C, B | C, C | D, B | C | D});
  put(A | D, {D, B | D, C | D, B | C | D});
  put(B | C, {C, A | C, C | D, A | C | D});
  put(B | D, {D, A | D, C | D, A | C | D});
  put(C | D, {C, A | C, B | C, A | B | C});
  put(A | B | C, {C, C | D});
  put(A | B | D, {D, C | D});
  put(A | C | D, {C, B | C});
  put(B | C | D, {C, A | C});
  put(W, {C});
  return ob;
}

}  // namespace cjkit::fixtures
