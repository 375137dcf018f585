#pragma once

// The hand-built fixture models shared across suites, constructed
// directly through the kernel so these tests do not depend on the
// scenario parser.

#include "cjkit/model.hpp"
#include "cjkit/worldset.hpp"

namespace testmodels {

using cjkit::Model;
using cjkit::ObMap;
using cjkit::WorldSet;

// Worlds w=1, y=2; ||A|| = {w,y}, ||B|| = {y};
// pi({y}) = pi({w,y}) = {{y}, {w,y}}, pi empty elsewhere.
inline Model countermodel() {
  ObMap ob;
  ob.add(2, 2);
  ob.add(2, 3);
  ob.add(3, 2);
  ob.add(3, 3);
  return cjkit::make_model({"w", "y"}, {{"A", 3}, {"B", 2}}, {1, 2}, {1, 2}, ob);
}

// Worlds x=1, y=2, z=4; ||A|| = {z}, ||B|| = {y,z};
// pi = U({z}) on {z},{x,z},{y,z},W and U({x}) on {x},{x,y}.
inline Model c3() {
  ObMap ob;
  for (WorldSet ctx : {WorldSet{4}, WorldSet{5}, WorldSet{6}, WorldSet{7}})
    ob.set_family(ctx, cjkit::upset(4, 7));
  for (WorldSet ctx : {WorldSet{1}, WorldSet{3}})
    ob.set_family(ctx, cjkit::upset(1, 7));
  return cjkit::make_model({"x", "y", "z"}, {{"A", 4}, {"B", 6}},
                           {3, 2, 4}, {7, 2, 4}, ob);
}

}  // namespace testmodels
