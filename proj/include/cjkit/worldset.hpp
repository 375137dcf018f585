#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cjkit/errors.hpp"

// Finite sets of worlds as bitmasks, families of such sets, and the
// obligation map pi : P(W) -> P(P(W)).
//
// Conventions used throughout:
//   * world i corresponds to bit i, so a set over n worlds is a mask < 2^n;
//   * contexts (arguments of pi) are ordered by ascending mask value;
//   * members of a family are ordered by cardinality, then mask value.
// Every report and listing in the library inherits its determinism from
// these two orders.

namespace cjkit {

using WorldSet = std::uint32_t;

// Evaluation works up to 16 worlds; anything that walks all of P(W) per
// context (closure, condition checking, selection) is capped at 8.
inline constexpr int kMaxWorldsEval = 16;
inline constexpr int kMaxWorldsPowerset = 8;

inline int set_size(WorldSet s) { return std::popcount(s); }
inline bool subset_of(WorldSet a, WorldSet b) { return (a & ~b) == 0; }
inline bool overlaps(WorldSet a, WorldSet b) { return (a & b) != 0; }
inline bool contains_world(WorldSet s, int w) { return (s >> w) & 1u; }
inline WorldSet full_set(int n_worlds) {
  return n_worlds >= 32 ? ~WorldSet{0} : (WorldSet{1} << n_worlds) - 1;
}

// Orders sets by cardinality first so that e.g. {b} precedes {a,b}.
inline bool family_less(WorldSet a, WorldSet b) {
  int ca = set_size(a), cb = set_size(b);
  return ca != cb ? ca < cb : a < b;
}

// "{a, b, d}" with member names in world-index order.
std::string set_to_string(WorldSet s, const std::vector<std::string>& names);

// A set of world sets, kept sorted by (cardinality, mask).
class Family {
 public:
  Family() = default;
  explicit Family(std::vector<WorldSet> members);

  // Returns true when the member was not already present.
  bool insert(WorldSet s);
  bool contains(WorldSet s) const;

  const std::vector<WorldSet>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool operator==(const Family&) const = default;

 private:
  std::vector<WorldSet> members_;
};

// Total map from contexts to families. Contexts whose family is empty are
// not stored, so most entries of a sparse pi cost nothing.
class ObMap {
 public:
  ObMap() = default;

  // Returns true when (member in pi(context)) was newly established.
  bool add(WorldSet context, WorldSet member);
  bool contains(WorldSet context, WorldSet member) const;

  // The family for a context; a shared empty family when none is stored.
  const Family& family(WorldSet context) const;
  void set_family(WorldSet context, Family f);

  // Nonempty entries only, keyed by ascending context mask.
  const std::map<WorldSet, Family>& entries() const { return entries_; }

  std::size_t total_memberships() const;
  bool operator==(const ObMap&) const = default;

 private:
  std::map<WorldSet, Family> entries_;
};

// U(base) within the given universe: every superset of base that stays
// inside the universe. Throws InvalidArgument unless base is a subset of
// the universe.
Family upset(WorldSet base, WorldSet universe);

}  // namespace cjkit
