#include "cjkit/worldset.hpp"

#include <algorithm>

namespace cjkit {

std::string set_to_string(WorldSet s, const std::vector<std::string>& names) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!contains_world(s, static_cast<int>(i))) continue;
    if (!first) out += ", ";
    out += names[i];
    first = false;
  }
  out += "}";
  return out;
}

Family::Family(std::vector<WorldSet> members) {
  for (WorldSet m : members) insert(m);
}

bool Family::insert(WorldSet s) {
  auto it = std::lower_bound(members_.begin(), members_.end(), s, family_less);
  if (it != members_.end() && *it == s) return false;
  members_.insert(it, s);
  return true;
}

bool Family::contains(WorldSet s) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), s, family_less);
  return it != members_.end() && *it == s;
}

bool ObMap::add(WorldSet context, WorldSet member) {
  return entries_[context].insert(member);
}

bool ObMap::contains(WorldSet context, WorldSet member) const {
  auto it = entries_.find(context);
  return it != entries_.end() && it->second.contains(member);
}

const Family& ObMap::family(WorldSet context) const {
  static const Family kEmpty;
  auto it = entries_.find(context);
  return it == entries_.end() ? kEmpty : it->second;
}

void ObMap::set_family(WorldSet context, Family f) {
  if (f.empty())
    entries_.erase(context);
  else
    entries_[context] = std::move(f);
}

std::size_t ObMap::total_memberships() const {
  std::size_t n = 0;
  for (const auto& [ctx, fam] : entries_) n += fam.size();
  return n;
}

Family upset(WorldSet base, WorldSet universe) {
  if (!subset_of(base, universe))
    throw InvalidArgument("upset: base must be a subset of the universe");
  Family out;
  WorldSet free = universe & ~base;
  // Walk all subsets of the free positions; ascending submask order.
  WorldSet s = 0;
  while (true) {
    out.insert(base | s);
    if (s == free) break;
    s = (s - free) & free;
  }
  return out;
}

}  // namespace cjkit
