#include "distance_set.hpp"

#include <algorithm>

#include "errors.hpp"

namespace umk {

DistanceSet DistanceSet::from_values(std::vector<Rat> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.empty() || !values.front().is_zero()) {
    throw StructureError("a distance set must contain 0 as its smallest element");
  }
  DistanceSet ds;
  ds.values_ = std::move(values);
  return ds;
}

bool DistanceSet::contains(const Rat& x) const {
  return std::binary_search(values_.begin(), values_.end(), x);
}

DistanceSet distance_set(const FiniteSpace& space) {
  if (space.empty()) throw PreconditionError("distance set of the empty space");
  return DistanceSet::from_values(space.values());
}

}  // namespace umk
