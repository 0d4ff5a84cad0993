#pragma once

#include <cstddef>
#include <vector>

#include "rational.hpp"
#include "space.hpp"

namespace umk {

/// Strictly increasing set of distance values; always contains 0.
class DistanceSet {
 public:
  /// Values are sorted and deduplicated; 0 must be present.
  static DistanceSet from_values(std::vector<Rat> values);

  const std::vector<Rat>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  bool contains(const Rat& x) const;
  const Rat& min() const { return values_.front(); }
  const Rat& max() const { return values_.back(); }

  friend bool operator==(const DistanceSet& a, const DistanceSet& b) = default;

 private:
  std::vector<Rat> values_;
};

/// The set of distinct matrix values of a nonempty space.
DistanceSet distance_set(const FiniteSpace& space);

}  // namespace umk
