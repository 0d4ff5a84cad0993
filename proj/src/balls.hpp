#pragma once

#include <string>
#include <vector>

#include "rational.hpp"
#include "space.hpp"

namespace umk {

/// Open ball: members = {x : d(center, x) < radius}.
struct Ball {
  std::string center;
  Rat radius;
  std::vector<std::string> members;  // in point order
};

/// Pairwise disjoint radius-r balls covering the union of candidate balls.
struct BallPartition {
  Rat radius;
  std::vector<Ball> classes;
};

Ball open_ball(const FiniteSpace& space, const std::string& center, const Rat& radius);

/// For every radius in distance_set ∪ {diameter + 1} and every member a of a
/// ball B_r(c), checks B_r(a) = B_r(c). Witness points are (c, a), lhs the
/// radius, rhs the sizes of the differing balls.
ValidationReport center_invariance_check(const FiniteSpace& space);

/// For all center pairs and radii r1 <= r2 from distance_set ∪ {diameter+1}:
/// intersecting balls must nest (equality when r1 = r2). Witness points are
/// (c1, c2), lhs r1, rhs r2.
ValidationReport nested_or_disjoint_check(const FiniteSpace& space);

/// Equivalence classes of candidates under "the radius-r balls intersect",
/// one ball per class, its center the lexicographically smallest candidate of
/// the class. Requires an ultrametric space; the relation need not be
/// transitive otherwise.
BallPartition ball_partition(const FiniteSpace& space, const Rat& radius,
                             const std::vector<std::string>& candidates);

}  // namespace umk
