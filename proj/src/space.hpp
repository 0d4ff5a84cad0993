#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rational.hpp"

namespace umk {

/// One failed law instance. lhs/rhs are canonically rendered values whose
/// meaning depends on the law: distances for the metric laws, radii for the
/// ball laws, order elements for the gamma laws.
struct Witness {
  std::vector<std::string> points;
  std::string law;
  std::string lhs;
  std::string rhs;
};

struct ValidationReport {
  std::vector<Witness> witnesses;
  bool valid() const { return witnesses.empty(); }
};

/// Finite labeled point set with an exact rational distance matrix.
///
/// Construction enforces the structural invariants: square matrix, symmetry,
/// zero diagonal, nonnegative entries, distinct nonempty labels. The metric
/// axioms themselves are checked by the validators, never assumed — an
/// off-diagonal zero is constructible and flagged by validate_metric.
///
/// Every entry also carries a rank into the sorted list of distinct matrix
/// values, so comparison-only laws (strong triangle, isosceles, four-point,
/// ball membership) run on integers.
class FiniteSpace {
 public:
  static FiniteSpace create(std::vector<std::string> labels,
                            std::vector<std::vector<Rat>> matrix);
  static FiniteSpace from_flat(std::vector<std::string> labels, std::vector<Rat> flat);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  const Rat& at(std::size_t i, std::size_t j) const { return dist_[i * size() + j]; }
  int rank_at(std::size_t i, std::size_t j) const { return rank_[i * size() + j]; }

  /// Sorted distinct matrix values; contains 0 whenever the space is nonempty.
  const std::vector<Rat>& values() const { return values_; }

  /// Cached verdict: no off-diagonal zero and the strong triangle inequality
  /// holds for every triple. Computed once at construction.
  bool ultrametric() const { return ultrametric_; }

  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
    return a.labels_ == b.labels_ && a.dist_ == b.dist_;
  }

 private:
  FiniteSpace() = default;
  void index_values();

  std::vector<std::string> labels_;
  std::vector<Rat> dist_;    // row-major size() x size()
  std::vector<int> rank_;    // rank into values_
  std::vector<Rat> values_;  // sorted distinct entries
  bool ultrametric_ = true;
};

/// Witnesses for axioms 1 and 3 of the metric definition (symmetry and the
/// zero diagonal are structural). Laws: "identity_of_indiscernibles",
/// "triangle".
ValidationReport validate_metric(const FiniteSpace& space);

/// Witnesses for axiom 1 and the strong triangle inequality. A strong
/// triangle witness (x, y, z) means d(x,y) > max{d(x,z), d(z,y)}.
ValidationReport validate_ultrametric(const FiniteSpace& space);

/// Unordered triples whose three distances are not "two equal values, both
/// at least the third". Empty iff every triangle is isosceles with the base
/// no greater than the legs.
std::vector<std::array<std::string, 3>> isosceles_witnesses(const FiniteSpace& space);

/// Labeled quadruples (a, b, c, d) with d(a,b) > d(a,d), d(a,b) > d(b,c) and
/// d(a,b) != d(c,d). Empty on every ultrametric space.
std::vector<std::array<std::string, 4>> four_point_check(const FiniteSpace& space);

/// Largest matrix entry. Throws PreconditionError on the empty space.
Rat diameter(const FiniteSpace& space);

}  // namespace umk
