#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "space.hpp"

namespace umk {

/// Finite totally ordered value set; position is the order, the first element
/// is the smallest one.
class OrderedGamma {
 public:
  static OrderedGamma from_names(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::string& smallest() const { return names_.front(); }
  std::size_t index_of(std::string_view name) const;  // throws on unknown name

 private:
  std::vector<std::string> names_;
};

/// Symmetric matrix over a finite totally ordered value set, diagonal at the
/// smallest element. Entries are stored as positions in the order.
class GammaDistance {
 public:
  static GammaDistance create(OrderedGamma gamma, std::vector<std::string> labels,
                              std::vector<std::vector<std::string>> matrix);

  const OrderedGamma& gamma() const { return gamma_; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::size_t at(std::size_t i, std::size_t j) const { return entries_[i * size() + j]; }

  /// The space obtained by mapping the k-th order element to the rational k;
  /// order-isomorphic embedding into the nonnegative rationals.
  FiniteSpace embed() const;

 private:
  OrderedGamma gamma_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> entries_;
};

/// Conditions of the poset-valued distance definition: (1) the smallest
/// element appears exactly on the diagonal, (3) for every gamma and every
/// ordered triple, d(x,y) <= gamma and d(y,z) <= gamma imply d(x,z) <= gamma.
/// Symmetry is structural. Condition-(3) witnesses carry (x, y, z) and the
/// gamma at which the implication fails.
ValidationReport validate_gamma_distance(const GammaDistance& gd);

/// The max-form of condition (3) for totally ordered gamma; computed
/// independently of the direct implication check.
bool gamma_strong_triangle_holds(const GammaDistance& gd);

/// Members x with d(center, x) strictly below the element. The smallest
/// element is not an admissible radius.
std::vector<std::string> gamma_ball(const GammaDistance& gd, const std::string& center,
                                    const std::string& element);

struct GammaBaseResult {
  bool holds;
  ValidationReport report;
};

/// Verifies the topology-base axiom on the finite family of all gamma-balls:
/// the family covers the points, and every point in an intersection of two
/// balls lies in a ball inside the intersection. Requires |Gamma| >= 2 and a
/// valid gamma distance.
GammaBaseResult gamma_base_check(const GammaDistance& gd);

}  // namespace umk
