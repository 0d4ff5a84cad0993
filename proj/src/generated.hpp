#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "construct.hpp"
#include "rational.hpp"
#include "space.hpp"
#include "tail_rule.hpp"

namespace umk {

/// Desk-scale stand-in for a countable space: a deterministic distance oracle
/// over 1-based indices, from a closed catalog, with a prefix budget.
///
///   dlps_over(seq)        point i carries value seq(i) (optionally 0 first);
///                         d = max of the two values for distinct points
///   partition_classes     point i belongs to class rule(i);
///                         d = max{1/n, 1/m} for distinct points
///   composed(base, f)     base distances mapped through f
class GeneratedSpace {
 public:
  struct ClassRule {
    enum class Kind { Singletons, Blocks, SingleClass } kind = Kind::Singletons;
    std::size_t width = 1;  // for Blocks
  };

  static GeneratedSpace dlps_over(TailRule seq, bool include_zero, std::size_t budget);
  static GeneratedSpace partition_classes(ClassRule rule, std::size_t budget);
  static GeneratedSpace composed(GeneratedSpace base, PreservingFunction f);

  std::size_t budget() const { return budget_; }

  /// The space on the first n indices. Throws when n is 0 or above budget.
  FiniteSpace prefix(std::size_t n) const;

 private:
  GeneratedSpace() = default;

  enum class Kind { Dlps, Partition, Composed } kind_ = Kind::Dlps;
  std::size_t budget_ = 0;
  // Dlps
  std::vector<TailRule> seq_;  // single element; vector to defer construction
  bool include_zero_ = false;
  // Partition
  ClassRule rule_;
  // Composed
  std::shared_ptr<GeneratedSpace> base_;
  std::vector<PreservingFunction> f_;  // single element
};

struct StabilityResult {
  bool contained;            // distance_set(prefix n) ⊆ distance_set(prefix m)
  std::vector<Rat> gained;   // values in prefix m but not prefix n, sorted
};

/// Distance-set stability between two prefixes, n <= m <= budget.
StabilityResult distance_stability_check(const GeneratedSpace& gen, std::size_t n, std::size_t m);

}  // namespace umk
