#include "generated.hpp"

#include <algorithm>

#include "distance_set.hpp"
#include "errors.hpp"

namespace umk {

GeneratedSpace GeneratedSpace::dlps_over(TailRule seq, bool include_zero, std::size_t budget) {
  if (budget == 0) throw StructureError("prefix budget must be positive");
  if (!seq.decreasing()) throw StructureError("DLPS oracle needs a decreasing sequence");
  GeneratedSpace g;
  g.kind_ = Kind::Dlps;
  g.budget_ = budget;
  g.seq_.push_back(std::move(seq));
  g.include_zero_ = include_zero;
  return g;
}

GeneratedSpace GeneratedSpace::partition_classes(ClassRule rule, std::size_t budget) {
  if (budget == 0) throw StructureError("prefix budget must be positive");
  if (rule.kind == ClassRule::Kind::Blocks && rule.width == 0) {
    throw StructureError("block class rule needs a positive width");
  }
  GeneratedSpace g;
  g.kind_ = Kind::Partition;
  g.budget_ = budget;
  g.rule_ = rule;
  return g;
}

GeneratedSpace GeneratedSpace::composed(GeneratedSpace base, PreservingFunction f) {
  GeneratedSpace g;
  g.kind_ = Kind::Composed;
  g.budget_ = base.budget_;
  g.base_ = std::make_shared<GeneratedSpace>(std::move(base));
  g.f_.push_back(std::move(f));
  return g;
}

FiniteSpace GeneratedSpace::prefix(std::size_t n) const {
  if (n == 0) throw PreconditionError("prefix length must be positive");
  if (n > budget_) {
    throw PreconditionError("prefix length " + std::to_string(n) + " exceeds budget " +
                            std::to_string(budget_));
  }
  switch (kind_) {
    case Kind::Dlps: {
      std::vector<Rat> point_values;
      point_values.reserve(n);
      const TailRule& seq = seq_.front();
      long long index = seq.first_index();
      if (include_zero_) point_values.push_back(Rat(0));
      while (point_values.size() < n) point_values.push_back(seq.term(index++));
      std::vector<std::string> labels;
      labels.reserve(n);
      for (const auto& v : point_values) labels.push_back(v.str());
      std::vector<Rat> flat(n * n, Rat(0));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          const Rat d = std::max(point_values[i], point_values[j]);
          flat[i * n + j] = d;
          flat[j * n + i] = d;
        }
      }
      return FiniteSpace::from_flat(std::move(labels), std::move(flat));
    }
    case Kind::Partition: {
      auto class_of = [this](std::size_t i) -> long long {
        switch (rule_.kind) {
          case ClassRule::Kind::Singletons:
            return static_cast<long long>(i) + 1;
          case ClassRule::Kind::Blocks:
            return static_cast<long long>(i / rule_.width) + 1;
          case ClassRule::Kind::SingleClass:
            return 1;
        }
        return 1;
      };
      std::vector<std::string> labels;
      labels.reserve(n);
      for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
      std::vector<Rat> flat(n * n, Rat(0));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          const Rat d(1, std::min(class_of(i), class_of(j)));
          flat[i * n + j] = d;
          flat[j * n + i] = d;
        }
      }
      return FiniteSpace::from_flat(std::move(labels), std::move(flat));
    }
    case Kind::Composed:
      return compose_preserving(base_->prefix(n), f_.front());
  }
  throw Error("unreachable");
}

StabilityResult distance_stability_check(const GeneratedSpace& gen, std::size_t n,
                                         std::size_t m) {
  if (n > m) throw PreconditionError("stability check needs n <= m");
  const DistanceSet small = distance_set(gen.prefix(n));
  const DistanceSet big = distance_set(gen.prefix(m));
  StabilityResult result{true, {}};
  for (const auto& v : small.values()) {
    if (!big.contains(v)) result.contained = false;
  }
  for (const auto& v : big.values()) {
    if (!small.contains(v)) result.gained.push_back(v);
  }
  return result;
}

}  // namespace umk
