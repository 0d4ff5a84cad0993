#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "distance_set.hpp"
#include "rational.hpp"
#include "tail_rule.hpp"

namespace umk {

/// A finite distance set, optionally extended by infinite symbolic blocks
/// from the tail-rule catalog. The described set is head ∪ ⋃ blocks; with no
/// blocks it is just the finite head.
struct SetDescription {
  DistanceSet head;
  std::vector<TailRule> blocks;

  bool finite() const { return blocks.empty(); }
  bool member(const Rat& x) const;

  /// Least element strictly above s / greatest strictly below s, over the
  /// whole described set.
  Bound least_above(const Rat& s) const;
  Bound greatest_below(const Rat& s) const;
};

struct OrderTypeClass {
  enum class Tag { FiniteChain, OnePlusOmegaStar, Other } tag;
  std::size_t chain_length = 0;  // only for FiniteChain
  std::string evidence;
};

/// Order type of the described set as a subposet of the rationals, decided
/// symbolically from the block limits. The three clauses checked are: a
/// largest element exists, every nonminimal element has an immediate
/// predecessor, and the unique element with no immediate successor is the
/// smallest one.
OrderTypeClass classify_order_type(const SetDescription& desc);

/// True iff the set accumulates at 0, i.e. some decreasing block has limit 0.
bool accumulation_at_zero(const SetDescription& desc);

struct TbCheckResult {
  bool totally_boundable;   // equals route_order_type
  bool route_order_type;    // order type 1 + omega* and accumulation at 0
  bool route_normal_form;   // {0} plus one strictly decreasing chain to 0
  std::string evidence;
};

/// Whether the described set is the distance set of some infinite totally
/// bounded ultrametric space. Decided twice, through independent routes that
/// must agree: the order-type characterization and the decreasing-chain
/// normal form.
TbCheckResult tb_distance_set_check(const SetDescription& desc);

}  // namespace umk
