#include "order_type.hpp"

#include <algorithm>

#include "errors.hpp"

namespace umk {

namespace {

// Merge per-source bounds for "least element above s". Attained candidates
// compete by value; an accumulation at lambda wins when no member sits in
// (s, lambda], unless lambda itself is a member.
Bound combine_least(const SetDescription& desc, const Rat& s, const std::vector<Bound>& parts) {
  bool has_att = false, has_acc = false;
  Rat att, acc;
  for (const auto& b : parts) {
    if (b.kind == Bound::Kind::Attained) {
      if (!has_att || b.value < att) att = b.value;
      has_att = true;
    } else if (b.kind == Bound::Kind::Accumulates) {
      if (!has_acc || b.value < acc) acc = b.value;
      has_acc = true;
    }
  }
  if (!has_acc) return has_att ? Bound::attained(att) : Bound::none();
  if (has_att && att <= acc) return Bound::attained(att);
  if (acc > s && desc.member(acc)) return Bound::attained(acc);
  return Bound::accumulates(acc);
}

Bound combine_greatest(const SetDescription& desc, const Rat& s, const std::vector<Bound>& parts) {
  bool has_att = false, has_acc = false;
  Rat att, acc;
  for (const auto& b : parts) {
    if (b.kind == Bound::Kind::Attained) {
      if (!has_att || b.value > att) att = b.value;
      has_att = true;
    } else if (b.kind == Bound::Kind::Accumulates) {
      if (!has_acc || b.value > acc) acc = b.value;
      has_acc = true;
    }
  }
  if (!has_acc) return has_att ? Bound::attained(att) : Bound::none();
  if (has_att && att >= acc) return Bound::attained(att);
  if (acc < s && desc.member(acc)) return Bound::attained(acc);
  return Bound::accumulates(acc);
}

}  // namespace

bool SetDescription::member(const Rat& x) const {
  if (head.contains(x)) return true;
  for (const auto& b : blocks) {
    if (b.contains(x)) return true;
  }
  return false;
}

Bound SetDescription::least_above(const Rat& s) const {
  std::vector<Bound> parts;
  const auto& hv = head.values();
  auto it = std::upper_bound(hv.begin(), hv.end(), s);
  if (it != hv.end()) parts.push_back(Bound::attained(*it));
  for (const auto& b : blocks) parts.push_back(b.least_above(s));
  return combine_least(*this, s, parts);
}

Bound SetDescription::greatest_below(const Rat& s) const {
  std::vector<Bound> parts;
  const auto& hv = head.values();
  auto it = std::lower_bound(hv.begin(), hv.end(), s);
  if (it != hv.begin()) parts.push_back(Bound::attained(*(it - 1)));
  for (const auto& b : blocks) parts.push_back(b.greatest_below(s));
  return combine_greatest(*this, s, parts);
}

OrderTypeClass classify_order_type(const SetDescription& desc) {
  if (desc.finite()) {
    return {OrderTypeClass::Tag::FiniteChain, desc.head.size(),
            "finite chain with " + std::to_string(desc.head.size()) + " elements"};
  }

  std::vector<const TailRule*> dec, inc;
  for (const auto& b : desc.blocks) (b.decreasing() ? dec : inc).push_back(&b);

  // Largest element: the attained candidates are head values and the first
  // terms of decreasing blocks; increasing blocks never attain their sup.
  Rat max_att = desc.head.max();
  for (const auto* b : dec) max_att = std::max(max_att, b->first_term());
  for (const auto* b : inc) {
    if (b->limit() > max_att) {
      return {OrderTypeClass::Tag::Other, 0,
              "no largest element: the supremum " + b->limit().str() + " is never attained"};
    }
  }

  // Smallest element: head values and first terms of increasing blocks.
  Rat min_att = desc.head.min();
  for (const auto* b : inc) min_att = std::min(min_att, b->first_term());
  for (const auto* b : dec) {
    if (b->limit() < min_att) {
      return {OrderTypeClass::Tag::Other, 0,
              "no smallest element: members descend to " + b->limit().str() +
                  " with nothing at or below it"};
    }
  }

  // An ascending accumulation is incompatible with the backwards-omega chain:
  // either the least element at or above the sup has no immediate
  // predecessor, or there is no such least element at all.
  if (!inc.empty()) {
    Rat sup = inc.front()->limit();
    for (const auto* b : inc) sup = std::min(sup, b->limit());
    Bound above = desc.member(sup) ? Bound::attained(sup) : desc.least_above(sup);
    if (above.kind == Bound::Kind::Attained) {
      return {OrderTypeClass::Tag::Other, 0,
              "element " + above.value.str() +
                  " has no immediate predecessor: members increase to " + sup.str() +
                  " just below it"};
    }
    return {OrderTypeClass::Tag::Other, 0,
            "ascending accumulation at " + sup.str() + " with no least element above it"};
  }

  // Purely decreasing blocks. For each distinct limit, the greatest member at
  // or below it lacks an immediate successor; the order type is 1 + omega*
  // exactly when the only such member is the smallest element.
  std::vector<Rat> limits;
  for (const auto* b : dec) limits.push_back(b->limit());
  std::sort(limits.begin(), limits.end());
  limits.erase(std::unique(limits.begin(), limits.end()), limits.end());

  std::vector<Rat> no_succ;
  for (const Rat& lim : limits) {
    Bound gb = desc.member(lim) ? Bound::attained(lim) : desc.greatest_below(lim);
    if (gb.kind != Bound::Kind::Attained) {
      return {OrderTypeClass::Tag::Other, 0,
              "no smallest element: members descend to " + lim.str() +
                  " with nothing at or below it"};
    }
    if (desc.least_above(gb.value).kind == Bound::Kind::Accumulates) {
      no_succ.push_back(gb.value);
    }
  }
  std::sort(no_succ.begin(), no_succ.end());
  no_succ.erase(std::unique(no_succ.begin(), no_succ.end()), no_succ.end());

  if (no_succ.size() == 1 && no_succ.front() == min_att) {
    return {OrderTypeClass::Tag::OnePlusOmegaStar, 0,
            "largest element " + max_att.str() +
                " attained; every nonminimal element has an immediate predecessor; the unique "
                "accumulation sits below all other elements at " +
                min_att.str()};
  }
  for (const Rat& w : no_succ) {
    if (w != min_att) {
      return {OrderTypeClass::Tag::Other, 0,
              "nonminimal element " + w.str() +
                  " has no immediate successor, so the bottom accumulation is not unique"};
    }
  }
  // Unreachable for catalog blocks; kept for safety.
  return {OrderTypeClass::Tag::Other, 0, "no accumulation from above"};
}

bool accumulation_at_zero(const SetDescription& desc) {
  for (const auto& b : desc.blocks) {
    if (b.decreasing() && b.limit().is_zero()) return true;
  }
  return false;
}

TbCheckResult tb_distance_set_check(const SetDescription& desc) {
  const OrderTypeClass order = classify_order_type(desc);
  const bool route1 =
      order.tag == OrderTypeClass::Tag::OnePlusOmegaStar && accumulation_at_zero(desc);

  // Independent route: the set must be {0} together with the range of one
  // strictly decreasing sequence vanishing to 0. A finite head above 0 merges
  // into such a chain; any nonzero block limit or increasing block does not.
  bool route2 = !desc.blocks.empty() && desc.head.contains(Rat(0));
  for (const auto& b : desc.blocks) {
    if (!b.decreasing() || !b.limit().is_zero()) route2 = false;
  }

  std::string evidence;
  if (route1) {
    evidence = "strictly decreasing chain vanishing to 0, plus the point 0";
  } else if (desc.finite()) {
    evidence = "finite distance set; an infinite totally bounded space needs countably many values";
  } else if (order.tag != OrderTypeClass::Tag::OnePlusOmegaStar) {
    evidence = "order type is not 1 + omega*: " + order.evidence;
  } else {
    evidence = "0 is not an accumulation point of the set";
  }
  return {route1, route1, route2, evidence};
}

}  // namespace umk
