#include <doctest.h>

#include "distance_set.hpp"
#include "errors.hpp"
#include "order_type.hpp"
#include "tail_rule.hpp"

using umk::Bound;
using umk::DistanceSet;
using umk::OrderTypeClass;
using umk::Rat;
using umk::SetDescription;
using umk::TailRule;

namespace {

using Tag = OrderTypeClass::Tag;

SetDescription desc(std::vector<Rat> head, std::vector<TailRule> blocks) {
  return SetDescription{DistanceSet::from_values(std::move(head)), std::move(blocks)};
}

}  // namespace

TEST_CASE("tail rule catalog evaluates exactly") {
  const auto recip = TailRule::reciprocal();
  CHECK(recip.term(1) == Rat(1));
  CHECK(recip.term(4) == Rat(1, 4));
  CHECK(recip.contains(Rat(1, 7)));
  CHECK(!recip.contains(Rat(2, 7)));

  const auto shifted = TailRule::shifted(Rat(1));
  CHECK(shifted.term(2) == Rat(3, 2));
  CHECK(shifted.limit() == Rat(1));
  CHECK(shifted.contains(Rat(4, 3)));
  CHECK(!shifted.contains(Rat(1)));

  const auto geo = TailRule::geometric(Rat(1), Rat(1, 2));
  CHECK(geo.term(1) == Rat(1, 2));
  CHECK(geo.term(3) == Rat(1, 8));
  CHECK(geo.contains(Rat(1, 16)));
  CHECK(!geo.contains(Rat(1, 3)));

  const auto appr = TailRule::approach(Rat(2));
  CHECK(appr.first_index() == 1);
  CHECK(appr.term(1) == Rat(1));
  CHECK(appr.term(4) == Rat(7, 4));
  CHECK(!appr.decreasing());
  CHECK(appr.contains(Rat(3, 2)));
  CHECK(!appr.contains(Rat(2)));

  CHECK_THROWS_AS(TailRule::geometric(Rat(1), Rat(3, 2)), umk::StructureError);
  CHECK_THROWS_AS(TailRule::geometric(Rat(0), Rat(1, 2)), umk::StructureError);
  CHECK_THROWS_AS(TailRule::approach(Rat(0)), umk::StructureError);
}

TEST_CASE("tail rule bounds") {
  const auto recip = TailRule::reciprocal();
  auto b = recip.least_above(Rat(1, 3));
  CHECK(b.kind == Bound::Kind::Attained);
  CHECK(b.value == Rat(1, 2));
  b = recip.least_above(Rat(2, 5));
  CHECK(b.value == Rat(1, 2));
  CHECK(recip.least_above(Rat(0)).kind == Bound::Kind::Accumulates);
  CHECK(recip.least_above(Rat(1)).kind == Bound::Kind::None);
  b = recip.greatest_below(Rat(1, 3));
  CHECK(b.value == Rat(1, 4));
  b = recip.greatest_below(Rat(7));
  CHECK(b.value == Rat(1));
  CHECK(recip.greatest_below(Rat(0)).kind == Bound::Kind::None);

  const auto appr = TailRule::approach(Rat(2));
  b = appr.greatest_below(Rat(2));
  CHECK(b.kind == Bound::Kind::Accumulates);
  CHECK(b.value == Rat(2));
  b = appr.greatest_below(Rat(7, 4));
  CHECK(b.value == Rat(5, 3));
  b = appr.least_above(Rat(3, 2));
  CHECK(b.value == Rat(5, 3));
  CHECK(appr.least_above(Rat(2)).kind == Bound::Kind::None);
}

TEST_CASE("description membership and bounds merge blocks") {
  const auto d = desc({Rat(0), Rat(5)}, {TailRule::reciprocal()});
  CHECK(d.member(Rat(5)));
  CHECK(d.member(Rat(1, 9)));
  CHECK(!d.member(Rat(2, 9)));
  auto b = d.least_above(Rat(1));
  CHECK(b.kind == Bound::Kind::Attained);
  CHECK(b.value == Rat(5));
  b = d.least_above(Rat(0));
  CHECK(b.kind == Bound::Kind::Accumulates);
  b = d.greatest_below(Rat(5));
  CHECK(b.value == Rat(1));
}

TEST_CASE("classification: finite chains") {
  const auto c1 = umk::classify_order_type(desc({Rat(0)}, {}));
  CHECK(c1.tag == Tag::FiniteChain);
  CHECK(c1.chain_length == 1);
  const auto c3 = umk::classify_order_type(desc({Rat(0), Rat(1, 2), Rat(1)}, {}));
  CHECK(c3.tag == Tag::FiniteChain);
  CHECK(c3.chain_length == 3);
}

TEST_CASE("classification: single decreasing chains give 1 + omega*") {
  CHECK(umk::classify_order_type(desc({Rat(0)}, {TailRule::reciprocal()})).tag ==
        Tag::OnePlusOmegaStar);
  CHECK(umk::classify_order_type(desc({Rat(0)}, {TailRule::shifted(Rat(1))})).tag ==
        Tag::OnePlusOmegaStar);
  CHECK(umk::classify_order_type(desc({Rat(0)}, {TailRule::geometric(Rat(1), Rat(1, 2))})).tag ==
        Tag::OnePlusOmegaStar);
  // A finite head above the chain merges in.
  CHECK(umk::classify_order_type(desc({Rat(0), Rat(5)}, {TailRule::reciprocal()})).tag ==
        Tag::OnePlusOmegaStar);
  // Two chains sharing the limit are still one chain.
  CHECK(umk::classify_order_type(
            desc({Rat(0)}, {TailRule::reciprocal(), TailRule::geometric(Rat(1), Rat(1, 2))}))
            .tag == Tag::OnePlusOmegaStar);
}

TEST_CASE("classification: two accumulation points") {
  const auto c = umk::classify_order_type(
      desc({Rat(0)}, {TailRule::reciprocal(), TailRule::shifted(Rat(1))}));
  CHECK(c.tag == Tag::Other);
  CHECK(c.evidence.find("1 has no immediate successor") != std::string::npos);

  // Same shape, but nothing of the set sits at the second limit.
  const auto c2 = umk::classify_order_type(
      desc({Rat(0)}, {TailRule::geometric(Rat(1, 2), Rat(1, 2)), TailRule::shifted(Rat(1))}));
  CHECK(c2.tag == Tag::Other);
  CHECK(c2.evidence.find("1/4 has no immediate successor") != std::string::npos);

  const auto c3 = umk::classify_order_type(
      desc({Rat(0)}, {TailRule::shifted(Rat(1)), TailRule::shifted(Rat(2))}));
  CHECK(c3.tag == Tag::Other);
}

TEST_CASE("classification: extra elements below the accumulation point") {
  const auto c =
      umk::classify_order_type(desc({Rat(0), Rat(1, 2)}, {TailRule::shifted(Rat(1))}));
  CHECK(c.tag == Tag::Other);
  CHECK(c.evidence.find("1/2 has no immediate successor") != std::string::npos);
}

TEST_CASE("classification: increasing blocks") {
  const auto no_max = umk::classify_order_type(desc({Rat(0)}, {TailRule::approach(Rat(2))}));
  CHECK(no_max.tag == Tag::Other);
  CHECK(no_max.evidence.find("no largest element") != std::string::npos);

  const auto no_pred =
      umk::classify_order_type(desc({Rat(0), Rat(2)}, {TailRule::approach(Rat(2))}));
  CHECK(no_pred.tag == Tag::Other);
  CHECK(no_pred.evidence.find("no immediate predecessor") != std::string::npos);

  const auto mixed = umk::classify_order_type(
      desc({Rat(0)}, {TailRule::approach(Rat(1)), TailRule::reciprocal()}));
  CHECK(mixed.tag == Tag::Other);
  CHECK(mixed.evidence.find("element 1 has no immediate predecessor") != std::string::npos);
}

TEST_CASE("accumulation at zero") {
  CHECK(umk::accumulation_at_zero(desc({Rat(0)}, {TailRule::reciprocal()})));
  CHECK(umk::accumulation_at_zero(desc({Rat(0)}, {TailRule::geometric(Rat(3), Rat(2, 3))})));
  CHECK(!umk::accumulation_at_zero(desc({Rat(0)}, {TailRule::shifted(Rat(1))})));
  CHECK(!umk::accumulation_at_zero(desc({Rat(0), Rat(1)}, {})));
  CHECK(!umk::accumulation_at_zero(desc({Rat(0)}, {TailRule::approach(Rat(2))})));
}

TEST_CASE("tb check: both routes agree and match the characterization") {
  auto check = [](const SetDescription& d, bool expected) {
    const auto result = umk::tb_distance_set_check(d);
    CHECK(result.totally_boundable == expected);
    CHECK(result.route_order_type == result.route_normal_form);
  };
  check(desc({Rat(0)}, {TailRule::reciprocal()}), true);
  check(desc({Rat(0)}, {TailRule::shifted(Rat(1))}), false);  // order type fine, no accumulation
  check(desc({Rat(0)}, {TailRule::reciprocal(), TailRule::shifted(Rat(1))}),
        false);  // accumulation fine, order type broken
  check(desc({Rat(0), Rat(1)}, {}), false);
  check(desc({Rat(0), Rat(7), Rat(9)}, {TailRule::geometric(Rat(5), Rat(1, 3))}), true);
  check(desc({Rat(0)}, {TailRule::approach(Rat(2))}), false);
}
