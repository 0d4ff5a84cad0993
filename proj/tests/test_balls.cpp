#include <doctest.h>

#include <random>
#include <set>

#include "balls.hpp"
#include "construct.hpp"
#include "distance_set.hpp"
#include "errors.hpp"
#include "testutil.hpp"

using umk::FiniteSpace;
using umk::Rat;

namespace {

FiniteSpace line_metric() {
  return FiniteSpace::create({"0", "1", "2"},
                             {{Rat(0), Rat(1), Rat(2)},
                              {Rat(1), Rat(0), Rat(1)},
                              {Rat(2), Rat(1), Rat(0)}});
}

// Members of B_r(c) computed naively from the rational entries.
std::vector<std::string> naive_ball(const FiniteSpace& s, std::size_t c, const Rat& r) {
  std::vector<std::string> out;
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (s.at(c, x) < r) out.push_back(s.label(x));
  }
  return out;
}

}  // namespace

TEST_CASE("open_ball membership is strict") {
  const auto dlps = umk::dlps_space({Rat(0), Rat(1, 2), Rat(1)});
  const auto ball = umk::open_ball(dlps, "0", Rat(1));
  CHECK(ball.members == std::vector<std::string>{"0", "1/2"});

  // Radius above the diameter captures everything.
  CHECK(umk::open_ball(dlps, "1/2", Rat(2)).members.size() == 3);
  // Radius at or below the least positive distance keeps only the center.
  CHECK(umk::open_ball(dlps, "1/2", Rat(1, 2)).members ==
        std::vector<std::string>{"1/2"});

  CHECK_THROWS_AS(umk::open_ball(dlps, "nope", Rat(1)), umk::StructureError);
  CHECK_THROWS_AS(umk::open_ball(dlps, "0", Rat(0)), umk::PreconditionError);
  CHECK_THROWS_AS(umk::open_ball(dlps, "0", Rat(-1)), umk::PreconditionError);
}

TEST_CASE("open_ball matches the naive scan on random spaces") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const auto space = testutil::random_ultra_space(rng, 2 + rng() % 12);
    for (const auto& v : space.values()) {
      if (!v.is_positive()) continue;
      const std::size_t c = rng() % space.size();
      CHECK(umk::open_ball(space, space.label(c), v).members == naive_ball(space, c, v));
    }
  }
}

TEST_CASE("center invariance holds on ultrametric spaces and fails on the line") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const auto space = testutil::random_ultra_space(rng, 2 + rng() % 16);
    CHECK(umk::center_invariance_check(space).valid());
  }
  CHECK(umk::center_invariance_check(FiniteSpace::create({"x"}, {{Rat(0)}})).valid());

  // 0 lies in B_{3/2}(1) = {0,1,2} but B_{3/2}(0) = {0,1}. The sweep uses
  // radii from the distance set, and r = 2 exhibits the same failure:
  // B_2(1) = {0,1,2}, B_2(0) = {0,1}.
  const auto report = umk::center_invariance_check(line_metric());
  CHECK(!report.valid());
}

TEST_CASE("nested or disjoint holds on ultrametric spaces and fails on the line") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 25; ++trial) {
    const auto space = testutil::random_ultra_space(rng, 2 + rng() % 16);
    CHECK(umk::nested_or_disjoint_check(space).valid());
  }
  CHECK(!umk::nested_or_disjoint_check(line_metric()).valid());

  // A single ball covering the space is trivially nested.
  const auto pair = FiniteSpace::create({"a", "b"}, {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}});
  CHECK(umk::nested_or_disjoint_check(pair).valid());
}

TEST_CASE("ball_partition splits the DLPS example") {
  const auto space = umk::dlps_space({Rat(0), Rat(1, 2), Rat(2), Rat(3)});
  const auto partition = umk::ball_partition(space, Rat(1), space.labels());
  REQUIRE(partition.classes.size() == 3);
  CHECK(partition.classes[0].center == "0");
  CHECK(partition.classes[0].members == std::vector<std::string>{"0", "1/2"});
  CHECK(partition.classes[1].center == "2");
  CHECK(partition.classes[1].members == std::vector<std::string>{"2"});
  CHECK(partition.classes[2].center == "3");
  CHECK(partition.classes[2].members == std::vector<std::string>{"3"});

  // Radius above the diameter: one class, the whole space.
  const auto whole = umk::ball_partition(space, Rat(4), space.labels());
  REQUIRE(whole.classes.size() == 1);
  CHECK(whole.classes[0].members.size() == 4);

  // Radius at the least positive distance: singletons.
  const auto singles = umk::ball_partition(space, Rat(1, 2), space.labels());
  CHECK(singles.classes.size() == 4);

  CHECK_THROWS_AS(umk::ball_partition(line_metric(), Rat(1), line_metric().labels()),
                  umk::PreconditionError);
  CHECK_THROWS_AS(umk::ball_partition(space, Rat(1), {}), umk::PreconditionError);
  CHECK_THROWS_AS(umk::ball_partition(space, Rat(1), {"missing"}), umk::StructureError);
}

TEST_CASE("ball_partition classes are disjoint and cover the candidate balls") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const auto space = testutil::random_ultra_space(rng, 2 + rng() % 10);
    // Random nonempty candidate subset.
    std::vector<std::string> candidates;
    for (const auto& label : space.labels()) {
      if (rng() % 2) candidates.push_back(label);
    }
    if (candidates.empty()) candidates.push_back(space.label(0));

    for (const auto& r : space.values()) {
      if (!r.is_positive()) continue;
      const auto partition = umk::ball_partition(space, r, candidates);

      std::set<std::string> in_classes;
      std::size_t total = 0;
      for (const auto& ball : partition.classes) {
        CHECK(!ball.members.empty());
        total += ball.members.size();
        in_classes.insert(ball.members.begin(), ball.members.end());
      }
      CHECK(total == in_classes.size());  // pairwise disjoint

      std::set<std::string> in_candidate_balls;
      for (const auto& c : candidates) {
        const auto ball = umk::open_ball(space, c, r);
        in_candidate_balls.insert(ball.members.begin(), ball.members.end());
      }
      CHECK(in_classes == in_candidate_balls);
    }
  }
}
