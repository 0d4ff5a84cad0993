#include <doctest.h>

#include <random>
#include <set>

#include "construct.hpp"
#include "dendrogram.hpp"
#include "distance_set.hpp"
#include "errors.hpp"
#include "testutil.hpp"

using umk::Dendrogram;
using umk::FiniteSpace;
using umk::Rat;

namespace {

FiniteSpace two_clusters() {
  const Rat h(1, 2);
  return FiniteSpace::create({"a", "b", "c", "d"},
                             {{Rat(0), h, Rat(1), Rat(1)},
                              {h, Rat(0), Rat(1), Rat(1)},
                              {Rat(1), Rat(1), Rat(0), h},
                              {Rat(1), Rat(1), h, Rat(0)}});
}

void collect_levels(const Dendrogram::Node& node, std::set<Rat>& levels) {
  if (node.is_leaf()) return;
  levels.insert(node.level);
  for (const auto& child : node.children) collect_levels(child, levels);
}

// Random canonical tree: children ordered by smallest leaf, strictly
// decreasing levels, distinct leaves.
Dendrogram::Node random_tree(std::mt19937& rng, std::vector<std::string> leaves,
                             const std::vector<Rat>& ladder, std::size_t depth) {
  if (leaves.size() == 1) return Dendrogram::Node{Rat(0), {}, leaves.front()};
  const std::size_t k = 2 + rng() % (leaves.size() - 1);
  std::vector<std::vector<std::string>> groups(k);
  for (std::size_t i = 0; i < leaves.size(); ++i) groups[i % k].push_back(leaves[i]);
  Dendrogram::Node node;
  node.level = ladder[depth];
  for (auto& g : groups) node.children.push_back(random_tree(rng, std::move(g), ladder, depth + 1));
  std::sort(node.children.begin(), node.children.end(),
            [](const Dendrogram::Node& a, const Dendrogram::Node& b) {
              auto min_leaf = [](const Dendrogram::Node& n, auto&& self) -> const std::string& {
                if (n.is_leaf()) return n.leaf;
                const std::string* best = &self(n.children.front(), self);
                for (std::size_t i = 1; i < n.children.size(); ++i) {
                  const std::string& m = self(n.children[i], self);
                  if (m < *best) best = &m;
                }
                return *best;
              };
              return min_leaf(a, min_leaf) < min_leaf(b, min_leaf);
            });
  return node;
}

}  // namespace

TEST_CASE("build_dendrogram on the worked examples") {
  const auto clusters = build_dendrogram(two_clusters());
  CHECK(clusters.root.level == Rat(1));
  REQUIRE(clusters.root.children.size() == 2);
  CHECK(clusters.root.children[0].level == Rat(1, 2));
  CHECK(clusters.root.children[1].level == Rat(1, 2));

  const auto single = build_dendrogram(FiniteSpace::create({"x"}, {{Rat(0)}}));
  CHECK(single.root.is_leaf());
  CHECK(single.root.leaf == "x");

  const auto dlps = build_dendrogram(umk::dlps_space({Rat(0), Rat(1, 2), Rat(1)}));
  CHECK(dlps.root.level == Rat(1));
  REQUIRE(dlps.root.children.size() == 2);
  // Children ordered by smallest leaf label: the {0, 1/2} subtree first.
  CHECK(dlps.root.children[0].level == Rat(1, 2));
  CHECK(dlps.root.children[1].leaf == "1");

  CHECK_THROWS_AS(build_dendrogram(FiniteSpace::create({}, {})), umk::PreconditionError);
  const auto line = FiniteSpace::create({"0", "1", "2"},
                                        {{Rat(0), Rat(1), Rat(2)},
                                         {Rat(1), Rat(0), Rat(1)},
                                         {Rat(2), Rat(1), Rat(0)}});
  CHECK_THROWS_AS(build_dendrogram(line), umk::PreconditionError);
}

TEST_CASE("dendrogram_to_space small cases") {
  const Dendrogram leaf{Dendrogram::Node{Rat(0), {}, "solo"}};
  const auto single = dendrogram_to_space(leaf);
  CHECK(single.size() == 1);

  Dendrogram pair;
  pair.root.level = Rat(1);
  pair.root.children.push_back({Rat(0), {}, "a"});
  pair.root.children.push_back({Rat(0), {}, "b"});
  const auto two = dendrogram_to_space(pair);
  CHECK(two.at(0, 1) == Rat(1));

  // Malformed trees throw: one child, duplicated leaf, non-decreasing level.
  Dendrogram one_child;
  one_child.root.level = Rat(1);
  one_child.root.children.push_back({Rat(0), {}, "a"});
  CHECK_THROWS_AS(dendrogram_to_space(one_child), umk::StructureError);

  Dendrogram dup;
  dup.root.level = Rat(1);
  dup.root.children.push_back({Rat(0), {}, "a"});
  dup.root.children.push_back({Rat(0), {}, "a"});
  CHECK_THROWS_AS(dendrogram_to_space(dup), umk::StructureError);

  Dendrogram updown;
  updown.root.level = Rat(1);
  Dendrogram::Node inner;
  inner.level = Rat(2);
  inner.children.push_back({Rat(0), {}, "b"});
  inner.children.push_back({Rat(0), {}, "c"});
  updown.root.children.push_back({Rat(0), {}, "a"});
  updown.root.children.push_back(inner);
  CHECK_THROWS_AS(dendrogram_to_space(updown), umk::StructureError);
}

TEST_CASE("round trip: space -> tree -> space") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 80; ++trial) {
    const auto space = testutil::random_ultra_space(rng, 1 + rng() % 20);
    const auto tree = build_dendrogram(space);
    const auto back = dendrogram_to_space(tree);
    CHECK(back == space);

    // Node levels are exactly the positive distance values.
    std::set<Rat> levels;
    collect_levels(tree.root, levels);
    std::set<Rat> expected;
    for (const auto& v : space.values()) {
      if (v.is_positive()) expected.insert(v);
    }
    CHECK(levels == expected);
  }
}

TEST_CASE("round trip: canonical tree -> space -> tree") {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 14;
    const Dendrogram tree{random_tree(rng, testutil::point_labels(n),
                                      testutil::random_ladder(rng, n), 0)};
    const auto space = dendrogram_to_space(tree);
    CHECK(build_dendrogram(space) == tree);
  }
}

TEST_CASE("newick and JSON rendering") {
  const auto tree = build_dendrogram(two_clusters());
  CHECK(dendrogram_to_newick(tree) == "((a,b):1/2,(c,d):1/2):1;");

  const std::string json = dendrogram_to_json(tree);
  const auto parsed = umk::dendrogram_from_json(json);
  CHECK(parsed == tree);

  const Dendrogram leaf{Dendrogram::Node{Rat(0), {}, "x"}};
  CHECK(dendrogram_to_newick(leaf) == "x;");
  CHECK(dendrogram_to_json(leaf) == "{\"leaf\":\"x\"}");

  CHECK_THROWS_AS(umk::dendrogram_from_json("{"), umk::ParseError);
  CHECK_THROWS_AS(umk::dendrogram_from_json("{\"level\":\"1\"}"), umk::ParseError);
  // Structurally bad but syntactically fine: single child.
  CHECK_THROWS_AS(
      umk::dendrogram_from_json("{\"level\":\"1\",\"children\":[{\"leaf\":\"a\"}]}"),
      umk::StructureError);
}
