#include "balls.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "distance_set.hpp"
#include "errors.hpp"

namespace umk {

namespace {

// Dynamic bitset over point indices; one word covers spaces up to 64 points.
struct Mask {
  std::vector<std::uint64_t> words;

  explicit Mask(std::size_t n) : words((n + 63) / 64, 0) {}
  void set(std::size_t i) { words[i >> 6] |= std::uint64_t(1) << (i & 63); }
  bool get(std::size_t i) const { return (words[i >> 6] >> (i & 63)) & 1; }

  bool intersects(const Mask& o) const {
    for (std::size_t w = 0; w < words.size(); ++w) {
      if (words[w] & o.words[w]) return true;
    }
    return false;
  }
  bool subset_of(const Mask& o) const {
    for (std::size_t w = 0; w < words.size(); ++w) {
      if (words[w] & ~o.words[w]) return false;
    }
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  friend bool operator==(const Mask& a, const Mask& b) { return a.words == b.words; }
};

// Ball membership is a step function of the radius with breakpoints at the
// distance values, so rank thresholds enumerate all distinct balls. The
// threshold is the count of values strictly below r.
int rank_threshold(const FiniteSpace& space, const Rat& r) {
  const auto& values = space.values();
  return static_cast<int>(std::lower_bound(values.begin(), values.end(), r) - values.begin());
}

Mask ball_mask(const FiniteSpace& space, std::size_t center, int threshold) {
  const std::size_t n = space.size();
  Mask m(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (space.rank_at(center, x) < threshold) m.set(x);
  }
  return m;
}

// All radii the exhaustive ball checks sweep: the positive distance values
// plus one value beyond the diameter.
std::vector<Rat> sweep_radii(const FiniteSpace& space) {
  std::vector<Rat> radii;
  for (const auto& v : space.values()) {
    if (v.is_positive()) radii.push_back(v);
  }
  radii.push_back(space.values().back() + Rat(1));
  return radii;
}

struct UnionFind {
  std::vector<std::size_t> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t(0));
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

Ball open_ball(const FiniteSpace& space, const std::string& center, const Rat& radius) {
  const auto c = space.index_of(center);
  if (!c) throw StructureError("unknown point label '" + center + "'");
  if (!radius.is_positive()) throw PreconditionError("ball radius must be positive");
  Ball ball{center, radius, {}};
  const int threshold = rank_threshold(space, radius);
  for (std::size_t x = 0; x < space.size(); ++x) {
    if (space.rank_at(*c, x) < threshold) ball.members.push_back(space.label(x));
  }
  return ball;
}

ValidationReport center_invariance_check(const FiniteSpace& space) {
  ValidationReport report;
  if (space.empty()) return report;
  const std::size_t n = space.size();
  for (const Rat& r : sweep_radii(space)) {
    const int threshold = rank_threshold(space, r);
    std::vector<Mask> balls;
    balls.reserve(n);
    for (std::size_t c = 0; c < n; ++c) balls.push_back(ball_mask(space, c, threshold));
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t a = 0; a < n; ++a) {
        if (!balls[c].get(a)) continue;
        if (!(balls[a] == balls[c])) {
          report.witnesses.push_back({{space.label(c), space.label(a)},
                                      "center_invariance",
                                      r.str(),
                                      std::to_string(balls[c].count()) + " vs " +
                                          std::to_string(balls[a].count()) + " members"});
        }
      }
    }
  }
  return report;
}

ValidationReport nested_or_disjoint_check(const FiniteSpace& space) {
  ValidationReport report;
  if (space.empty()) return report;
  const std::size_t n = space.size();
  const auto radii = sweep_radii(space);
  // Ball masks per radius index and center.
  std::vector<std::vector<Mask>> balls;
  balls.reserve(radii.size());
  for (const Rat& r : radii) {
    const int threshold = rank_threshold(space, r);
    std::vector<Mask> row;
    row.reserve(n);
    for (std::size_t c = 0; c < n; ++c) row.push_back(ball_mask(space, c, threshold));
    balls.push_back(std::move(row));
  }
  for (std::size_t ri = 0; ri < radii.size(); ++ri) {
    for (std::size_t rj = ri; rj < radii.size(); ++rj) {
      for (std::size_t c1 = 0; c1 < n; ++c1) {
        for (std::size_t c2 = 0; c2 < n; ++c2) {
          const Mask& small = balls[ri][c1];
          const Mask& big = balls[rj][c2];
          if (!small.intersects(big)) continue;
          const bool ok = ri == rj ? small == big : small.subset_of(big);
          if (!ok) {
            report.witnesses.push_back({{space.label(c1), space.label(c2)},
                                        "nested_or_disjoint",
                                        radii[ri].str(),
                                        radii[rj].str()});
          }
        }
      }
    }
  }
  return report;
}

BallPartition ball_partition(const FiniteSpace& space, const Rat& radius,
                             const std::vector<std::string>& candidates) {
  if (!radius.is_positive()) throw PreconditionError("ball radius must be positive");
  if (candidates.empty()) throw PreconditionError("ball partition needs at least one candidate");
  if (!space.ultrametric()) {
    throw PreconditionError(
        "ball partition requires an ultrametric space: ball intersection is not transitive "
        "otherwise");
  }
  std::vector<std::size_t> cand;
  cand.reserve(candidates.size());
  for (const auto& label : candidates) {
    const auto idx = space.index_of(label);
    if (!idx) throw StructureError("unknown point label '" + label + "'");
    if (std::find(cand.begin(), cand.end(), *idx) == cand.end()) cand.push_back(*idx);
  }

  const int threshold = rank_threshold(space, radius);
  std::vector<Mask> masks;
  masks.reserve(cand.size());
  for (auto c : cand) masks.push_back(ball_mask(space, c, threshold));

  UnionFind uf(cand.size());
  for (std::size_t i = 0; i < cand.size(); ++i) {
    for (std::size_t j = i + 1; j < cand.size(); ++j) {
      if (masks[i].intersects(masks[j])) uf.unite(i, j);
    }
  }

  // Representative per class: lexicographically smallest candidate label.
  std::vector<std::size_t> rep(cand.size());
  std::iota(rep.begin(), rep.end(), std::size_t(0));
  for (std::size_t i = 0; i < cand.size(); ++i) {
    const std::size_t root = uf.find(i);
    if (space.label(cand[i]) < space.label(cand[rep[root]])) rep[root] = i;
  }

  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    if (uf.find(i) == i) order.push_back(rep[i]);
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return space.label(cand[a]) < space.label(cand[b]);
  });

  BallPartition partition{radius, {}};
  for (auto i : order) {
    partition.classes.push_back(open_ball(space, space.label(cand[i]), radius));
  }
  return partition;
}

}  // namespace umk
