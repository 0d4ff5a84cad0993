#include "space.hpp"

#include <algorithm>
#include <unordered_set>

#include "errors.hpp"

namespace umk {

FiniteSpace FiniteSpace::create(std::vector<std::string> labels,
                                std::vector<std::vector<Rat>> matrix) {
  const std::size_t n = labels.size();
  if (matrix.size() != n) {
    throw StructureError("matrix has " + std::to_string(matrix.size()) + " rows for " +
                         std::to_string(n) + " labels");
  }
  std::vector<Rat> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) {
      throw StructureError("row " + std::to_string(i + 1) + " has " +
                           std::to_string(matrix[i].size()) + " entries, expected " +
                           std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) flat.push_back(matrix[i][j]);
  }
  return from_flat(std::move(labels), std::move(flat));
}

FiniteSpace FiniteSpace::from_flat(std::vector<std::string> labels, std::vector<Rat> flat) {
  const std::size_t n = labels.size();
  if (flat.size() != n * n) throw StructureError("matrix is not square");
  {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels) {
      if (l.empty()) throw StructureError("empty point label");
      if (!seen.insert(l).second) throw StructureError("duplicate point label '" + l + "'");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!flat[i * n + i].is_zero()) {
      throw StructureError("nonzero diagonal at (" + labels[i] + ", " + labels[i] + ")");
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (flat[i * n + j] != flat[j * n + i]) {
        throw StructureError("asymmetric entries at (" + labels[i] + ", " + labels[j] + ")");
      }
      if (flat[i * n + j].is_negative()) {
        throw StructureError("negative distance at (" + labels[i] + ", " + labels[j] + ")");
      }
    }
  }
  FiniteSpace s;
  s.labels_ = std::move(labels);
  s.dist_ = std::move(flat);
  s.index_values();
  return s;
}

void FiniteSpace::index_values() {
  values_ = dist_;
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
  const std::size_t n = labels_.size();
  rank_.resize(n * n);
  for (std::size_t k = 0; k < dist_.size(); ++k) {
    rank_[k] = static_cast<int>(
        std::lower_bound(values_.begin(), values_.end(), dist_[k]) - values_.begin());
  }
  // Cached ultrametric verdict: axiom 1 plus strong triangle. For a triple
  // the strong triangle inequality holds in all three rotations iff the
  // maximum side occurs at least twice.
  ultrametric_ = true;
  for (std::size_t i = 0; i < n && ultrametric_; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rank_[i * n + j] == 0) {
        ultrametric_ = false;
        break;
      }
    }
  }
  for (std::size_t i = 0; i < n && ultrametric_; ++i) {
    for (std::size_t j = i + 1; j < n && ultrametric_; ++j) {
      const int rij = rank_[i * n + j];
      for (std::size_t k = j + 1; k < n; ++k) {
        const int rik = rank_[i * n + k];
        const int rjk = rank_[j * n + k];
        const int top = std::max({rij, rik, rjk});
        const int hits = (rij == top) + (rik == top) + (rjk == top);
        if (hits < 2) {
          ultrametric_ = false;
          break;
        }
      }
    }
  }
}

std::optional<std::size_t> FiniteSpace::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

namespace {

void append_identity_witnesses(const FiniteSpace& s, ValidationReport& report) {
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (s.at(i, j).is_zero()) {
        report.witnesses.push_back(
            {{s.label(i), s.label(j)}, "identity_of_indiscernibles", "0", "0"});
      }
    }
  }
}

}  // namespace

ValidationReport validate_metric(const FiniteSpace& space) {
  ValidationReport report;
  append_identity_witnesses(space, report);
  const std::size_t n = space.size();
  const auto& values = space.values();
  const std::size_t v = values.size();

  // Triangle checks need sums; memoize value-pair sums when the value set is
  // small, which it always is for ultrametric-shaped inputs.
  std::vector<Rat> sums;
  std::vector<char> have;
  const bool memo = v > 0 && v <= 1024;
  if (memo) {
    sums.resize(v * v);
    have.assign(v * v, 0);
  }
  auto sum_of = [&](int a, int b) -> const Rat& {
    if (!memo) {
      static thread_local Rat scratch;
      scratch = values[a] + values[b];
      return scratch;
    }
    const std::size_t key = static_cast<std::size_t>(a) * v + b;
    if (!have[key]) {
      sums[key] = values[a] + values[b];
      have[key] = 1;
    }
    return sums[key];
  };

  auto check = [&](std::size_t x, std::size_t y, std::size_t z) {
    const Rat& base = space.at(x, y);
    const Rat& side = sum_of(space.rank_at(x, z), space.rank_at(z, y));
    if (base > side) {
      report.witnesses.push_back(
          {{space.label(x), space.label(y), space.label(z)}, "triangle", base.str(), side.str()});
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        check(i, j, k);
        check(i, k, j);
        check(j, k, i);
      }
    }
  }
  return report;
}

ValidationReport validate_ultrametric(const FiniteSpace& space) {
  ValidationReport report;
  append_identity_witnesses(space, report);
  const std::size_t n = space.size();
  const auto& values = space.values();
  auto check = [&](std::size_t x, std::size_t y, std::size_t z) {
    const int rxy = space.rank_at(x, y);
    const int other = std::max(space.rank_at(x, z), space.rank_at(z, y));
    if (rxy > other) {
      report.witnesses.push_back({{space.label(x), space.label(y), space.label(z)},
                                  "strong_triangle",
                                  values[rxy].str(),
                                  values[other].str()});
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        check(i, j, k);
        check(i, k, j);
        check(j, k, i);
      }
    }
  }
  return report;
}

std::vector<std::array<std::string, 3>> isosceles_witnesses(const FiniteSpace& space) {
  std::vector<std::array<std::string, 3>> out;
  const std::size_t n = space.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const int rij = space.rank_at(i, j);
      for (std::size_t k = j + 1; k < n; ++k) {
        const int rik = space.rank_at(i, k);
        const int rjk = space.rank_at(j, k);
        const int top = std::max({rij, rik, rjk});
        const int hits = (rij == top) + (rik == top) + (rjk == top);
        if (hits < 2) out.push_back({space.label(i), space.label(j), space.label(k)});
      }
    }
  }
  return out;
}

std::vector<std::array<std::string, 4>> four_point_check(const FiniteSpace& space) {
  std::vector<std::array<std::string, 4>> out;
  const std::size_t n = space.size();
  if (n < 4) return out;
  std::array<std::size_t, 4> q{};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        for (std::size_t l = k + 1; l < n; ++l) {
          q = {i, j, k, l};
          std::sort(q.begin(), q.end());
          do {
            const std::size_t a = q[0], b = q[1], c = q[2], d = q[3];
            const int rab = space.rank_at(a, b);
            if (rab > space.rank_at(a, d) && rab > space.rank_at(b, c) &&
                rab != space.rank_at(c, d)) {
              out.push_back({space.label(a), space.label(b), space.label(c), space.label(d)});
            }
          } while (std::next_permutation(q.begin(), q.end()));
        }
      }
    }
  }
  return out;
}

Rat diameter(const FiniteSpace& space) {
  if (space.empty()) throw PreconditionError("diameter of the empty space");
  return space.values().back();
}

}  // namespace umk
