#include "gamma.hpp"

#include <algorithm>
#include <unordered_set>

#include "errors.hpp"

namespace umk {

OrderedGamma OrderedGamma::from_names(std::vector<std::string> names) {
  if (names.empty()) throw StructureError("gamma order needs at least one element");
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw StructureError("empty gamma element name");
    if (!seen.insert(n).second) throw StructureError("duplicate gamma element '" + n + "'");
  }
  OrderedGamma g;
  g.names_ = std::move(names);
  return g;
}

std::size_t OrderedGamma::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  throw StructureError("unknown gamma element '" + std::string(name) + "'");
}

GammaDistance GammaDistance::create(OrderedGamma gamma, std::vector<std::string> labels,
                                    std::vector<std::vector<std::string>> matrix) {
  const std::size_t n = labels.size();
  {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels) {
      if (l.empty()) throw StructureError("empty point label");
      if (!seen.insert(l).second) throw StructureError("duplicate point label '" + l + "'");
    }
  }
  if (matrix.size() != n) throw StructureError("gamma matrix is not square");
  GammaDistance gd;
  gd.entries_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) throw StructureError("gamma matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      gd.entries_[i * n + j] = gamma.index_of(matrix[i][j]);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (gd.entries_[i * n + i] != 0) {
      throw StructureError("gamma diagonal must be the smallest element at (" + labels[i] + ", " +
                           labels[i] + ")");
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (gd.entries_[i * n + j] != gd.entries_[j * n + i]) {
        throw StructureError("asymmetric gamma entries at (" + labels[i] + ", " + labels[j] +
                             ")");
      }
    }
  }
  gd.gamma_ = std::move(gamma);
  gd.labels_ = std::move(labels);
  return gd;
}

FiniteSpace GammaDistance::embed() const {
  const std::size_t n = size();
  std::vector<Rat> flat(n * n);
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    flat[k] = Rat(static_cast<long long>(entries_[k]));
  }
  return FiniteSpace::from_flat(labels_, std::move(flat));
}

ValidationReport validate_gamma_distance(const GammaDistance& gd) {
  ValidationReport report;
  const std::size_t n = gd.size();
  const auto& gamma = gd.gamma();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (gd.at(i, j) == 0) {
        report.witnesses.push_back(
            {{gd.label(i), gd.label(j)}, "gamma_identity", gamma.smallest(), gamma.smallest()});
      }
    }
  }
  // Condition (3) exactly as stated: an implication quantified over every
  // gamma and every ordered triple.
  for (std::size_t g = 0; g < gamma.size(); ++g) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          if (gd.at(x, y) <= g && gd.at(y, z) <= g && !(gd.at(x, z) <= g)) {
            report.witnesses.push_back({{gd.label(x), gd.label(y), gd.label(z)},
                                        "gamma_triangle",
                                        gamma.name(gd.at(x, z)),
                                        gamma.name(g)});
          }
        }
      }
    }
  }
  return report;
}

bool gamma_strong_triangle_holds(const GammaDistance& gd) {
  const std::size_t n = gd.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (gd.at(x, y) > std::max(gd.at(x, z), gd.at(z, y))) return false;
      }
    }
  }
  return true;
}

std::vector<std::string> gamma_ball(const GammaDistance& gd, const std::string& center,
                                    const std::string& element) {
  const auto& labels = gd.labels();
  const auto it = std::find(labels.begin(), labels.end(), center);
  if (it == labels.end()) throw StructureError("unknown point label '" + center + "'");
  const std::size_t c = static_cast<std::size_t>(it - labels.begin());
  const std::size_t g = gd.gamma().index_of(element);
  if (g == 0) {
    throw PreconditionError("gamma balls are defined for elements above the smallest one");
  }
  std::vector<std::string> members;
  for (std::size_t x = 0; x < gd.size(); ++x) {
    if (gd.at(c, x) < g) members.push_back(gd.label(x));
  }
  return members;
}

GammaBaseResult gamma_base_check(const GammaDistance& gd) {
  if (gd.gamma().size() < 2) {
    throw PreconditionError("the ball family is a base only when |Gamma| >= 2");
  }
  if (!validate_gamma_distance(gd).valid()) {
    throw PreconditionError("gamma base check requires a valid gamma distance");
  }
  GammaBaseResult result{true, {}};
  const std::size_t n = gd.size();
  const std::size_t gn = gd.gamma().size();

  struct Entry {
    std::size_t center, g;
    std::vector<char> members;
  };
  std::vector<Entry> family;
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t g = 1; g < gn; ++g) {
      Entry e{c, g, std::vector<char>(n, 0)};
      for (std::size_t x = 0; x < n; ++x) e.members[x] = gd.at(c, x) < g;
      family.push_back(std::move(e));
    }
  }

  // Coverage.
  for (std::size_t p = 0; p < n; ++p) {
    bool covered = false;
    for (const auto& e : family) covered = covered || e.members[p];
    if (!covered) {
      result.holds = false;
      result.report.witnesses.push_back({{gd.label(p)}, "base_cover", "-", "-"});
    }
  }

  // Refinement: every point of an intersection has a family member around it
  // inside the intersection.
  for (const auto& b1 : family) {
    for (const auto& b2 : family) {
      for (std::size_t p = 0; p < n; ++p) {
        if (!(b1.members[p] && b2.members[p])) continue;
        bool found = false;
        for (const auto& b3 : family) {
          if (!b3.members[p]) continue;
          bool inside = true;
          for (std::size_t x = 0; x < n && inside; ++x) {
            if (b3.members[x] && !(b1.members[x] && b2.members[x])) inside = false;
          }
          if (inside) {
            found = true;
            break;
          }
        }
        if (!found) {
          result.holds = false;
          result.report.witnesses.push_back({{gd.label(b1.center), gd.label(b2.center),
                                              gd.label(p)},
                                             "base_refinement",
                                             gd.gamma().name(b1.g),
                                             gd.gamma().name(b2.g)});
        }
      }
    }
  }
  return result;
}

}  // namespace umk
