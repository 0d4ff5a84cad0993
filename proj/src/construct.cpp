#include "construct.hpp"

#include <algorithm>
#include <unordered_set>

#include "balls.hpp"
#include "errors.hpp"

namespace umk {

Rat step_function_f(const Rat& t) {
  if (t.is_negative()) throw PreconditionError("step function is defined on t >= 0");
  if (t.is_zero()) return Rat(0);
  if (t >= Rat(1)) return Rat(1);
  // 1/(n+1) < t <= 1/n  <=>  n <= 1/t < n+1.
  return Rat(1, t.den() / t.num());
}

PreservingFunction PreservingFunction::identity() {
  return from_pieces("identity", {Piece{Rat(0), true, std::nullopt, false, PieceKind::Identity,
                                        Rat(0)}});
}

PreservingFunction PreservingFunction::staircase() {
  return from_pieces("step", {Piece{Rat(0), true, std::nullopt, false, PieceKind::Staircase,
                                    Rat(0)}});
}

PreservingFunction PreservingFunction::from_pieces(std::string name, std::vector<Piece> pieces) {
  if (pieces.empty()) throw StructureError("preserving function needs at least one piece");
  if (!(pieces.front().lo.is_zero() && pieces.front().lo_closed)) {
    throw StructureError("preserving function pieces must start at 0");
  }
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& p = pieces[i];
    if (p.hi) {
      if (*p.hi < p.lo || (*p.hi == p.lo && !(p.lo_closed && p.hi_closed))) {
        throw StructureError("empty piece interval");
      }
      if (i + 1 == pieces.size()) throw StructureError("last piece must be unbounded");
      const auto& q = pieces[i + 1];
      if (q.lo != *p.hi || q.lo_closed == p.hi_closed) {
        throw StructureError("pieces must abut exactly");
      }
    } else if (i + 1 != pieces.size()) {
      throw StructureError("unbounded piece before the last one");
    }
    if (p.kind == PieceKind::Constant && p.value.is_negative()) {
      throw StructureError("preserving function values must be nonnegative");
    }
  }
  return PreservingFunction(std::move(name), std::move(pieces));
}

Rat PreservingFunction::eval(const Rat& t) const {
  if (t.is_negative()) throw PreconditionError("preserving function argument must be >= 0");
  for (const auto& p : pieces_) {
    const bool above_lo = p.lo_closed ? t >= p.lo : t > p.lo;
    const bool below_hi = !p.hi || (p.hi_closed ? t <= *p.hi : t < *p.hi);
    if (above_lo && below_hi) {
      switch (p.kind) {
        case PieceKind::Constant:
          return p.value;
        case PieceKind::Identity:
          return t;
        case PieceKind::Staircase:
          return step_function_f(t);
      }
    }
  }
  throw Error("preserving function pieces do not cover t = " + t.str());
}

const std::map<std::string, PreservingFunction>& preserving_catalog() {
  using PK = PreservingFunction::PieceKind;
  using Piece = PreservingFunction::Piece;
  static const std::map<std::string, PreservingFunction> catalog = [] {
    std::map<std::string, PreservingFunction> m;
    auto add = [&m](PreservingFunction f) { m.emplace(f.name(), std::move(f)); };
    auto pt = [](Rat lo, bool locl, std::optional<Rat> hi, bool hicl, PK kind, Rat value) {
      return Piece{std::move(lo), locl, std::move(hi), hicl, kind, std::move(value)};
    };

    add(PreservingFunction::identity());
    add(PreservingFunction::staircase());
    // Collapse every positive distance to 1.
    add(PreservingFunction::from_pieces(
        "collapse1", {pt(0, true, Rat(0), true, PK::Constant, 0),
                      pt(0, false, std::nullopt, false, PK::Constant, 1)}));
    // Two-step staircase at 1/2.
    add(PreservingFunction::from_pieces(
        "halfstep", {pt(0, true, Rat(0), true, PK::Constant, 0),
                     pt(0, false, Rat(1, 2), true, PK::Constant, Rat(1, 2)),
                     pt(Rat(1, 2), false, std::nullopt, false, PK::Constant, 1)}));
    // Three-step staircase at 1/4, 1/2.
    add(PreservingFunction::from_pieces(
        "quartersteps", {pt(0, true, Rat(0), true, PK::Constant, 0),
                         pt(0, false, Rat(1, 4), true, PK::Constant, Rat(1, 4)),
                         pt(Rat(1, 4), false, Rat(1, 2), true, PK::Constant, Rat(1, 2)),
                         pt(Rat(1, 2), false, std::nullopt, false, PK::Constant, 1)}));
    // Identity clamped to 1 from 1 on.
    add(PreservingFunction::from_pieces(
        "clamp1", {pt(0, true, Rat(1), true, PK::Identity, 0),
                   pt(Rat(1), false, std::nullopt, false, PK::Constant, 1)}));
    // Two plateaus away from the staircase values.
    add(PreservingFunction::from_pieces(
        "twolevel", {pt(0, true, Rat(0), true, PK::Constant, 0),
                     pt(0, false, Rat(1), true, PK::Constant, Rat(1, 2)),
                     pt(Rat(1), false, std::nullopt, false, PK::Constant, 2)}));

    // The rest violate the preserving condition somewhere.
    // Swaps the values at 1 and 2; not monotone.
    add(PreservingFunction::from_pieces(
        "swap12", {pt(0, true, Rat(1), false, PK::Identity, 0),
                   pt(Rat(1), true, Rat(1), true, PK::Constant, 2),
                   pt(Rat(1), false, Rat(2), false, PK::Identity, 0),
                   pt(Rat(2), true, Rat(2), true, PK::Constant, 1),
                   pt(Rat(2), false, std::nullopt, false, PK::Identity, 0)}));
    // Vanishes on (0, 1/2]; zero away from zero.
    add(PreservingFunction::from_pieces(
        "vanishlow", {pt(0, true, Rat(1, 2), true, PK::Constant, 0),
                      pt(Rat(1, 2), false, std::nullopt, false, PK::Identity, 0)}));
    // Constant 1 everywhere, including 0.
    add(PreservingFunction::from_pieces(
        "const1", {pt(0, true, std::nullopt, false, PK::Constant, 1)}));
    // Identically zero.
    add(PreservingFunction::from_pieces(
        "zero", {pt(0, true, std::nullopt, false, PK::Constant, 0)}));
    // Drops above 1; not monotone.
    add(PreservingFunction::from_pieces(
        "drophigh", {pt(0, true, Rat(1), true, PK::Identity, 0),
                     pt(Rat(1), false, std::nullopt, false, PK::Constant, Rat(1, 2))}));
    // Dips at the single point 3.
    add(PreservingFunction::from_pieces(
        "dip3", {pt(0, true, Rat(3), false, PK::Identity, 0),
                 pt(Rat(3), true, Rat(3), true, PK::Constant, Rat(1, 3)),
                 pt(Rat(3), false, std::nullopt, false, PK::Identity, 0)}));
    // Inverted two-step staircase; not monotone.
    add(PreservingFunction::from_pieces(
        "invsteps", {pt(0, true, Rat(0), true, PK::Constant, 0),
                     pt(0, false, Rat(1), true, PK::Constant, 1),
                     pt(Rat(1), false, std::nullopt, false, PK::Constant, Rat(1, 2))}));
    return m;
  }();
  return catalog;
}

FiniteSpace dlps_space(const std::vector<Rat>& a) {
  std::vector<Rat> values = a;
  std::sort(values.begin(), values.end());
  if (std::adjacent_find(values.begin(), values.end()) != values.end()) {
    throw StructureError("DLPS base set must have distinct elements");
  }
  if (values.empty() || !values.front().is_zero()) {
    throw StructureError("a set is a distance set only if 0 belongs to it");
  }
  const std::size_t n = values.size();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& v : values) labels.push_back(v.str());
  std::vector<Rat> flat(n * n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      flat[i * n + j] = values[j];  // max of two distinct sorted values
      flat[j * n + i] = values[j];
    }
  }
  return FiniteSpace::from_flat(std::move(labels), std::move(flat));
}

FiniteSpace partition_discrete(const std::vector<std::vector<std::string>>& classes) {
  if (classes.empty()) throw StructureError("partition needs at least one class");
  std::vector<std::string> labels;
  std::vector<long long> class_of;
  std::unordered_set<std::string> seen;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) {
      throw StructureError("partition class " + std::to_string(c + 1) + " is empty");
    }
    for (const auto& label : classes[c]) {
      if (!seen.insert(label).second) {
        throw StructureError("point '" + label + "' appears in two classes");
      }
      labels.push_back(label);
      class_of.push_back(static_cast<long long>(c) + 1);
    }
  }
  const std::size_t n = labels.size();
  std::vector<Rat> flat(n * n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rat d(1, std::min(class_of[i], class_of[j]));
      flat[i * n + j] = d;
      flat[j * n + i] = d;
    }
  }
  return FiniteSpace::from_flat(std::move(labels), std::move(flat));
}

FiniteSpace compose_preserving(const FiniteSpace& space, const PreservingFunction& f) {
  if (!space.ultrametric()) {
    throw PreconditionError("compose_preserving requires an ultrametric space");
  }
  const auto& values = space.values();
  std::vector<Rat> mapped;
  mapped.reserve(values.size());
  for (const auto& v : values) mapped.push_back(f.eval(v));
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].is_zero() != mapped[i].is_zero()) {
      throw PreconditionError("'" + f.name() + "' must vanish exactly at 0, but maps " +
                              values[i].str() + " to " + mapped[i].str());
    }
    if (i > 0 && mapped[i] < mapped[i - 1]) {
      throw PreconditionError("'" + f.name() + "' is not nondecreasing on the distance set: f(" +
                              values[i - 1].str() + ") = " + mapped[i - 1].str() + " > f(" +
                              values[i].str() + ") = " + mapped[i].str());
    }
  }
  const std::size_t n = space.size();
  std::vector<Rat> flat(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = mapped[space.rank_at(i, j)];
  }
  return FiniteSpace::from_flat(space.labels(), std::move(flat));
}

namespace {

// Raw ultrametric-axiom scan of an image matrix; the image may be
// unconstructible as a FiniteSpace (nonzero diagonal), so this works on bare
// values.
bool image_violates(const std::vector<Rat>& m, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (!m[i * n + i].is_zero()) return true;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (m[i * n + j].is_zero()) return true;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (m[i * n + j] > std::max(m[i * n + k], m[k * n + j])) return true;
      }
    }
  }
  return false;
}

}  // namespace

std::optional<FiniteSpace> preserving_counterexample(const PreservingFunction& f,
                                                     const std::vector<Rat>& pool) {
  std::vector<Rat> values = pool;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (!std::binary_search(values.begin(), values.end(), Rat(0)) || values.size() < 3) {
    throw PreconditionError("pool must contain 0 and at least two positive values");
  }
  std::vector<Rat> positives(values.begin() + 1, values.end());

  auto try_subset = [&](const std::vector<Rat>& subset) -> std::optional<FiniteSpace> {
    FiniteSpace witness = dlps_space(subset);
    const std::size_t n = witness.size();
    std::vector<Rat> image(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) image[i * n + j] = f.eval(witness.at(i, j));
    }
    if (image_violates(image, n)) return witness;
    return std::nullopt;
  };

  if (auto w = try_subset({Rat(0)})) return w;
  for (std::size_t i = 0; i < positives.size(); ++i) {
    if (auto w = try_subset({Rat(0), positives[i]})) return w;
  }
  for (std::size_t i = 0; i < positives.size(); ++i) {
    for (std::size_t j = i + 1; j < positives.size(); ++j) {
      if (auto w = try_subset({Rat(0), positives[i], positives[j]})) return w;
    }
  }
  return std::nullopt;
}

BallRelabeling make_relabeling(const FiniteSpace& space, const Rat& r1,
                               const std::vector<Rat>& g_values) {
  if (!r1.is_positive()) throw PreconditionError("modification radius must be positive");
  const BallPartition partition = ball_partition(space, r1, space.labels());
  if (g_values.size() != partition.classes.size()) {
    throw StructureError("g assigns " + std::to_string(g_values.size()) + " values to " +
                         std::to_string(partition.classes.size()) + " partition classes");
  }
  const Rat two_r1 = r1 + r1;
  BallRelabeling g{r1, {}};
  std::vector<Rat> sorted = g_values;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw StructureError("g values must be injective");
  }
  for (std::size_t c = 0; c < g_values.size(); ++c) {
    if (!(g_values[c] > r1 && g_values[c] < two_r1)) {
      throw StructureError("g value " + g_values[c].str() + " lies outside (" + r1.str() + ", " +
                           two_r1.str() + ")");
    }
    g.assignments.emplace_back(partition.classes[c].center, g_values[c]);
  }
  return g;
}

FiniteSpace modify_ultrametric(const FiniteSpace& space, const Rat& r1,
                               const std::vector<Rat>& g_values) {
  const BallRelabeling g = make_relabeling(space, r1, g_values);
  const BallPartition partition = ball_partition(space, r1, space.labels());

  const std::size_t n = space.size();
  std::vector<std::size_t> class_of(n);
  for (std::size_t c = 0; c < partition.classes.size(); ++c) {
    for (const auto& member : partition.classes[c].members) {
      class_of[*space.index_of(member)] = c;
    }
  }
  std::vector<Rat> flat(n * n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rat d = class_of[i] == class_of[j]
                        ? space.at(i, j)
                        : std::max(g.assignments[class_of[i]].second,
                                   g.assignments[class_of[j]].second);
      flat[i * n + j] = d;
      flat[j * n + i] = d;
    }
  }
  return FiniteSpace::from_flat(space.labels(), std::move(flat));
}

bool largest_element_check(const DistanceSet& ds, const Rat& dia) { return ds.contains(dia); }

bool largest_element_check(const SetDescription& desc, const Rat& dia) {
  return desc.member(dia);
}

}  // namespace umk
