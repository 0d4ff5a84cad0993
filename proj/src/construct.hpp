#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "distance_set.hpp"
#include "order_type.hpp"
#include "rational.hpp"
#include "space.hpp"

namespace umk {

/// Total function on the nonnegative rationals, pieced together from
/// constants, identity segments and the 1/n staircase. Pieces must start at
/// 0, abut exactly and reach infinity, so evaluation is total and exact.
class PreservingFunction {
 public:
  enum class PieceKind { Constant, Identity, Staircase };
  struct Piece {
    Rat lo;
    bool lo_closed = true;
    std::optional<Rat> hi;  // nullopt = unbounded
    bool hi_closed = false;
    PieceKind kind = PieceKind::Identity;
    Rat value;  // for Constant
  };

  static PreservingFunction identity();
  /// The 1/n staircase everywhere: 0 at 0, 1/n on (1/(n+1), 1/n], 1 from 1 on.
  static PreservingFunction staircase();
  static PreservingFunction from_pieces(std::string name, std::vector<Piece> pieces);

  Rat eval(const Rat& t) const;  // throws PreconditionError for t < 0
  const std::string& name() const { return name_; }

 private:
  PreservingFunction(std::string name, std::vector<Piece> pieces)
      : name_(std::move(name)), pieces_(std::move(pieces)) {}

  std::string name_;
  std::vector<Piece> pieces_;
};

/// Named catalog used by the CLI and the tests; a mix of functions that do
/// and do not satisfy the ultrametric-preserving condition.
const std::map<std::string, PreservingFunction>& preserving_catalog();

/// f(0) = 0, f(t) = 1/n on (1/(n+1), 1/n], f(t) = 1 for t >= 1. Nondecreasing,
/// vanishes only at 0, range inside {0} ∪ {1/n}.
Rat step_function_f(const Rat& t);

/// Points labeled by the elements of a, d(x, y) = max{x, y} for x != y. The
/// distance set of the result is exactly a; requires 0 ∈ a.
FiniteSpace dlps_space(const std::vector<Rat>& a);

/// d(x, y) = max{1/n, 1/m} for distinct x ∈ class n, y ∈ class m (1-based),
/// including n = m. Classes must be nonempty and pairwise disjoint.
FiniteSpace partition_discrete(const std::vector<std::vector<std::string>>& classes);

/// New space with distances f(d(x, y)). Requires f nondecreasing on the
/// distance set and zero exactly at zero there; the error names the
/// offending value or pair.
FiniteSpace compose_preserving(const FiniteSpace& space, const PreservingFunction& f);

/// Searches the DLPS spaces on pool subsets of size <= 3 containing 0 for one
/// whose image under f breaks a metric/ultrametric axiom. Returns the witness
/// space (the preimage), or nothing when f behaves on the pool.
std::optional<FiniteSpace> preserving_counterexample(const PreservingFunction& f,
                                                     const std::vector<Rat>& pool);

/// Injective assignment of values in the open window (r1, 2r1) to the classes
/// of the radius-r1 ball partition, keyed by class representative.
struct BallRelabeling {
  Rat r1;
  std::vector<std::pair<std::string, Rat>> assignments;
};

/// The largest-distance-destroying modification: distances inside a partition
/// ball are kept, distances across balls become max of the two assigned
/// values. g_values are assigned to the partition classes in order; they must
/// be injective and lie strictly inside (r1, 2r1).
FiniteSpace modify_ultrametric(const FiniteSpace& space, const Rat& r1,
                               const std::vector<Rat>& g_values);

/// The relabeling modify_ultrametric derives from positional g values.
BallRelabeling make_relabeling(const FiniteSpace& space, const Rat& r1,
                               const std::vector<Rat>& g_values);

/// Whether dia is attained in the set: finite sets attain their maximum, the
/// symbolic overload reports unattained suprema.
bool largest_element_check(const DistanceSet& ds, const Rat& dia);
bool largest_element_check(const SetDescription& desc, const Rat& dia);

}  // namespace umk
