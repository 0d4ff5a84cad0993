#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "rational.hpp"

namespace umk {

/// Where the elements of a symbolic set sit relative to a query point.
/// `Attained` carries an actual member; `Accumulates` carries a limit the
/// members approach without reaching, so no extremal member exists.
struct Bound {
  enum class Kind { None, Attained, Accumulates } kind = Kind::None;
  Rat value;

  static Bound none() { return {}; }
  static Bound attained(Rat v) { return {Kind::Attained, v}; }
  static Bound accumulates(Rat v) { return {Kind::Accumulates, v}; }
};

/// A strictly monotone rational sequence from a fixed catalog, with its limit
/// recorded symbolically. The decreasing rules model tails of distance sets;
/// `approach` increases toward an unattained supremum and exists for
/// largest-element analysis.
///
///   reciprocal        1/n            n >= 1, decreasing to 0
///   shifted(c)        c + 1/n        n >= 1, decreasing to c
///   geometric(q, r)   q * r^n        n >= 1, 0 < r < 1, decreasing to 0
///   approach(c)       c - 1/n        n > 1/c, increasing to c
class TailRule {
 public:
  enum class Kind { Reciprocal, Shifted, Geometric, Approach };

  static TailRule reciprocal();
  static TailRule shifted(const Rat& offset);
  static TailRule geometric(const Rat& scale, const Rat& ratio);
  static TailRule approach(const Rat& limit);

  Kind kind() const { return kind_; }
  bool decreasing() const { return kind_ != Kind::Approach; }
  /// Infimum for decreasing rules, supremum for increasing ones. Never a
  /// member of the sequence.
  const Rat& limit() const { return limit_; }
  long long first_index() const { return first_; }
  Rat term(long long n) const;
  Rat first_term() const { return term(first_); }

  bool contains(const Rat& x) const;
  /// Least member strictly above s, as a Bound over this rule's members.
  Bound least_above(const Rat& s) const;
  /// Greatest member strictly below s.
  Bound greatest_below(const Rat& s) const;

  std::string describe() const;

 private:
  TailRule(Kind kind, Rat a, Rat b, Rat limit, long long first)
      : kind_(kind), a_(std::move(a)), b_(std::move(b)), limit_(std::move(limit)),
        first_(first) {}

  Kind kind_;
  Rat a_;      // offset / scale / limit parameter
  Rat b_;      // geometric ratio
  Rat limit_;
  long long first_;
};

}  // namespace umk
