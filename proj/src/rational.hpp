#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace umk {

/// Exact rational in canonical form: reduced, denominator positive, zero as
/// 0/1. Intermediates use 128-bit integers, so comparisons never overflow;
/// results of +,-,*,/ that do not fit in 64 bits after reduction throw
/// OverflowError.
class Rat {
 public:
  constexpr Rat() = default;
  constexpr Rat(long long value) : num_(value), den_(1) {}  // implicit on purpose
  Rat(long long num, long long den);

  /// Accepts "p", "-p", "p/q" with nonzero q. No whitespace.
  static Rat parse(std::string_view text);

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_positive() const { return num_ > 0; }
  bool is_integer() const { return den_ == 1; }

  /// Canonical rendering: "p" when the denominator is 1, else "p/q".
  std::string str() const;

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);  // throws on division by zero

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) = default;
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

 private:
  long long num_ = 0;
  long long den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace umk
