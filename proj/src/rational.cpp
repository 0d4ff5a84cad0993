#include "rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>

#include "errors.hpp"

namespace umk {

namespace {

using i128 = __int128;

constexpr long long kMax = std::numeric_limits<long long>::max();

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long narrow(i128 v, const char* what) {
  // INT64_MIN is excluded so negation is always safe.
  if (v > kMax || v < -static_cast<i128>(kMax)) {
    throw OverflowError(std::string("rational ") + what + " out of 64-bit range");
  }
  return static_cast<long long>(v);
}

}  // namespace

Rat::Rat(long long num, long long den) {
  if (den == 0) throw StructureError("rational with zero denominator");
  i128 n = num;
  i128 d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) {
    num_ = 0;
    den_ = 1;
    return;
  }
  i128 g = gcd128(n, d);
  num_ = narrow(n / g, "numerator");
  den_ = narrow(d / g, "denominator");
}

namespace {

Rat make_reduced(i128 n, i128 d, const char* what) {
  if (d == 0) throw StructureError("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return Rat();
  i128 g = gcd128(n, d);
  n /= g;
  d /= g;
  long long nn = narrow(n, what);
  long long dd = narrow(d, what);
  return Rat(nn, dd);
}

long long parse_int(std::string_view text, std::string_view whole) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec == std::errc::result_out_of_range) {
    throw OverflowError("rational literal '" + std::string(whole) + "' out of range");
  }
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("malformed rational '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational literal");
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rat(parse_int(text, text), 1);
  }
  if (slash == 0 || slash + 1 == text.size()) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  long long num = parse_int(text.substr(0, slash), text);
  long long den = parse_int(text.substr(slash + 1), text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rat(num, den);
}

std::string Rat::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rat Rat::operator-() const {
  Rat r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rat& Rat::operator+=(const Rat& o) {
  *this = make_reduced(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                       static_cast<i128>(den_) * o.den_, "sum");
  return *this;
}

Rat& Rat::operator-=(const Rat& o) {
  *this = make_reduced(static_cast<i128>(num_) * o.den_ - static_cast<i128>(o.num_) * den_,
                       static_cast<i128>(den_) * o.den_, "difference");
  return *this;
}

Rat& Rat::operator*=(const Rat& o) {
  *this = make_reduced(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_,
                       "product");
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.num_ == 0) throw StructureError("rational division by zero");
  *this = make_reduced(static_cast<i128>(num_) * o.den_, static_cast<i128>(den_) * o.num_,
                       "quotient");
  return *this;
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  i128 lhs = static_cast<i128>(a.num_) * b.den_;
  i128 rhs = static_cast<i128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace umk
