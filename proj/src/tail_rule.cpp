#include "tail_rule.hpp"

#include "errors.hpp"

namespace umk {

namespace {

// Largest n with 1/n > s, for 0 < s < 1. Values of 1/n decrease with n, so
// this indexes the least member of {1/n} above s.
long long last_index_above(const Rat& s) { return (s.den() - 1) / s.num(); }

// Smallest n with 1/n < s, for s > 0.
long long first_index_below(const Rat& s) { return s.den() / s.num() + 1; }

}  // namespace

TailRule TailRule::reciprocal() {
  return TailRule(Kind::Reciprocal, Rat(0), Rat(0), Rat(0), 1);
}

TailRule TailRule::shifted(const Rat& offset) {
  if (offset.is_negative()) throw StructureError("shifted rule needs a nonnegative offset");
  return TailRule(Kind::Shifted, offset, Rat(0), offset, 1);
}

TailRule TailRule::geometric(const Rat& scale, const Rat& ratio) {
  if (!scale.is_positive()) throw StructureError("geometric rule needs a positive scale");
  if (!ratio.is_positive() || ratio >= Rat(1)) {
    throw StructureError("geometric rule needs a ratio strictly between 0 and 1");
  }
  return TailRule(Kind::Geometric, scale, ratio, Rat(0), 1);
}

TailRule TailRule::approach(const Rat& limit) {
  if (!limit.is_positive()) throw StructureError("approach rule needs a positive limit");
  // First index with limit - 1/n > 0.
  const long long first = limit.den() / limit.num() + 1;
  return TailRule(Kind::Approach, limit, Rat(0), limit, first);
}

Rat TailRule::term(long long n) const {
  if (n < first_) throw PreconditionError("sequence index below the first index");
  switch (kind_) {
    case Kind::Reciprocal:
      return Rat(1, n);
    case Kind::Shifted:
      return a_ + Rat(1, n);
    case Kind::Geometric: {
      Rat t = a_;
      for (long long i = 0; i < n; ++i) t *= b_;
      return t;
    }
    case Kind::Approach:
      return a_ - Rat(1, n);
  }
  throw Error("unreachable");
}

bool TailRule::contains(const Rat& x) const {
  switch (kind_) {
    case Kind::Reciprocal:
      return x.num() == 1;
    case Kind::Shifted: {
      const Rat d = x - a_;
      return d.num() == 1;
    }
    case Kind::Geometric: {
      if (!x.is_positive()) return false;
      Rat t = a_ * b_;
      while (t > x) t *= b_;
      return t == x;
    }
    case Kind::Approach: {
      if (!x.is_positive() || x >= a_) return false;
      const Rat d = a_ - x;
      return d.num() == 1 && d.den() >= first_;
    }
  }
  return false;
}

Bound TailRule::least_above(const Rat& s) const {
  switch (kind_) {
    case Kind::Reciprocal: {
      if (s >= Rat(1)) return Bound::none();
      if (!s.is_positive()) return Bound::accumulates(Rat(0));
      return Bound::attained(Rat(1, last_index_above(s)));
    }
    case Kind::Shifted: {
      if (s >= a_ + Rat(1)) return Bound::none();
      const Rat rel = s - a_;
      if (!rel.is_positive()) return Bound::accumulates(a_);
      return Bound::attained(a_ + Rat(1, last_index_above(rel)));
    }
    case Kind::Geometric: {
      Rat cur = a_ * b_;
      if (s >= cur) return Bound::none();
      if (!s.is_positive()) return Bound::accumulates(Rat(0));
      for (Rat next = cur * b_; next > s; next *= b_) cur = next;
      return Bound::attained(cur);
    }
    case Kind::Approach: {
      if (s >= a_) return Bound::none();
      const Rat first = first_term();
      if (s < first) return Bound::attained(first);
      // Smallest n with a_ - 1/n > s.
      long long n = first_index_below(a_ - s);
      if (n < first_) n = first_;
      return Bound::attained(term(n));
    }
  }
  return Bound::none();
}

Bound TailRule::greatest_below(const Rat& s) const {
  switch (kind_) {
    case Kind::Reciprocal: {
      if (s > Rat(1)) return Bound::attained(Rat(1));
      if (!s.is_positive()) return Bound::none();
      return Bound::attained(Rat(1, first_index_below(s)));
    }
    case Kind::Shifted: {
      const Rat rel = s - a_;
      if (rel > Rat(1)) return Bound::attained(a_ + Rat(1));
      if (!rel.is_positive()) return Bound::none();
      return Bound::attained(a_ + Rat(1, first_index_below(rel)));
    }
    case Kind::Geometric: {
      if (!s.is_positive()) return Bound::none();
      Rat t = a_ * b_;
      while (t >= s) t *= b_;
      return Bound::attained(t);
    }
    case Kind::Approach: {
      if (s >= a_) return Bound::accumulates(a_);
      if (s <= first_term()) return Bound::none();
      // Largest n with a_ - 1/n < s.
      const Rat gap = a_ - s;
      long long n = (gap.den() - 1) / gap.num();
      return Bound::attained(term(n));
    }
  }
  return Bound::none();
}

std::string TailRule::describe() const {
  switch (kind_) {
    case Kind::Reciprocal:
      return "1/n";
    case Kind::Shifted:
      return a_.str() + " + 1/n";
    case Kind::Geometric:
      return a_.str() + "*(" + b_.str() + ")^n";
    case Kind::Approach:
      return a_.str() + " - 1/n";
  }
  return "?";
}

}  // namespace umk
