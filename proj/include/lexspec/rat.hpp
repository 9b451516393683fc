#ifndef LEXSPEC_RAT_HPP
#define LEXSPEC_RAT_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace lexspec {

/** Exact rational scalar, always in lowest terms with positive denominator.
    Arithmetic never rounds; numerators and denominators are arbitrary
    precision. */
class Rat {
public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}
  Rat(long n, long d);

  /** Accepts "p" or "p/q" with optional leading minus; nothing else. */
  static Rat parse(std::string_view text);

  /** Renders as "p" when the denominator is 1, otherwise "p/q". */
  std::string str() const;

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.v_, b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  int sign() const { return sgn(v_); }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
  explicit Rat(mpq_class v) : v_(std::move(v)) {}

  mpq_class v_;
};

} // namespace lexspec

#endif
