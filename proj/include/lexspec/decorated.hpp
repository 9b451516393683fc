#ifndef LEXSPEC_DECORATED_HPP
#define LEXSPEC_DECORATED_HPP

#include <compare>
#include <string>
#include <string_view>

#include "lexspec/rat.hpp"

namespace lexspec {

/** Decoration symbols accepted by normalization. A minus decoration r^- is
    the same evaluation point as plain r (left limits coincide with values
    for left-continuous step functions), so it normalizes away. */
enum class Decor { minus, plain, plus };

/** Decorated extended real: a finite rational r or r^+, or one of the two
    infinities. -inf^- and inf^+ do not exist; -inf^+ and inf^- collapse to
    the plain infinities. Total order: -inf < r < r^+ < s < inf whenever
    r < s in Q. */
class DecReal {
public:
  enum class Kind { neg_inf, finite, pos_inf };

  DecReal() : kind_(Kind::neg_inf), plus_(false) {}

  static DecReal neg_inf() { return DecReal(Kind::neg_inf, Rat(0), false); }
  static DecReal pos_inf() { return DecReal(Kind::pos_inf, Rat(0), false); }
  /** Plain r. */
  static DecReal at(Rat r) { return DecReal(Kind::finite, std::move(r), false); }
  /** r^+, the limit from above. */
  static DecReal after(Rat r) { return DecReal(Kind::finite, std::move(r), true); }

  /** Admits any written symbol and returns its normal form; rejects the
      two undefined ones. */
  static DecReal normalize(Kind kind, const Rat& value, Decor decor);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  bool is_neg_inf() const { return kind_ == Kind::neg_inf; }
  bool is_pos_inf() const { return kind_ == Kind::pos_inf; }
  bool is_plus() const { return plus_; }
  const Rat& value() const { return value_; }

  friend bool operator==(const DecReal& a, const DecReal& b) {
    if (a.kind_ != b.kind_) return false;
    if (a.kind_ != Kind::finite) return true;
    return a.plus_ == b.plus_ && a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const DecReal& a, const DecReal& b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
    if (a.kind_ != Kind::finite) return std::strong_ordering::equal;
    if (auto c = a.value_ <=> b.value_; c != 0) return c;
    return static_cast<int>(a.plus_) <=> static_cast<int>(b.plus_);
  }

  /** "-inf", "inf", "5", "5+", "-3/2+", ... */
  std::string str() const;
  static DecReal parse(std::string_view text);

private:
  DecReal(Kind kind, Rat value, bool plus) : kind_(kind), value_(std::move(value)), plus_(plus) {}

  Kind kind_;
  Rat value_;
  bool plus_;
};

} // namespace lexspec

#endif
