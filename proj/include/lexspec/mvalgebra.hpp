#ifndef LEXSPEC_MVALGEBRA_HPP
#define LEXSPEC_MVALGEBRA_HPP

#include <cstdint>
#include <string>

#include "lexspec/lexgroup.hpp"

namespace lexspec {

class MvElem;

/** The ambient algebra Gamma(Z lex Q^m, (k,0)), viewed both as a k-perfect
    MV-algebra and as a k-perfect effect algebra. Block j collects the
    elements with first coordinate j; block 0 is the radical when k = 1 and
    block k its complement. */
struct MvContext {
  int k = 1;
  int m = 1;

  LexElem unit() const { return LexElem(k, GVec::zeros(static_cast<std::size_t>(m))); }
  LexElem zero() const { return LexElem::zero(static_cast<std::size_t>(m)); }

  bool operator==(const MvContext& o) const { return k == o.k && m == o.m; }

  /** Interval membership 0 <= v <= (k,0), decided exactly. */
  bool contains(const LexElem& v) const;

  /** Checked admission into the interval; reports the violated bound. */
  MvElem validate(const LexElem& v) const;
};

/** Element of the interval [0, (k,0)], validated on construction. */
class MvElem {
public:
  const LexElem& value() const { return v_; }
  const MvContext& ctx() const { return ctx_; }
  int block() const { return static_cast<int>(v_.h); }

  bool operator==(const MvElem& o) const { return v_ == o.v_ && ctx_ == o.ctx_; }
  std::string str() const { return v_.str(); }

private:
  friend struct MvContext;
  MvElem(LexElem v, MvContext ctx) : v_(std::move(v)), ctx_(ctx) {}

  LexElem v_;
  MvContext ctx_;
};

/** Block index in {0,...,k}: the first lexicographic coordinate. */
inline int block_of(const MvElem& a) { return a.block(); }

/** Effect-algebra partial sum; defined iff a + b <= (k,0). */
MvElem partial_add(const MvElem& a, const MvElem& b);

/** Effect-algebra partial difference; defined iff b <= a. */
MvElem partial_sub(const MvElem& a, const MvElem& b);

MvElem meet(const MvElem& a, const MvElem& b);
MvElem join(const MvElem& a, const MvElem& b);

} // namespace lexspec

#endif
