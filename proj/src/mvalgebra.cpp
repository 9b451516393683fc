#include "lexspec/mvalgebra.hpp"

#include "lexspec/errors.hpp"

namespace lexspec {

bool MvContext::contains(const LexElem& v) const {
  if (v.dim() != static_cast<std::size_t>(m)) return false;
  return leq(zero(), v) && leq(v, unit());
}

MvElem MvContext::validate(const LexElem& v) const {
  if (v.dim() != static_cast<std::size_t>(m)) {
    throw DimensionError("element has dimension " + std::to_string(v.dim()) +
                         ", context expects m = " + std::to_string(m));
  }
  if (!leq(zero(), v)) {
    throw OutOfIntervalError("element " + v.str() + " is not >= 0" +
                             (v.h == 0 ? " (block-0 elements need g >= 0)" : ""));
  }
  if (!leq(v, unit())) {
    throw OutOfIntervalError("element " + v.str() + " is not <= " + unit().str() +
                             (v.h == k ? " (top block needs g <= 0)" : ""));
  }
  return MvElem(v, *this);
}

namespace {
void check_ctx(const MvElem& a, const MvElem& b) {
  if (!(a.ctx() == b.ctx())) throw DimensionError("operands from different algebra contexts");
}
} // namespace

MvElem partial_add(const MvElem& a, const MvElem& b) {
  check_ctx(a, b);
  LexElem s = a.value() + b.value();
  if (!leq(s, a.ctx().unit())) {
    throw UndefinedOperationError("partial sum " + a.str() + " + " + b.str() +
                                  " exceeds the unit " + a.ctx().unit().str());
  }
  return a.ctx().validate(s);
}

MvElem partial_sub(const MvElem& a, const MvElem& b) {
  check_ctx(a, b);
  if (!leq(b.value(), a.value())) {
    throw UndefinedOperationError("partial difference " + a.str() + " - " + b.str() +
                                  " is undefined: subtrahend is not below the minuend");
  }
  return a.ctx().validate(a.value() - b.value());
}

MvElem meet(const MvElem& a, const MvElem& b) {
  check_ctx(a, b);
  return a.ctx().validate(inf(a.value(), b.value()));
}

MvElem join(const MvElem& a, const MvElem& b) {
  check_ctx(a, b);
  return a.ctx().validate(sup(a.value(), b.value()));
}

} // namespace lexspec
