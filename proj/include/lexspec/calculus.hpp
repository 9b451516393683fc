#ifndef LEXSPEC_CALCULUS_HPP
#define LEXSPEC_CALCULUS_HPP

#include <vector>

#include "lexspec/extend.hpp"
#include "lexspec/observable.hpp"
#include "lexspec/spectral.hpp"

namespace lexspec {

struct JointResult {
  StepFn joint;
  ValidationReport report;
  Observable observable;
};

/** The n-dimensional meet joint of one-dimensional spectral resolutions on
    a perfect algebra: F(s_1,...,s_n) = meet_i F_i(s_i) on the product
    grid, validated and extended. */
JointResult meet_joint(const std::vector<StepFn>& factors);

/** Pushforward of an observable through the i-th projection. */
Observable marginal(const Observable& x, std::size_t axis);

/** One-dimensional sup-inf convolution of spectral resolutions:
    F_{x+y}(t) = max over the finite candidate set of F_x(r) /\ F_y(t-r).
    Both inputs are step functions, so the supremum over rational r is
    attained on the pieces cut by the breakpoints of F_x and the
    t-reflected breakpoints of F_y. */
StepFn convolve_sum(const StepFn& fx, const StepFn& fy);

struct SumResult {
  Observable observable;
  /** False when the inputs live on a k > 1 algebra: the construction is
      the same, but the supporting theory is stated for perfect algebras,
      so such results are an experimental extension. */
  bool perfect = true;
};

/** Sum of n-dimensional observables through their marginals: convolve the
    marginals axis by axis, then take the meet joint of the summed
    one-dimensional resolutions. */
SumResult sum_observables(const Observable& z1, const Observable& z2);

/** Neutral element of the sum semigroup: the unit mass at the origin. */
Observable neutral_observable(MvContext ctx, std::size_t n);

} // namespace lexspec

#endif
