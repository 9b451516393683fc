#ifndef LEXSPEC_TESTS_FIXTURES_HPP
#define LEXSPEC_TESTS_FIXTURES_HPP

#include <vector>

#include "lexspec/stepfn.hpp"

namespace lexspec::fixtures {

inline LexElem el(std::int64_t h, std::vector<long> g) {
  std::vector<Rat> e;
  e.reserve(g.size());
  for (long x : g) e.emplace_back(x);
  return LexElem(h, GVec(std::move(e)));
}

inline LexElem el(std::int64_t h, long g) { return el(h, std::vector<long>{g}); }

/** Worked example E1: k=1, m=1, one axis {0,2};
    F = 0 on (-inf,0], (0,1) on (0,2], unit on (2,inf). */
inline StepFn e1() {
  MvContext ctx{1, 1};
  Grid grid({{Rat(0), Rat(2)}});
  return StepFn(grid, ctx, {el(0, 0), el(0, 1), el(1, 0)});
}

/** One-dimensional factor x of the meet-joint counterexample:
    masses x({2}) = (0,3), x({3}) = (1,-3). */
inline StepFn fx_counterexample() {
  MvContext ctx{1, 1};
  Grid grid({{Rat(2), Rat(3)}});
  return StepFn(grid, ctx, {el(0, 0), el(0, 3), el(1, 0)});
}

/** One-dimensional factor y: masses y({1}) = (0,4), y({5}) = (1,-4). */
inline StepFn fy_counterexample() {
  MvContext ctx{1, 1};
  Grid grid({{Rat(1), Rat(5)}});
  return StepFn(grid, ctx, {el(0, 0), el(0, 4), el(1, 0)});
}

/** Worked example E2: the two-dimensional meet joint of the
    counterexample factors, F(s,t) = Fx(s) /\ Fy(t) on {2,3} x {1,5}. */
inline StepFn e2() {
  MvContext ctx{1, 1};
  Grid grid({{Rat(2), Rat(3)}, {Rat(1), Rat(5)}});
  std::vector<LexElem> cells = {
      el(0, 0), el(0, 0), el(0, 0), // s <= 2
      el(0, 0), el(0, 3), el(0, 3), // s in (2,3]
      el(0, 0), el(0, 4), el(1, 0), // s > 3
  };
  return StepFn(grid, ctx, std::move(cells));
}

/** Worked example E4: k=2 staircase on one axis {0,1,3}. */
inline StepFn e4() {
  MvContext ctx{2, 1};
  Grid grid({{Rat(0), Rat(1), Rat(3)}});
  return StepFn(grid, ctx, {el(0, 0), el(0, 1), el(1, 1), el(2, 0)});
}

} // namespace lexspec::fixtures

#endif
