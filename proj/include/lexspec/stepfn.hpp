#ifndef LEXSPEC_STEPFN_HPP
#define LEXSPEC_STEPFN_HPP

#include <span>
#include <vector>

#include "lexspec/grid.hpp"
#include "lexspec/mvalgebra.hpp"

namespace lexspec {

/** n-dimensional step function over a finite rational grid with values in
    Z lex Q^m. The function is constant on products of left-open
    right-closed cells, so it is left-continuous in each variable by
    construction, and all one-sided limits are cell lookups. Cells are
    stored row-major, last axis fastest, lowest cell first.

    Cells are plain group elements; interval membership is a property that
    validation checks, not a structural invariant, so that difference
    calculus stays total. */
class StepFn {
public:
  StepFn(Grid grid, MvContext ctx, std::vector<LexElem> cells);

  /** The constant function with the given value. */
  static StepFn constant(Grid grid, MvContext ctx, const LexElem& value);

  const Grid& grid() const { return grid_; }
  const MvContext& ctx() const { return ctx_; }
  std::size_t dim() const { return grid_.dim(); }
  const std::vector<LexElem>& cells() const { return cells_; }
  const LexElem& cell(std::size_t flat) const { return cells_[flat]; }
  const LexElem& cell(const std::vector<std::size_t>& idx) const { return cells_[grid_.flat(idx)]; }

  /** Raw decorated evaluation in the group. */
  LexElem at(std::span<const DecReal> point) const;
  /** Decorated evaluation admitted into the interval algebra. */
  MvElem eval_at(std::span<const DecReal> point) const;

  /** Value of the all-axes supremum cell (the value at +inf,...,+inf). */
  const LexElem& top() const { return cells_.back(); }

  bool interval_valued() const;

  struct DeltaOp {
    std::size_t axis;
    DecReal lo, hi;
  };

  /** Iterated difference operator with decorated endpoints; at most one op
      per axis, lo <= hi. The applied axes become fixed: the result is
      constant along them and independent of the application order. */
  StepFn delta(const std::vector<DeltaOp>& ops) const;

  /** Project out axes along which the function is constant (checked). */
  StepFn drop_axes(const std::vector<std::size_t>& axes) const;

  /** The min-capped single-axis slab
        t -> F(..., min(hi, t_i), ...) - F(..., min(lo, t_i), ...),
      the building block of every decomposition chain. */
  StepFn axis_piece(std::size_t axis, const DecReal& lo, const DecReal& hi) const;

  /** Re-represent on a finer grid (every breakpoint kept). */
  StepFn on_grid(const Grid& finer) const;

  friend StepFn cellwise_add(const StepFn& a, const StepFn& b);
  friend StepFn cellwise_sub(const StepFn& a, const StepFn& b);

  bool operator==(const StepFn& o) const {
    return grid_ == o.grid_ && ctx_ == o.ctx_ && cells_ == o.cells_;
  }

private:
  Grid grid_;
  MvContext ctx_;
  std::vector<LexElem> cells_;
};

} // namespace lexspec

#endif
