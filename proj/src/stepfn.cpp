#include "lexspec/stepfn.hpp"

#include <algorithm>

#include "lexspec/errors.hpp"

namespace lexspec {

StepFn::StepFn(Grid grid, MvContext ctx, std::vector<LexElem> cells)
    : grid_(std::move(grid)), ctx_(ctx), cells_(std::move(cells)) {
  if (cells_.size() != grid_.total_cells()) {
    throw DimensionError("cell array has " + std::to_string(cells_.size()) + " entries, grid has " +
                         std::to_string(grid_.total_cells()) + " cells");
  }
  for (const auto& c : cells_) {
    if (c.dim() != static_cast<std::size_t>(ctx_.m)) {
      throw DimensionError("cell value " + c.str() + " does not match context m = " +
                           std::to_string(ctx_.m));
    }
  }
}

StepFn StepFn::constant(Grid grid, MvContext ctx, const LexElem& value) {
  std::vector<LexElem> cells(grid.total_cells(), value);
  return StepFn(std::move(grid), ctx, std::move(cells));
}

LexElem StepFn::at(std::span<const DecReal> point) const {
  if (point.size() != dim()) {
    throw DimensionError("evaluation point has " + std::to_string(point.size()) +
                         " coordinates, function has " + std::to_string(dim()));
  }
  std::size_t f = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    f = f * grid_.cell_count(i) + grid_.cell_index(i, point[i]);
  }
  return cells_[f];
}

MvElem StepFn::eval_at(std::span<const DecReal> point) const { return ctx_.validate(at(point)); }

bool StepFn::interval_valued() const {
  return std::all_of(cells_.begin(), cells_.end(),
                     [&](const LexElem& c) { return ctx_.contains(c); });
}

StepFn StepFn::delta(const std::vector<DeltaOp>& ops) const {
  std::vector<bool> is_op(dim(), false);
  for (const auto& op : ops) {
    if (op.axis >= dim()) throw DimensionError("delta axis out of range");
    if (is_op[op.axis]) throw PreconditionError("at most one delta per axis");
    is_op[op.axis] = true;
    if (op.hi < op.lo) {
      throw PreconditionError("delta endpoints out of order: " + op.lo.str() + " > " + op.hi.str());
    }
  }

  std::vector<LexElem> out(cells_.size(), LexElem::zero(static_cast<std::size_t>(ctx_.m)));
  std::vector<std::size_t> idx(dim(), 0);
  std::vector<DecReal> point(dim());
  // Enumerate assignments of the free axes; the op axes contribute the
  // 2^k alternating corner sum, broadcast across their cell range.
  do {
    bool base = true;
    for (const auto& op : ops) base = base && idx[op.axis] == 0;
    if (!base) continue;

    LexElem v = LexElem::zero(static_cast<std::size_t>(ctx_.m));
    for (std::size_t mask = 0; mask < (std::size_t{1} << ops.size()); ++mask) {
      for (std::size_t i = 0; i < dim(); ++i) point[i] = grid_.cell_rep(i, idx[i]);
      std::size_t lo_count = 0;
      for (std::size_t j = 0; j < ops.size(); ++j) {
        if (mask & (std::size_t{1} << j)) {
          point[ops[j].axis] = ops[j].hi;
        } else {
          point[ops[j].axis] = ops[j].lo;
          ++lo_count;
        }
      }
      LexElem term = at(point);
      v = (lo_count % 2 == 0) ? v + term : v - term;
    }

    // Broadcast along the op axes.
    std::vector<std::size_t> bidx = idx;
    while (true) {
      out[grid_.flat(bidx)] = v;
      std::size_t j = 0;
      for (; j < ops.size(); ++j) {
        if (++bidx[ops[j].axis] < grid_.cell_count(ops[j].axis)) break;
        bidx[ops[j].axis] = 0;
      }
      if (j == ops.size()) break;
    }
  } while (grid_.next_cell(idx));

  return StepFn(grid_, ctx_, std::move(out));
}

StepFn StepFn::drop_axes(const std::vector<std::size_t>& axes) const {
  std::vector<bool> drop(dim(), false);
  for (std::size_t a : axes) {
    if (a >= dim()) throw DimensionError("drop axis out of range");
    drop[a] = true;
  }
  std::vector<std::vector<Rat>> kept;
  std::vector<std::size_t> kept_axes;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!drop[i]) {
      kept.push_back(grid_.axis(i));
      kept_axes.push_back(i);
    }
  }
  Grid g(std::move(kept));
  std::vector<LexElem> out;
  out.reserve(g.total_cells());

  std::vector<std::size_t> idx(dim(), 0);
  do {
    bool base = true;
    for (std::size_t i = 0; i < dim() && base; ++i) base = !drop[i] || idx[i] == 0;
    if (!base) {
      // Constancy along dropped axes is required, not assumed.
      std::vector<std::size_t> ref = idx;
      for (std::size_t i = 0; i < dim(); ++i)
        if (drop[i]) ref[i] = 0;
      if (!(cells_[grid_.flat(idx)] == cells_[grid_.flat(ref)])) {
        throw PreconditionError("cannot drop an axis the function varies along");
      }
    }
  } while (grid_.next_cell(idx));

  std::vector<std::size_t> kidx(g.dim(), 0);
  std::vector<std::size_t> full(dim(), 0);
  if (g.dim() == 0) {
    out.push_back(cells_[0]);
  } else {
    do {
      for (std::size_t j = 0; j < kept_axes.size(); ++j) full[kept_axes[j]] = kidx[j];
      out.push_back(cells_[grid_.flat(full)]);
    } while (g.next_cell(kidx));
  }
  return StepFn(std::move(g), ctx_, std::move(out));
}

StepFn StepFn::axis_piece(std::size_t axis, const DecReal& lo, const DecReal& hi) const {
  if (axis >= dim()) throw DimensionError("piece axis out of range");
  if (hi < lo) throw PreconditionError("piece endpoints out of order");
  std::vector<LexElem> out;
  out.reserve(cells_.size());
  std::vector<std::size_t> idx(dim(), 0);
  std::vector<DecReal> point(dim());
  do {
    for (std::size_t i = 0; i < dim(); ++i) point[i] = grid_.cell_rep(i, idx[i]);
    DecReal t = point[axis];
    point[axis] = std::min(hi, t);
    LexElem v = at(point);
    point[axis] = std::min(lo, t);
    out.push_back(v - at(point));
  } while (grid_.next_cell(idx));
  return StepFn(grid_, ctx_, std::move(out));
}

StepFn StepFn::on_grid(const Grid& finer) const {
  if (!grid_.coarsens(finer)) {
    throw PreconditionError("target grid does not refine the function's grid");
  }
  std::vector<LexElem> out;
  out.reserve(finer.total_cells());
  std::vector<std::size_t> idx(finer.dim(), 0);
  std::vector<DecReal> point(finer.dim());
  do {
    for (std::size_t i = 0; i < finer.dim(); ++i) point[i] = finer.cell_rep(i, idx[i]);
    out.push_back(at(point));
  } while (finer.next_cell(idx));
  return StepFn(finer, ctx_, std::move(out));
}

StepFn cellwise_add(const StepFn& a, const StepFn& b) {
  if (!(a.grid_ == b.grid_) || !(a.ctx_ == b.ctx_)) {
    throw DimensionError("cellwise arithmetic needs matching grid and context");
  }
  std::vector<LexElem> out;
  out.reserve(a.cells_.size());
  for (std::size_t i = 0; i < a.cells_.size(); ++i) out.push_back(a.cells_[i] + b.cells_[i]);
  return StepFn(a.grid_, a.ctx_, std::move(out));
}

StepFn cellwise_sub(const StepFn& a, const StepFn& b) {
  if (!(a.grid_ == b.grid_) || !(a.ctx_ == b.ctx_)) {
    throw DimensionError("cellwise arithmetic needs matching grid and context");
  }
  std::vector<LexElem> out;
  out.reserve(a.cells_.size());
  for (std::size_t i = 0; i < a.cells_.size(); ++i) out.push_back(a.cells_[i] - b.cells_[i]);
  return StepFn(a.grid_, a.ctx_, std::move(out));
}

} // namespace lexspec
