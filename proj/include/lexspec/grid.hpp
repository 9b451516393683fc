#ifndef LEXSPEC_GRID_HPP
#define LEXSPEC_GRID_HPP

#include <cstddef>
#include <vector>

#include "lexspec/decorated.hpp"
#include "lexspec/rat.hpp"

namespace lexspec {

/** Finite rational breakpoint grid: one strictly increasing (possibly
    empty) list of breakpoints per axis. Axis i with L breakpoints carries
    L+1 cells; cell c is the slab (b_{c-1}, b_c] with the obvious
    conventions at the ends. */
class Grid {
public:
  Grid() = default;
  explicit Grid(std::vector<std::vector<Rat>> axes);

  std::size_t dim() const { return axes_.size(); }
  const std::vector<Rat>& axis(std::size_t i) const { return axes_[i]; }
  const std::vector<std::vector<Rat>>& axes() const { return axes_; }

  std::size_t cell_count(std::size_t i) const { return axes_[i].size() + 1; }
  std::size_t total_cells() const;

  /** Cell index read by a decorated coordinate: plain r counts breakpoints
      strictly below r, r^+ counts those <= r; the infinities read the end
      cells. */
  std::size_t cell_index(std::size_t i, const DecReal& t) const;

  /** Canonical decorated point whose lookup lands in cell c: the plain
      right endpoint, or +inf for the top cell. */
  DecReal cell_rep(std::size_t i, std::size_t c) const;

  /** The decorated ladder of one axis: b_1, b_1^+, ..., b_L, b_L^+, +inf,
      optionally preceded by -inf. */
  std::vector<DecReal> decorated_points(std::size_t i, bool include_neg_inf) const;

  Grid with_breakpoint(std::size_t i, const Rat& b) const;

  /** One deterministic extra breakpoint per axis (stability re-checks). */
  Grid refined() const;

  /** True when every breakpoint of this grid appears in g. */
  bool coarsens(const Grid& g) const;

  bool operator==(const Grid& o) const { return axes_ == o.axes_; }

  // Row-major flat indexing over cells, last axis fastest.
  std::size_t flat(const std::vector<std::size_t>& idx) const;
  /** Odometer step over cell index vectors; false once wrapped to zero. */
  bool next_cell(std::vector<std::size_t>& idx) const;

private:
  std::vector<std::vector<Rat>> axes_;
};

} // namespace lexspec

#endif
