#include "lexspec/grid.hpp"

#include <algorithm>

#include "lexspec/errors.hpp"

namespace lexspec {

Grid::Grid(std::vector<std::vector<Rat>> axes) : axes_(std::move(axes)) {
  for (const auto& ax : axes_) {
    for (std::size_t j = 1; j < ax.size(); ++j) {
      if (!(ax[j - 1] < ax[j])) {
        throw ParseError("grid axis breakpoints must be strictly increasing");
      }
    }
  }
}

std::size_t Grid::total_cells() const {
  std::size_t n = 1;
  for (std::size_t i = 0; i < dim(); ++i) n *= cell_count(i);
  return n;
}

std::size_t Grid::cell_index(std::size_t i, const DecReal& t) const {
  const auto& ax = axes_[i];
  switch (t.kind()) {
    case DecReal::Kind::neg_inf: return 0;
    case DecReal::Kind::pos_inf: return ax.size();
    case DecReal::Kind::finite: {
      auto it = t.is_plus() ? std::upper_bound(ax.begin(), ax.end(), t.value())
                            : std::lower_bound(ax.begin(), ax.end(), t.value());
      return static_cast<std::size_t>(it - ax.begin());
    }
  }
  return 0;
}

DecReal Grid::cell_rep(std::size_t i, std::size_t c) const {
  const auto& ax = axes_[i];
  return c < ax.size() ? DecReal::at(ax[c]) : DecReal::pos_inf();
}

std::vector<DecReal> Grid::decorated_points(std::size_t i, bool include_neg_inf) const {
  std::vector<DecReal> pts;
  if (include_neg_inf) pts.push_back(DecReal::neg_inf());
  for (const Rat& b : axes_[i]) {
    pts.push_back(DecReal::at(b));
    pts.push_back(DecReal::after(b));
  }
  pts.push_back(DecReal::pos_inf());
  return pts;
}

Grid Grid::with_breakpoint(std::size_t i, const Rat& b) const {
  auto axes = axes_;
  auto& ax = axes[i];
  auto it = std::lower_bound(ax.begin(), ax.end(), b);
  if (it == ax.end() || !(*it == b)) ax.insert(it, b);
  return Grid(std::move(axes));
}

Grid Grid::refined() const {
  Grid g = *this;
  for (std::size_t i = 0; i < dim(); ++i) {
    const auto& ax = axes_[i];
    Rat extra;
    if (ax.empty()) {
      extra = Rat(0);
    } else if (ax.size() == 1) {
      extra = ax[0] + Rat(1);
    } else {
      extra = (ax[0] + ax[1]) * Rat(1, 2);
    }
    g = g.with_breakpoint(i, extra);
  }
  return g;
}

bool Grid::coarsens(const Grid& g) const {
  if (dim() != g.dim()) return false;
  for (std::size_t i = 0; i < dim(); ++i) {
    const auto& fine = g.axis(i);
    for (const Rat& b : axes_[i]) {
      if (!std::binary_search(fine.begin(), fine.end(), b)) return false;
    }
  }
  return true;
}

std::size_t Grid::flat(const std::vector<std::size_t>& idx) const {
  std::size_t f = 0;
  for (std::size_t i = 0; i < dim(); ++i) f = f * cell_count(i) + idx[i];
  return f;
}

bool Grid::next_cell(std::vector<std::size_t>& idx) const {
  for (std::size_t i = dim(); i-- > 0;) {
    if (++idx[i] < cell_count(i)) return true;
    idx[i] = 0;
  }
  return false;
}

} // namespace lexspec
