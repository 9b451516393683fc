#include "lexspec/observable.hpp"

#include "lexspec/errors.hpp"

namespace lexspec {

RegionSet RegionSet::united(const RegionSet& o) const {
  if (size() != o.size()) throw DimensionError("region sets over different atom sets");
  RegionSet r(size());
  for (std::size_t i = 0; i < size(); ++i)
    if (in_[i] || o.in_[i]) r.add(i);
  return r;
}

RegionSet RegionSet::intersected(const RegionSet& o) const {
  if (size() != o.size()) throw DimensionError("region sets over different atom sets");
  RegionSet r(size());
  for (std::size_t i = 0; i < size(); ++i)
    if (in_[i] && o.in_[i]) r.add(i);
  return r;
}

RegionSet RegionSet::complemented() const {
  RegionSet r(size());
  for (std::size_t i = 0; i < size(); ++i)
    if (!in_[i]) r.add(i);
  return r;
}

Observable::Observable(AtomSet atoms, MvContext ctx, std::vector<LexElem> mass)
    : atoms_(std::move(atoms)), ctx_(ctx), mass_(std::move(mass)) {
  if (mass_.size() != atoms_.count()) {
    throw DimensionError("mass array has " + std::to_string(mass_.size()) + " entries for " +
                         std::to_string(atoms_.count()) + " atoms");
  }
  for (std::size_t i = 0; i < mass_.size(); ++i) {
    if (!ctx_.contains(mass_[i])) {
      throw OutOfIntervalError("atom " + atoms_.atom_str(i) + " carries mass " + mass_[i].str() +
                               " outside the interval algebra");
    }
  }
  if (!ctx_.contains(total())) {
    throw OutOfIntervalError("total mass " + total().str() + " exceeds the unit");
  }
}

LexElem Observable::total() const {
  LexElem t = LexElem::zero(static_cast<std::size_t>(ctx_.m));
  for (const auto& m : mass_) t = t + m;
  return t;
}

LexElem Observable::eval(const RegionSet& region) const {
  if (region.size() != mass_.size()) {
    throw DimensionError("region is not over this observable's atoms");
  }
  LexElem t = LexElem::zero(static_cast<std::size_t>(ctx_.m));
  for (std::size_t i = 0; i < mass_.size(); ++i)
    if (region.contains(i)) t = t + mass_[i];
  return t;
}

Observable oracle_observable(const StepFn& f) {
  AtomSet atoms(f.grid());
  std::vector<LexElem> mass = atom_masses(f);
  LexElem zero = LexElem::zero(static_cast<std::size_t>(f.ctx().m));
  for (std::size_t i = 0; i < mass.size(); ++i) {
    if (!geq(mass[i], zero)) {
      throw OutOfIntervalError("negative mass " + mass[i].str() + " on atom " + atoms.atom_str(i) +
                               ": input is not a valid spectral resolution"
                               " (cross-check with validate_spectral)");
    }
  }
  return Observable(std::move(atoms), f.ctx(), std::move(mass));
}

namespace {

/** Per-axis inclusive running sums over the atom array. */
std::vector<LexElem> prefix_masses(const AtomSet& atoms, std::vector<LexElem> p) {
  std::size_t n = atoms.dim();
  // Strides of the row-major atom layout.
  std::vector<std::size_t> counts(n), strides(n, 1);
  for (std::size_t i = 0; i < n; ++i) counts[i] = atoms.factor_count(i);
  for (std::size_t i = n; i-- > 1;) strides[i - 1] = strides[i] * counts[i];
  for (std::size_t axis = 0; axis < n; ++axis) {
    std::vector<std::size_t> idx(n, 0);
    do {
      if (idx[axis] == 0) continue;
      std::size_t f = atoms.flat(idx);
      p[f] = p[f] + p[f - strides[axis]];
    } while (atoms.next_atom(idx));
  }
  return p;
}

} // namespace

StepFn cumulative(const Observable& x) {
  const AtomSet& atoms = x.atoms();
  const Grid& grid = atoms.grid();
  std::size_t n = grid.dim();
  std::vector<LexElem> p = prefix_masses(atoms, x.mass());

  std::vector<LexElem> cells;
  cells.reserve(grid.total_cells());
  std::vector<std::size_t> cidx(n, 0);
  std::vector<std::size_t> aidx(n, 0);
  do {
    // Cell c reads the prefix of the atoms strictly below its
    // representative point: factor index 2c for interior cells, the last
    // factor for the top cell.
    for (std::size_t i = 0; i < n; ++i) {
      aidx[i] = cidx[i] < grid.axis(i).size() ? 2 * cidx[i] : atoms.factor_count(i) - 1;
    }
    cells.push_back(p[atoms.flat(aidx)]);
  } while (grid.next_cell(cidx));
  return StepFn(grid, x.ctx(), std::move(cells));
}

bool verify_uniqueness(const StepFn& f) {
  AtomSet atoms(f.grid());
  std::size_t n = f.dim();

  // Right-hand side: F at the decorated point whose lower rectangle holds
  // exactly the atoms up to the constraint's own atom index.
  std::vector<LexElem> rhs;
  rhs.reserve(atoms.count());
  std::vector<std::size_t> idx(n, 0);
  std::vector<DecReal> point(n);
  do {
    for (std::size_t i = 0; i < n; ++i) {
      const auto& ax = f.grid().axis(i);
      std::size_t j = idx[i];
      if (ax.empty() || j == 2 * ax.size()) {
        point[i] = DecReal::pos_inf();
      } else if (j % 2 == 0) {
        point[i] = DecReal::at(ax[j / 2]);
      } else {
        point[i] = DecReal::after(ax[(j - 1) / 2]);
      }
    }
    rhs.push_back(f.at(point));
  } while (atoms.next_atom(idx));

  // Forward substitution, one axis at a time: adjacent differences invert
  // the per-axis running sums of the triangular system.
  std::vector<std::size_t> counts(n), strides(n, 1);
  for (std::size_t i = 0; i < n; ++i) counts[i] = atoms.factor_count(i);
  for (std::size_t i = n; i-- > 1;) strides[i - 1] = strides[i] * counts[i];
  for (std::size_t axis = 0; axis < n; ++axis) {
    std::vector<std::size_t> aidx(n, 0);
    // Difference from the high end so lower entries stay intact.
    std::vector<LexElem> next = rhs;
    do {
      if (aidx[axis] == 0) continue;
      std::size_t fl = atoms.flat(aidx);
      next[fl] = rhs[fl] - rhs[fl - strides[axis]];
    } while (atoms.next_atom(aidx));
    rhs = std::move(next);
  }

  return rhs == atom_masses(f);
}

} // namespace lexspec
