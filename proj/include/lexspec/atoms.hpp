#ifndef LEXSPEC_ATOMS_HPP
#define LEXSPEC_ATOMS_HPP

#include <string>
#include <vector>

#include "lexspec/grid.hpp"
#include "lexspec/stepfn.hpp"

namespace lexspec {

/** One factor of an atom: an axis slice of the partition generated by the
    breakpoints. An axis with breakpoints b_1 < ... < b_L contributes
    (-inf,b_1), {b_1}, (b_1,b_2), ..., {b_L}, (b_L,inf); an empty axis
    contributes the whole line. */
enum class FactorKind { lower, point, open, upper, all };

struct AtomFactor {
  FactorKind kind = FactorKind::all;
  Rat lo, hi; // lower: hi; point: lo; open: lo,hi; upper: lo; all: none

  /** Decorated endpoints (l, u] whose difference operator measures exactly
      this factor. */
  DecReal delta_lo() const;
  DecReal delta_hi() const;

  std::string str() const;
  bool operator==(const AtomFactor& o) const;
};

/** The atoms of the set algebra generated by the grid's lower rectangles,
    enumerated in lexicographic order of factor indices (row-major, last
    axis fastest). */
class AtomSet {
public:
  explicit AtomSet(Grid grid) : grid_(std::move(grid)) {}

  const Grid& grid() const { return grid_; }
  std::size_t dim() const { return grid_.dim(); }

  std::size_t factor_count(std::size_t axis) const {
    std::size_t l = grid_.axis(axis).size();
    return l == 0 ? 1 : 2 * l + 1;
  }
  std::size_t count() const;

  AtomFactor factor(std::size_t axis, std::size_t j) const;
  std::vector<AtomFactor> atom(std::size_t flat_index) const;
  std::string atom_str(std::size_t flat_index) const;

  std::size_t flat(const std::vector<std::size_t>& idx) const;
  std::vector<std::size_t> unflat(std::size_t flat_index) const;
  bool next_atom(std::vector<std::size_t>& idx) const;

  /** How many leading factors of the axis lie inside (-inf, d). Requires d
      to be grid-aligned: +-inf or a decorated breakpoint. */
  std::size_t factors_below(std::size_t axis, const DecReal& d) const;

  /** Index of the point factor {b}; b must be a breakpoint. */
  std::size_t point_factor(std::size_t axis, const Rat& b) const;

  /** Locate an atom by its factors (exact match required). */
  std::size_t index_of(const std::vector<AtomFactor>& factors) const;

  bool operator==(const AtomSet& o) const { return grid_ == o.grid_; }

private:
  Grid grid_;
};

/** Atom masses of a step function by decorated inclusion-exclusion: for
    each atom the alternating corner sum of the function over the atom's
    decorated rectangle. These are the unit rectangle volumes; every
    grid-aligned rectangle volume is a sum of them. */
std::vector<LexElem> atom_masses(const StepFn& f);

/** Mass of a single atom of f's grid. */
LexElem atom_mass(const StepFn& f, const std::vector<std::size_t>& idx);

} // namespace lexspec

#endif
