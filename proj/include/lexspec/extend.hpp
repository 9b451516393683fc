#ifndef LEXSPEC_EXTEND_HPP
#define LEXSPEC_EXTEND_HPP

#include <map>
#include <vector>

#include "lexspec/observable.hpp"
#include "lexspec/spectral.hpp"

namespace lexspec {

/** The 3^n pieces of a perfect (k = 1) spectral resolution around its
    characteristic point: per axis the cap below the point, the jump across
    it, and the remainder above it, min-capped so the pieces are total. */
struct PerfectDecomposition {
  std::vector<Rat> char_point;
  std::vector<StepFn> components; // base-3 index, digit d_i = g_i + 1, last axis fastest

  std::size_t index_of(const std::vector<int>& g) const;
  const StepFn& component(const std::vector<int>& g) const;
};

PerfectDecomposition decompose_perfect(const StepFn& f);

/** The general chain decomposition: per axis one operator chain through
    all distinct characteristic-point coordinates, prod_i (2 m_i + 1)
    components in total, summing to the input pointwise. */
struct StaircaseDecomposition {
  std::vector<std::vector<Rat>> thresholds; // ascending per axis (m_i entries)
  std::vector<std::size_t> piece_counts; // 2 m_i + 1
  std::vector<StepFn> components; // row-major over piece indices, last axis fastest
};

StaircaseDecomposition decompose_staircase(const StepFn& f);

/** Corner units, subset units, and the jump mass at the characteristic
    point of a perfect resolution, with the alternating-sign identity that
    reassembles the unit. */
struct BlockUnits {
  std::vector<Rat> char_point;
  std::vector<LexElem> corner_units; // 2^n, bit i set = upper side of axis i
  std::map<std::vector<std::size_t>, LexElem> subset_units; // proper nonempty axis subsets
  LexElem u_empty;
  LexElem identity_value;
  bool identity_ok = false;
};

BlockUnits block_units(const StepFn& f);

enum class ExtendMode { projection_formula, component_sum, oracle };

/** Extends a valid spectral resolution to the observable it determines.
    All modes produce the same atom masses; they differ in construction:
      - oracle:             decorated inclusion-exclusion per atom,
      - component_sum:      chain decomposition, each radical-confined or
                            point-concentrated piece extended separately,
                            masses summed,
      - projection_formula: the corner restrictions plus recursively
                            extended lower-dimensional jump slices glued
                            along the hyperplanes through the
                            characteristic point (perfect algebras only).
 */
Observable extend_observable(const StepFn& f, ExtendMode mode);

} // namespace lexspec

#endif
