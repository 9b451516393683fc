#ifndef LEXSPEC_SPECTRAL_HPP
#define LEXSPEC_SPECTRAL_HPP

#include <string>
#include <vector>

#include "lexspec/stepfn.hpp"

namespace lexspec {

enum class SrKind { spectral, pseudo };

struct ConditionResult {
  std::string condition; // "representation", "(i)" ... "(v)"
  bool pass = true;
  std::string detail;
  std::vector<std::string> witness; // decorated points / rectangles / cells
};

struct ValidationReport {
  std::vector<ConditionResult> conditions;

  bool ok() const;
  const ConditionResult* find(const std::string& condition) const;
  std::string summary() const;
};

/** Checks the spectral-resolution axioms on a step function:
      (i)   every grid-aligned decorated rectangle has nonnegative volume
            (checked through the unit rectangle volumes, whose sums exhaust
            all rectangle volumes by additivity of the difference
            operators; re-checked after one level of grid refinement),
      (ii)  left-continuity, structural for the cell representation,
      (iii) the lowest slab along each axis vanishes identically,
      (iv)  the top value is the unit (spectral) / recorded as u0 (pseudo),
      (v)   below each characteristic point's block B, the minimum of F
            strictly above the point exists and lies in B.
    Failures carry witnesses; nothing throws. */
ValidationReport validate_spectral(const StepFn& f, SrKind kind);

/** Orthant corner where the blocks of F's values jump. */
struct CharPoint {
  int block = 0;
  std::vector<Rat> point;

  bool operator==(const CharPoint& o) const { return block == o.block && point == o.point; }
};

struct CharPointReport {
  std::vector<CharPoint> points; // emitted points, ascending block
  std::vector<int> irregular_blocks; // nonempty strata that are not orthant-shaped

  bool regular() const { return irregular_blocks.empty(); }
};

/** For each block j >= 1 with a nonempty stratum T_j = {t : block(F(t)) = j},
    the componentwise infimum of T_j is a candidate; it is emitted iff
    T_j is exactly the open upper orthant above it minus the higher strata.
    Other shapes flag the block as irregular. */
CharPointReport characteristic_points(const StepFn& f);

/** At most one point per block and componentwise monotone in the block. */
bool ordering_property(const std::vector<CharPoint>& points);

/** A step function validated against the axioms for its kind. */
class SpectralResolution {
public:
  static SpectralResolution checked(StepFn fn, SrKind kind);

  const StepFn& fn() const { return fn_; }
  SrKind kind() const { return kind_; }
  const ValidationReport& report() const { return report_; }

private:
  SpectralResolution(StepFn fn, SrKind kind, ValidationReport report)
      : fn_(std::move(fn)), kind_(kind), report_(std::move(report)) {}

  StepFn fn_;
  SrKind kind_;
  ValidationReport report_;
};

} // namespace lexspec

#endif
