#ifndef LEXSPEC_GENERATE_HPP
#define LEXSPEC_GENERATE_HPP

#include <random>

#include "lexspec/stepfn.hpp"

namespace lexspec {

/** Knobs for the random valid-instance generator behind the property
    suites and the fuzz subcommand. */
struct GenOptions {
  std::size_t n_min = 1;
  std::size_t n_max = 3;
  int k_min = 1;
  int k_max = 3;
  int m_min = 1;
  int m_max = 2;
  std::size_t max_breakpoints = 3;
  /** Force componentwise-ordered jump points (the ordering property).
      Otherwise k > 1 instances occasionally get incomparable jumps. */
  bool chain_only = false;
};

/** A random valid spectral resolution, built as the cumulative function of
    a random nonnegative atom-mass assignment whose block jumps sit on
    breakpoint corners and whose total is the unit. Valid by construction;
    the suites re-validate anyway. */
StepFn random_spectral(std::mt19937_64& rng, const GenOptions& opt = {});

} // namespace lexspec

#endif
