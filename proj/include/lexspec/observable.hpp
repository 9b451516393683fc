#ifndef LEXSPEC_OBSERVABLE_HPP
#define LEXSPEC_OBSERVABLE_HPP

#include <vector>

#include "lexspec/atoms.hpp"
#include "lexspec/mvalgebra.hpp"
#include "lexspec/stepfn.hpp"

namespace lexspec {

/** A finite union of atoms, closed under the Boolean operations of the
    generated algebra. Indices refer to one fixed AtomSet. */
class RegionSet {
public:
  explicit RegionSet(std::size_t atom_count) : in_(atom_count, false) {}

  std::size_t size() const { return in_.size(); }
  bool contains(std::size_t i) const { return in_[i]; }
  void add(std::size_t i) { in_[i] = true; }

  RegionSet united(const RegionSet& o) const;
  RegionSet intersected(const RegionSet& o) const;
  RegionSet complemented() const;

  bool operator==(const RegionSet& o) const { return in_ == o.in_; }

private:
  std::vector<bool> in_;
};

/** Finitely additive assignment of algebra elements to the atoms of the
    grid-generated set algebra. sigma-additivity degenerates to finite
    additivity here; every mass must be a valid interval element. */
class Observable {
public:
  Observable(AtomSet atoms, MvContext ctx, std::vector<LexElem> mass);

  const AtomSet& atoms() const { return atoms_; }
  const MvContext& ctx() const { return ctx_; }
  const std::vector<LexElem>& mass() const { return mass_; }
  const LexElem& mass_at(std::size_t atom) const { return mass_[atom]; }

  /** Sum of all masses: the unit for full observables, u0 for pseudo. */
  LexElem total() const;

  /** Additive evaluation over an atom-aligned region. */
  LexElem eval(const RegionSet& region) const;

  bool operator==(const Observable& o) const {
    return atoms_ == o.atoms_ && ctx_ == o.ctx_ && mass_ == o.mass_;
  }

private:
  AtomSet atoms_;
  MvContext ctx_;
  std::vector<LexElem> mass_;
};

/** The brute-force extension: atom masses by decorated inclusion-exclusion.
    Rejects negative masses, which signal an input that is not a valid
    (pseudo) spectral resolution; cross-check with validate_spectral. */
Observable oracle_observable(const StepFn& f);

/** Rebuilds the step function t -> x((-inf, t)) from atom masses; the
    inverse of oracle_observable. */
StepFn cumulative(const Observable& x);

/** Sets up the linear system "atom masses reproduce F on every decorated
    lower rectangle", solves it by per-axis forward substitution (the
    lower-rectangle indicator matrix is triangular with unit diagonal under
    the atom order), and confirms the oracle's masses are its unique
    solution. */
bool verify_uniqueness(const StepFn& f);

} // namespace lexspec

#endif
