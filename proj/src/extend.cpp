#include "lexspec/extend.hpp"

#include <algorithm>

#include "lexspec/errors.hpp"

namespace lexspec {

namespace {

/** Endpoint ladder of one axis chain: -inf, t_1, t_1^+, ..., t_m, t_m^+, +inf. */
std::vector<DecReal> chain_ladder(const std::vector<Rat>& thresholds) {
  std::vector<DecReal> ladder;
  ladder.push_back(DecReal::neg_inf());
  for (const Rat& t : thresholds) {
    ladder.push_back(DecReal::at(t));
    ladder.push_back(DecReal::after(t));
  }
  ladder.push_back(DecReal::pos_inf());
  return ladder;
}

/** All products of consecutive-pair pieces of the per-axis ladders,
    row-major with the last axis fastest. Sums to f pointwise because each
    axis chain telescopes. */
std::vector<StepFn> chain_components(const StepFn& f,
                                     const std::vector<std::vector<Rat>>& thresholds) {
  std::vector<StepFn> cur{f};
  for (std::size_t axis = 0; axis < f.dim(); ++axis) {
    std::vector<DecReal> ladder = chain_ladder(thresholds[axis]);
    std::vector<StepFn> next;
    next.reserve(cur.size() * (ladder.size() - 1));
    for (const StepFn& g : cur) {
      for (std::size_t p = 0; p + 1 < ladder.size(); ++p) {
        next.push_back(g.axis_piece(axis, ladder[p], ladder[p + 1]));
      }
    }
    cur = std::move(next);
  }
  return cur;
}

std::vector<Rat> unique_char_coordinates(const CharPointReport& cps, std::size_t axis) {
  std::vector<Rat> coords;
  for (const CharPoint& cp : cps.points) coords.push_back(cp.point[axis]);
  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
  return coords;
}

} // namespace

std::size_t PerfectDecomposition::index_of(const std::vector<int>& g) const {
  std::size_t idx = 0;
  for (int gi : g) {
    if (gi < -1 || gi > 1) throw PreconditionError("component signature entries must be -1, 0, 1");
    idx = idx * 3 + static_cast<std::size_t>(gi + 1);
  }
  return idx;
}

const StepFn& PerfectDecomposition::component(const std::vector<int>& g) const {
  return components[index_of(g)];
}

PerfectDecomposition decompose_perfect(const StepFn& f) {
  if (f.ctx().k != 1) {
    throw PreconditionError("perfect decomposition requires k = 1, got k = " +
                            std::to_string(f.ctx().k));
  }
  CharPointReport cps = characteristic_points(f);
  if (cps.points.size() != 1 || !cps.regular()) {
    throw PreconditionError("perfect decomposition needs exactly one characteristic point"
                            " and a regular block stratum");
  }
  PerfectDecomposition dec;
  dec.char_point = cps.points[0].point;
  std::vector<std::vector<Rat>> thresholds(f.dim());
  for (std::size_t i = 0; i < f.dim(); ++i) thresholds[i] = {dec.char_point[i]};
  dec.components = chain_components(f, thresholds);
  return dec;
}

StaircaseDecomposition decompose_staircase(const StepFn& f) {
  CharPointReport cps = characteristic_points(f);
  StaircaseDecomposition dec;
  dec.thresholds.resize(f.dim());
  dec.piece_counts.resize(f.dim());
  for (std::size_t i = 0; i < f.dim(); ++i) {
    dec.thresholds[i] = unique_char_coordinates(cps, i);
    dec.piece_counts[i] = 2 * dec.thresholds[i].size() + 1;
  }
  dec.components = chain_components(f, dec.thresholds);
  return dec;
}

BlockUnits block_units(const StepFn& f) {
  if (f.ctx().k != 1) {
    throw PreconditionError("block units require k = 1, got k = " + std::to_string(f.ctx().k));
  }
  CharPointReport cps = characteristic_points(f);
  if (cps.points.size() != 1 || !cps.regular()) {
    throw PreconditionError("block units need exactly one characteristic point");
  }
  const std::vector<Rat>& t0 = cps.points[0].point;
  std::size_t n = f.dim();

  BlockUnits out;
  out.char_point = t0;

  // 2^n corner units: each axis either the lower ray (-inf, t0) or the
  // open upper ray (t0^+, inf).
  out.corner_units.reserve(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<StepFn::DeltaOp> ops;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) {
        ops.push_back({i, DecReal::after(t0[i]), DecReal::pos_inf()});
      } else {
        ops.push_back({i, DecReal::neg_inf(), DecReal::at(t0[i])});
      }
    }
    out.corner_units.push_back(f.delta(ops).cell(std::size_t{0}));
  }

  // Subset units: chosen axes swept in full, the rest pinned to the jump.
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> subset;
    std::vector<StepFn::DeltaOp> ops;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) {
        subset.push_back(i);
        ops.push_back({i, DecReal::neg_inf(), DecReal::pos_inf()});
      } else {
        ops.push_back({i, DecReal::at(t0[i]), DecReal::after(t0[i])});
      }
    }
    out.subset_units[subset] = f.delta(ops).cell(std::size_t{0});
  }

  // The jump mass at the characteristic point itself.
  {
    std::vector<StepFn::DeltaOp> ops;
    for (std::size_t i = 0; i < n; ++i) ops.push_back({i, DecReal::at(t0[i]), DecReal::after(t0[i])});
    out.u_empty = f.delta(ops).cell(std::size_t{0});
  }

  // 1 = sum of corner units
  //     + sum_{j=1}^{n-1} (-1)^{n-j+1} sum_{|S|=j} u_S
  //     + (-1)^{n+1} u_empty.
  LexElem acc = LexElem::zero(static_cast<std::size_t>(f.ctx().m));
  for (const auto& u : out.corner_units) acc = acc + u;
  for (const auto& [subset, u] : out.subset_units) {
    std::size_t j = subset.size();
    bool plus = (n - j + 1) % 2 == 0;
    acc = plus ? acc + u : acc - u;
  }
  acc = (n + 1) % 2 == 0 ? acc + out.u_empty : acc - out.u_empty;
  out.identity_value = acc;
  out.identity_ok = acc == f.ctx().unit();
  if (!out.identity_ok) {
    throw PreconditionError("block-unit identity violated: alternating sum is " + acc.str() +
                            ", expected " + f.ctx().unit().str());
  }
  return out;
}

namespace {

void accumulate(std::vector<LexElem>& into, const std::vector<LexElem>& add) {
  for (std::size_t i = 0; i < into.size(); ++i) into[i] = into[i] + add[i];
}

/** Masses of the positivity regrouping of the projection formula: the 2^n
    corner restrictions contribute their own extensions; the jump slice
    along each hyperplane through the characteristic point contributes its
    recursive extension to the atoms sitting on that hyperplane and on no
    earlier one; the recursion bottoms out at radical-confined pieces,
    which the inclusion-exclusion oracle extends directly. */
std::vector<LexElem> projection_masses(const StepFn& f) {
  std::size_t n = f.dim();
  AtomSet atoms(f.grid());
  CharPointReport cps = characteristic_points(f);

  if (cps.points.empty()) {
    if (!cps.regular()) {
      throw PreconditionError("projection formula: irregular characteristic stratum");
    }
    return atom_masses(f); // radical-confined piece: sigma-complete interval route
  }
  const std::vector<Rat>& t0 = cps.points[0].point;

  std::vector<LexElem> mass(atoms.count(), LexElem::zero(static_cast<std::size_t>(f.ctx().m)));

  // Corner restrictions.
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    StepFn piece = f;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) {
        piece = piece.axis_piece(i, DecReal::after(t0[i]), DecReal::pos_inf());
      } else {
        piece = piece.axis_piece(i, DecReal::neg_inf(), DecReal::at(t0[i]));
      }
    }
    accumulate(mass, atom_masses(piece));
  }

  // Hyperplane slices, one per axis, attributed to the atoms whose i-th
  // factor is the characteristic point's singleton and whose earlier
  // factors are not.
  for (std::size_t i = 0; i < n; ++i) {
    StepFn slice = f.delta({{i, DecReal::at(t0[i]), DecReal::after(t0[i])}}).drop_axes({i});
    std::vector<LexElem> sub = projection_masses(slice);
    AtomSet sub_atoms(slice.grid());

    std::vector<std::size_t> pf(n);
    for (std::size_t j = 0; j < n; ++j) pf[j] = atoms.point_factor(j, t0[j]);

    std::vector<std::size_t> sidx(sub_atoms.dim(), 0);
    std::size_t flat_sub = 0;
    do {
      bool skip = false;
      std::vector<std::size_t> full(n, 0);
      for (std::size_t j = 0, s = 0; j < n; ++j) {
        if (j == i) {
          full[j] = pf[j];
        } else {
          full[j] = sidx[s++];
          if (j < i && full[j] == pf[j]) skip = true; // earlier hyperplane owns this atom
        }
      }
      if (!skip) {
        std::size_t fa = atoms.flat(full);
        mass[fa] = mass[fa] + sub[flat_sub];
      }
      ++flat_sub;
    } while (sub_atoms.next_atom(sidx));
  }

  return mass;
}

} // namespace

Observable extend_observable(const StepFn& f, ExtendMode mode) {
  switch (mode) {
    case ExtendMode::oracle: return oracle_observable(f);
    case ExtendMode::component_sum: {
      StaircaseDecomposition dec = decompose_staircase(f);
      AtomSet atoms(f.grid());
      std::vector<LexElem> mass(atoms.count(),
                                LexElem::zero(static_cast<std::size_t>(f.ctx().m)));
      for (const StepFn& comp : dec.components) accumulate(mass, atom_masses(comp));
      return Observable(std::move(atoms), f.ctx(), std::move(mass));
    }
    case ExtendMode::projection_formula: {
      if (f.ctx().k != 1) {
        throw PreconditionError("projection formula is stated for perfect algebras (k = 1), got k = " +
                                std::to_string(f.ctx().k));
      }
      return Observable(AtomSet(f.grid()), f.ctx(), projection_masses(f));
    }
  }
  throw PreconditionError("unknown extension mode");
}

} // namespace lexspec
