#include "lexspec/atoms.hpp"

#include "lexspec/errors.hpp"

namespace lexspec {

DecReal AtomFactor::delta_lo() const {
  switch (kind) {
    case FactorKind::lower: return DecReal::neg_inf();
    case FactorKind::point: return DecReal::at(lo);
    case FactorKind::open: return DecReal::after(lo);
    case FactorKind::upper: return DecReal::after(lo);
    case FactorKind::all: return DecReal::neg_inf();
  }
  return DecReal::neg_inf();
}

DecReal AtomFactor::delta_hi() const {
  switch (kind) {
    case FactorKind::lower: return DecReal::at(hi);
    case FactorKind::point: return DecReal::after(lo);
    case FactorKind::open: return DecReal::at(hi);
    case FactorKind::upper: return DecReal::pos_inf();
    case FactorKind::all: return DecReal::pos_inf();
  }
  return DecReal::pos_inf();
}

std::string AtomFactor::str() const {
  switch (kind) {
    case FactorKind::lower: return "(-inf," + hi.str() + ")";
    case FactorKind::point: return "{" + lo.str() + "}";
    case FactorKind::open: return "(" + lo.str() + "," + hi.str() + ")";
    case FactorKind::upper: return "(" + lo.str() + ",inf)";
    case FactorKind::all: return "(-inf,inf)";
  }
  return "?";
}

bool AtomFactor::operator==(const AtomFactor& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case FactorKind::lower: return hi == o.hi;
    case FactorKind::point: return lo == o.lo;
    case FactorKind::open: return lo == o.lo && hi == o.hi;
    case FactorKind::upper: return lo == o.lo;
    case FactorKind::all: return true;
  }
  return false;
}

std::size_t AtomSet::count() const {
  std::size_t n = 1;
  for (std::size_t i = 0; i < dim(); ++i) n *= factor_count(i);
  return n;
}

AtomFactor AtomSet::factor(std::size_t axis, std::size_t j) const {
  const auto& ax = grid_.axis(axis);
  AtomFactor f;
  if (ax.empty()) {
    f.kind = FactorKind::all;
    return f;
  }
  if (j == 0) {
    f.kind = FactorKind::lower;
    f.hi = ax[0];
  } else if (j % 2 == 1) {
    f.kind = FactorKind::point;
    f.lo = ax[(j - 1) / 2];
  } else if (j == 2 * ax.size()) {
    f.kind = FactorKind::upper;
    f.lo = ax.back();
  } else {
    f.kind = FactorKind::open;
    f.lo = ax[j / 2 - 1];
    f.hi = ax[j / 2];
  }
  return f;
}

std::vector<AtomFactor> AtomSet::atom(std::size_t flat_index) const {
  auto idx = unflat(flat_index);
  std::vector<AtomFactor> fs;
  fs.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) fs.push_back(factor(i, idx[i]));
  return fs;
}

std::string AtomSet::atom_str(std::size_t flat_index) const {
  auto fs = atom(flat_index);
  std::string s;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) s += "x";
    s += fs[i].str();
  }
  return s.empty() ? "()" : s;
}

std::size_t AtomSet::flat(const std::vector<std::size_t>& idx) const {
  std::size_t f = 0;
  for (std::size_t i = 0; i < dim(); ++i) f = f * factor_count(i) + idx[i];
  return f;
}

std::vector<std::size_t> AtomSet::unflat(std::size_t flat_index) const {
  std::vector<std::size_t> idx(dim(), 0);
  for (std::size_t i = dim(); i-- > 0;) {
    idx[i] = flat_index % factor_count(i);
    flat_index /= factor_count(i);
  }
  return idx;
}

bool AtomSet::next_atom(std::vector<std::size_t>& idx) const {
  for (std::size_t i = dim(); i-- > 0;) {
    if (++idx[i] < factor_count(i)) return true;
    idx[i] = 0;
  }
  return false;
}

std::size_t AtomSet::factors_below(std::size_t axis, const DecReal& d) const {
  const auto& ax = grid_.axis(axis);
  switch (d.kind()) {
    case DecReal::Kind::neg_inf: return 0;
    case DecReal::Kind::pos_inf: return factor_count(axis);
    case DecReal::Kind::finite: break;
  }
  if (ax.empty()) {
    throw PreconditionError("region boundary " + d.str() + " is not grid-aligned (axis has no breakpoints)");
  }
  for (std::size_t t = 0; t < ax.size(); ++t) {
    if (ax[t] == d.value()) return 2 * t + (d.is_plus() ? 2 : 1);
  }
  throw PreconditionError("region boundary " + d.str() + " is not a grid breakpoint");
}

std::size_t AtomSet::point_factor(std::size_t axis, const Rat& b) const {
  const auto& ax = grid_.axis(axis);
  for (std::size_t t = 0; t < ax.size(); ++t) {
    if (ax[t] == b) return 2 * t + 1;
  }
  throw PreconditionError("point " + b.str() + " is not a breakpoint of axis " + std::to_string(axis));
}

std::size_t AtomSet::index_of(const std::vector<AtomFactor>& factors) const {
  if (factors.size() != dim()) throw DimensionError("atom has wrong number of factors");
  std::vector<std::size_t> idx(dim(), 0);
  for (std::size_t i = 0; i < dim(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < factor_count(i) && !found; ++j) {
      if (factor(i, j) == factors[i]) {
        idx[i] = j;
        found = true;
      }
    }
    if (!found) {
      throw PreconditionError("factor " + factors[i].str() + " is not an atom factor of axis " +
                              std::to_string(i));
    }
  }
  return flat(idx);
}

LexElem atom_mass(const StepFn& f, const std::vector<std::size_t>& idx) {
  AtomSet atoms(f.grid());
  std::size_t n = f.dim();
  std::vector<DecReal> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    AtomFactor fac = atoms.factor(i, idx[i]);
    lo[i] = fac.delta_lo();
    hi[i] = fac.delta_hi();
  }
  LexElem v = LexElem::zero(static_cast<std::size_t>(f.ctx().m));
  std::vector<DecReal> point(n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::size_t lo_count = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) {
        point[i] = hi[i];
      } else {
        point[i] = lo[i];
        ++lo_count;
      }
    }
    LexElem term = f.at(point);
    v = (lo_count % 2 == 0) ? v + term : v - term;
  }
  return v;
}

std::vector<LexElem> atom_masses(const StepFn& f) {
  AtomSet atoms(f.grid());
  std::size_t n = f.dim();
  // Decorated endpoints of every factor, once per axis.
  std::vector<std::vector<std::pair<DecReal, DecReal>>> ends(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < atoms.factor_count(i); ++j) {
      AtomFactor fac = atoms.factor(i, j);
      ends[i].emplace_back(fac.delta_lo(), fac.delta_hi());
    }
  }
  std::vector<LexElem> out;
  out.reserve(atoms.count());
  std::vector<std::size_t> idx(n, 0);
  std::vector<DecReal> point(n);
  do {
    LexElem v = LexElem::zero(static_cast<std::size_t>(f.ctx().m));
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::size_t lo_count = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const auto& e = ends[i][idx[i]];
        if (mask & (std::size_t{1} << i)) {
          point[i] = e.second;
        } else {
          point[i] = e.first;
          ++lo_count;
        }
      }
      LexElem term = f.at(point);
      v = (lo_count % 2 == 0) ? v + term : v - term;
    }
    out.push_back(std::move(v));
  } while (atoms.next_atom(idx));
  return out;
}

} // namespace lexspec
