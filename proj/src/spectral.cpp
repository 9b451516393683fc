#include "lexspec/spectral.hpp"

#include <algorithm>
#include <sstream>

#include "lexspec/atoms.hpp"
#include "lexspec/errors.hpp"

namespace lexspec {

bool ValidationReport::ok() const {
  return std::all_of(conditions.begin(), conditions.end(),
                     [](const ConditionResult& c) { return c.pass; });
}

const ConditionResult* ValidationReport::find(const std::string& condition) const {
  for (const auto& c : conditions)
    if (c.condition == condition) return &c;
  return nullptr;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < conditions.size(); ++i) {
    if (i) os << "; ";
    os << conditions[i].condition << ": " << (conditions[i].pass ? "pass" : "FAIL");
    if (!conditions[i].pass && !conditions[i].detail.empty()) os << " (" << conditions[i].detail << ")";
  }
  return os.str();
}

namespace {

std::string rect_str(const AtomSet& atoms, const std::vector<std::size_t>& idx) {
  std::string s;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    AtomFactor f = atoms.factor(i, idx[i]);
    if (i) s += " x ";
    s += "(" + f.delta_lo().str() + "," + f.delta_hi().str() + "]";
  }
  return s;
}

ConditionResult check_volumes(const StepFn& f, const char* name) {
  ConditionResult r{name, true, "", {}};
  AtomSet atoms(f.grid());
  std::vector<LexElem> vols = atom_masses(f);
  LexElem zero = LexElem::zero(static_cast<std::size_t>(f.ctx().m));
  for (std::size_t i = 0; i < vols.size(); ++i) {
    if (!geq(vols[i], zero)) {
      r.pass = false;
      r.detail = "rectangle volume " + vols[i].str() + " is negative";
      r.witness.push_back(rect_str(atoms, atoms.unflat(i)));
      break;
    }
  }
  return r;
}

} // namespace

ValidationReport validate_spectral(const StepFn& f, SrKind kind) {
  ValidationReport rep;

  // Representation: cells must be elements of the interval algebra; the
  // cell layout encodes left-continuity, which is condition (ii).
  {
    ConditionResult r{"representation", true, "", {}};
    std::vector<std::size_t> idx(f.dim(), 0);
    do {
      const LexElem& c = f.cell(idx);
      if (!f.ctx().contains(c)) {
        r.pass = false;
        r.detail = "cell value " + c.str() + " lies outside [0, " + f.ctx().unit().str() + "]";
        std::string w;
        for (std::size_t i = 0; i < idx.size(); ++i) w += (i ? "," : "") + std::to_string(idx[i]);
        r.witness.push_back("cell " + w);
        break;
      }
    } while (f.grid().next_cell(idx));
    rep.conditions.push_back(std::move(r));
  }

  // (i) volume condition, then once more after refining the grid.
  {
    ConditionResult r = check_volumes(f, "(i)");
    if (r.pass) {
      StepFn fine = f.on_grid(f.grid().refined());
      ConditionResult r2 = check_volumes(fine, "(i)");
      if (!r2.pass) {
        r.pass = false;
        r.detail = "volume condition fails under grid refinement: " + r2.detail;
        r.witness = r2.witness;
      }
    }
    rep.conditions.push_back(std::move(r));
  }

  // (ii) structural.
  rep.conditions.push_back(
      {"(ii)", true, "left-continuity holds by the cell representation", {}});

  // (iii) lowest slab along each axis is identically 0.
  {
    ConditionResult r{"(iii)", true, "", {}};
    LexElem zero = LexElem::zero(static_cast<std::size_t>(f.ctx().m));
    for (std::size_t axis = 0; axis < f.dim() && r.pass; ++axis) {
      std::vector<std::size_t> idx(f.dim(), 0);
      do {
        if (idx[axis] != 0) continue;
        if (!(f.cell(idx) == zero)) {
          r.pass = false;
          r.detail = "infimum along axis " + std::to_string(axis) + " is " + f.cell(idx).str() +
                     ", not 0";
          std::string w;
          for (std::size_t i = 0; i < idx.size(); ++i) w += (i ? "," : "") + std::to_string(idx[i]);
          r.witness.push_back("cell " + w);
          break;
        }
      } while (f.grid().next_cell(idx));
    }
    rep.conditions.push_back(std::move(r));
  }

  // (iv) top value.
  {
    ConditionResult r{"(iv)", true, "", {}};
    if (kind == SrKind::spectral) {
      if (!(f.top() == f.ctx().unit())) {
        r.pass = false;
        r.detail = "total supremum is " + f.top().str() + ", not the unit " + f.ctx().unit().str();
      }
    } else {
      r.condition = "(iv)'";
      r.detail = "u0 = " + f.top().str();
    }
    rep.conditions.push_back(std::move(r));
  }

  // (v) block minima above each characteristic point.
  {
    ConditionResult r{"(v)", true, "", {}};
    CharPointReport cps = characteristic_points(f);
    for (const CharPoint& cp : cps.points) {
      // Minimum of F over decorated grid points strictly above the point.
      std::vector<std::vector<DecReal>> above(f.dim());
      for (std::size_t i = 0; i < f.dim(); ++i) {
        for (const DecReal& d : f.grid().decorated_points(i, false)) {
          if (DecReal::at(cp.point[i]) < d) above[i].push_back(d);
        }
      }
      std::vector<std::size_t> pick(f.dim(), 0);
      std::vector<DecReal> point(f.dim());
      bool have = false;
      LexElem m = LexElem::zero(static_cast<std::size_t>(f.ctx().m));
      bool attained = false;
      while (true) {
        for (std::size_t i = 0; i < f.dim(); ++i) point[i] = above[i][pick[i]];
        LexElem v = f.at(point);
        m = have ? inf(m, v) : v;
        have = true;
        std::size_t i = f.dim();
        bool done = true;
        while (i-- > 0) {
          if (++pick[i] < above[i].size()) {
            done = false;
            break;
          }
          pick[i] = 0;
        }
        if (done) break;
      }
      // Attainment makes the infimum a minimum.
      pick.assign(f.dim(), 0);
      while (true) {
        for (std::size_t i = 0; i < f.dim(); ++i) point[i] = above[i][pick[i]];
        if (f.at(point) == m) {
          attained = true;
          break;
        }
        std::size_t i = f.dim();
        bool done = true;
        while (i-- > 0) {
          if (++pick[i] < above[i].size()) {
            done = false;
            break;
          }
          pick[i] = 0;
        }
        if (done) break;
      }
      if (!have || !attained || m.h != cp.block) {
        r.pass = false;
        r.detail = "a_B = " + m.str() + " for the block-" + std::to_string(cp.block) +
                   " characteristic point" + (attained ? "" : " (infimum not attained)") +
                   (m.h != cp.block ? " lies outside the block" : "");
        std::string w;
        for (std::size_t i = 0; i < cp.point.size(); ++i) w += (i ? "," : "") + cp.point[i].str();
        r.witness.push_back("(" + w + ")");
        break;
      }
    }
    if (r.pass && !cps.points.empty()) {
      r.detail = std::to_string(cps.points.size()) + " characteristic point(s), all block minima exist";
    }
    rep.conditions.push_back(std::move(r));
  }

  return rep;
}

CharPointReport characteristic_points(const StepFn& f) {
  CharPointReport rep;
  int k = f.ctx().k;
  std::size_t n = f.dim();
  const Grid& grid = f.grid();

  for (int j = 1; j <= k; ++j) {
    // Cells of the exact stratum T_j and candidate corner.
    bool stratum_nonempty = false;
    bool corner_finite = true;
    std::vector<Rat> corner(n);
    std::vector<bool> corner_set(n, false);
    std::vector<std::size_t> idx(n, 0);
    do {
      if (f.cell(idx).h != j) continue;
      stratum_nonempty = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (idx[i] == 0) {
          corner_finite = false;
        } else {
          const Rat& lo = grid.axis(i)[idx[i] - 1];
          if (!corner_set[i] || lo < corner[i]) {
            corner[i] = lo;
            corner_set[i] = true;
          }
        }
      }
    } while (grid.next_cell(idx));

    if (!stratum_nonempty) continue;
    if (!corner_finite) {
      rep.irregular_blocks.push_back(j);
      continue;
    }

    // T_j must be exactly {t >> corner} minus the higher strata.
    bool regular = true;
    idx.assign(n, 0);
    do {
      std::int64_t h = f.cell(idx).h;
      bool in_orthant = true;
      for (std::size_t i = 0; i < n && in_orthant; ++i) {
        in_orthant = idx[i] >= 1 && !(grid.axis(i)[idx[i] - 1] < corner[i]);
      }
      bool lhs = h == j;
      bool rhs = in_orthant && h <= j;
      if (lhs != rhs) {
        regular = false;
        break;
      }
    } while (grid.next_cell(idx));

    if (regular) {
      rep.points.push_back(CharPoint{j, corner});
    } else {
      rep.irregular_blocks.push_back(j);
    }
  }
  return rep;
}

bool ordering_property(const std::vector<CharPoint>& points) {
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = 0; b < points.size(); ++b) {
      if (points[a].block == points[b].block && a != b) return false;
      if (points[a].block < points[b].block) {
        for (std::size_t i = 0; i < points[a].point.size(); ++i) {
          if (points[b].point[i] < points[a].point[i]) return false;
        }
      }
    }
  }
  return true;
}

SpectralResolution SpectralResolution::checked(StepFn fn, SrKind kind) {
  ValidationReport rep = validate_spectral(fn, kind);
  if (!rep.ok()) {
    throw PreconditionError("not a valid " +
                            std::string(kind == SrKind::spectral ? "spectral" : "pseudo spectral") +
                            " resolution: " + rep.summary());
  }
  return SpectralResolution(std::move(fn), kind, std::move(rep));
}

} // namespace lexspec
