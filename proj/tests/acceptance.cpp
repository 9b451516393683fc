// Acceptance suite: one line per criterion, exact rational arithmetic with
// zero tolerance throughout. Exit status 0 iff every criterion passes.

#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "lexspec/calculus.hpp"
#include "lexspec/extend.hpp"
#include "lexspec/generate.hpp"
#include "lexspec/observable.hpp"
#include "lexspec/spectral.hpp"

using namespace lexspec;
using fixtures::el;

namespace {

int g_failures = 0;

class Checker {
public:
  void require(bool ok, const std::string& what) {
    if (!ok) {
      ++fail_count_;
      if (first_.empty()) first_ = what;
    }
  }
  bool ok() const { return fail_count_ == 0; }
  std::string detail() const {
    if (ok()) return "";
    std::ostringstream os;
    os << fail_count_ << " check(s) failed, first: " << first_;
    return os.str();
  }

private:
  int fail_count_ = 0;
  std::string first_;
};

void report(int num, const std::string& name, const Checker& c, double secs, double budget) {
  bool ok = c.ok() && secs < budget;
  if (!ok) ++g_failures;
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << num << ": " << name << " (" << secs
            << " s, budget " << budget << " s)";
  if (!c.ok()) std::cout << " -- " << c.detail();
  if (c.ok() && secs >= budget) std::cout << " -- over time budget";
  std::cout << "\n";
}

template <typename F>
void run(int num, const std::string& name, double budget, F&& body) {
  Checker c;
  auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(num, name, c, secs, budget);
}

/** Nonzero masses keyed by the coordinates of their (singleton) atoms.
    Step functions concentrate all mass on breakpoint corners, so the keys
    are grid-independent: refining a grid must not change the map. */
using SupportMap = std::map<std::vector<std::string>, std::string>;

SupportMap support_map(const Observable& x, Checker& c) {
  SupportMap m;
  LexElem zero = LexElem::zero(static_cast<std::size_t>(x.ctx().m));
  for (std::size_t i = 0; i < x.atoms().count(); ++i) {
    if (x.mass_at(i) == zero) continue;
    std::vector<std::string> key;
    for (const AtomFactor& f : x.atoms().atom(i)) {
      c.require(f.kind == FactorKind::point, "nonzero mass off a singleton atom");
      key.push_back(f.lo.str());
    }
    m[key] = x.mass_at(i).str();
  }
  return m;
}

StepFn refined_instance(const StepFn& f) { return f.on_grid(f.grid().refined()); }

// ---- criterion bodies, reused verbatim by the refinement re-run ----

struct InstanceOutcome {
  bool all_ok = true;
  SupportMap masses;
};

InstanceOutcome run_extension_battery(const StepFn& f, Checker& c) {
  InstanceOutcome out;
  ValidationReport rep = validate_spectral(f, SrKind::spectral);
  c.require(rep.ok(), "validation failed: " + rep.summary());
  out.all_ok = rep.ok();

  Observable oracle = oracle_observable(f);
  Observable comp = extend_observable(f, ExtendMode::component_sum);
  c.require(comp == oracle, "component-sum disagrees with oracle");
  out.all_ok = out.all_ok && comp == oracle;

  // Extension property: the masses reproduce F on every decorated lower
  // rectangle, i.e. the cumulative function equals F cell by cell.
  bool extends = cumulative(oracle) == f;
  c.require(extends, "extension does not reproduce the input");
  out.all_ok = out.all_ok && extends;

  // Decomposition sum identity and component count.
  StaircaseDecomposition dec = decompose_staircase(f);
  StepFn sum =
      StepFn::constant(f.grid(), f.ctx(), LexElem::zero(static_cast<std::size_t>(f.ctx().m)));
  for (const StepFn& piece : dec.components) sum = cellwise_add(sum, piece);
  c.require(sum == f, "decomposition does not sum back to the input");
  std::size_t expected = 1;
  for (std::size_t pc : dec.piece_counts) expected *= pc;
  c.require(dec.components.size() == expected, "component count differs from prod(2 m_i + 1)");

  bool unique = verify_uniqueness(f);
  c.require(unique, "lower-rectangle system not solved uniquely by the oracle");
  out.all_ok = out.all_ok && (sum == f) && unique;

  out.masses = support_map(oracle, c);
  return out;
}

std::vector<InstanceOutcome> criterion4(Checker& c, bool refine) {
  std::mt19937_64 rng(20260809);
  GenOptions opt; // n <= 3, <= 3 breakpoints/axis, k <= 3, m <= 2
  std::vector<InstanceOutcome> outcomes;
  for (int it = 0; it < 200; ++it) {
    StepFn f = random_spectral(rng, opt);
    if (refine) f = refined_instance(f);
    outcomes.push_back(run_extension_battery(f, c));
  }
  return outcomes;
}

bool case_table_matches(const StepFn& f, const std::vector<Rat>& t0, Checker& c) {
  bool all = true;
  for (std::size_t axis = 0; axis < f.dim(); ++axis) {
    auto pts = f.grid().decorated_points(axis, true);
    for (std::size_t a = 0; a < pts.size(); ++a) {
      for (std::size_t b = a; b < pts.size(); ++b) {
        const DecReal& lo = pts[a];
        const DecReal& hi = pts[b];
        StepFn slice = f.delta({{axis, lo, hi}}).drop_axes({axis});
        bool lo_ok = lo.is_neg_inf() || (lo.is_finite() && (lo.is_plus()
                                                                ? lo.value() < t0[axis]
                                                                : !(t0[axis] < lo.value())));
        bool hi_ok = hi.is_pos_inf() || (hi.is_finite() && (hi.is_plus()
                                                                ? !(hi.value() < t0[axis])
                                                                : t0[axis] < hi.value()));
        CharPointReport rep = characteristic_points(slice);
        bool expect = lo_ok && hi_ok;
        bool got = rep.points.size() == (expect ? 1u : 0u);
        if (expect && got) {
          std::vector<Rat> proj;
          for (std::size_t i = 0; i < f.dim(); ++i)
            if (i != axis) proj.push_back(t0[i]);
          got = rep.points[0].point == proj && rep.points[0].block == 1;
        }
        c.require(got, "case table mismatch at axis " + std::to_string(axis) + ", [" + lo.str() +
                           ", " + hi.str() + "]");
        all = all && got;
      }
    }
  }
  return all;
}

std::vector<InstanceOutcome> criterion5(Checker& c, bool refine) {
  std::mt19937_64 rng(50602080);
  GenOptions opt;
  opt.k_min = opt.k_max = 1;
  std::vector<InstanceOutcome> outcomes;
  for (int it = 0; it < 100; ++it) {
    StepFn f = random_spectral(rng, opt);
    if (refine) f = refined_instance(f);
    InstanceOutcome out;

    Observable oracle = oracle_observable(f);
    Observable comp = extend_observable(f, ExtendMode::component_sum);
    Observable proj = extend_observable(f, ExtendMode::projection_formula);
    c.require(comp == oracle, "component-sum disagrees with oracle");
    c.require(proj == oracle, "projection formula disagrees with oracle");
    out.all_ok = comp == oracle && proj == oracle;

    // Block-unit identity.
    BlockUnits units = block_units(f);
    c.require(units.identity_ok && units.identity_value == f.ctx().unit(),
              "block-unit identity violated");

    // Positivity of every contributing piece of the regrouped formula.
    CharPointReport cps = characteristic_points(f);
    c.require(cps.points.size() == 1, "perfect instance without a unique characteristic point");
    if (cps.points.size() == 1) {
      const auto& t0 = cps.points[0].point;
      LexElem zero = LexElem::zero(static_cast<std::size_t>(f.ctx().m));
      for (std::size_t mask = 0; mask < (std::size_t{1} << f.dim()); ++mask) {
        StepFn piece = f;
        for (std::size_t i = 0; i < f.dim(); ++i) {
          piece = (mask & (std::size_t{1} << i))
                      ? piece.axis_piece(i, DecReal::after(t0[i]), DecReal::pos_inf())
                      : piece.axis_piece(i, DecReal::neg_inf(), DecReal::at(t0[i]));
        }
        for (const LexElem& v : atom_masses(piece)) c.require(geq(v, zero), "negative corner term");
      }
      for (std::size_t i = 0; i < f.dim(); ++i) {
        StepFn slice = f.delta({{i, DecReal::at(t0[i]), DecReal::after(t0[i])}}).drop_axes({i});
        Observable sub = extend_observable(slice, ExtendMode::projection_formula);
        for (const LexElem& v : sub.mass()) c.require(geq(v, zero), "negative hyperplane term");
      }
      out.all_ok = out.all_ok && case_table_matches(f, t0, c);
    }

    out.masses = support_map(oracle, c);
    outcomes.push_back(std::move(out));
  }
  return outcomes;
}

std::vector<InstanceOutcome> criterion6(Checker& c, bool refine) {
  std::mt19937_64 rng(60300509);
  GenOptions opt;
  opt.k_min = opt.k_max = 1;
  opt.max_breakpoints = 2;
  std::vector<InstanceOutcome> outcomes;
  for (int it = 0; it < 50; ++it) {
    opt.n_min = opt.n_max = 1 + static_cast<std::size_t>(it % 2);
    opt.m_min = opt.m_max = 1 + (it / 2) % 2;
    StepFn f1 = random_spectral(rng, opt);
    StepFn f2 = random_spectral(rng, opt);
    StepFn f3 = random_spectral(rng, opt);
    if (refine) {
      f1 = refined_instance(f1);
      f2 = refined_instance(f2);
      f3 = refined_instance(f3);
    }
    Observable z1 = oracle_observable(f1);
    Observable z2 = oracle_observable(f2);
    Observable z3 = oracle_observable(f3);

    InstanceOutcome out;
    SumResult s12 = sum_observables(z1, z2);
    bool comm = s12.observable == sum_observables(z2, z1).observable;
    c.require(comm, "sum not commutative");

    Observable s12_3 = sum_observables(s12.observable, z3).observable;
    Observable s1_23 = sum_observables(z1, sum_observables(z2, z3).observable).observable;
    bool assoc = s12_3 == s1_23;
    c.require(assoc, "sum not associative");

    Observable o = neutral_observable(z1.ctx(), z1.atoms().dim());
    bool neutral = sum_observables(s12.observable, o).observable == s12.observable;
    c.require(neutral, "neutral element law failed on a sum");

    bool marg = true;
    for (std::size_t i = 0; i < z1.atoms().dim(); ++i) {
      StepFn conv = convolve_sum(cumulative(marginal(z1, i)), cumulative(marginal(z2, i)));
      Observable expect = extend_observable(conv, ExtendMode::component_sum);
      marg = marg && marginal(s12.observable, i).mass() == expect.mass();
    }
    c.require(marg, "marginal homomorphism failed");

    out.all_ok = comm && assoc && neutral && marg;
    out.masses = support_map(s12.observable, c);
    outcomes.push_back(std::move(out));
  }
  return outcomes;
}

} // namespace

int main() {
  run(1, "worked example E1: extension, block units, mode agreement", 1.0, [](Checker& c) {
    StepFn f = fixtures::e1();
    Observable oracle = extend_observable(f, ExtendMode::oracle);
    const AtomSet& atoms = oracle.atoms();
    c.require(oracle.mass_at(atoms.point_factor(0, Rat(0))) == el(0, 1), "mass at {0}");
    c.require(oracle.mass_at(atoms.point_factor(0, Rat(2))) == el(1, -1), "mass at {2}");
    c.require(oracle.mass_at(0) == el(0, 0) && oracle.mass_at(2) == el(0, 0) &&
                  oracle.mass_at(4) == el(0, 0),
              "stray mass on open atoms");

    BlockUnits units = block_units(f);
    c.require(units.identity_ok && units.identity_value == el(1, 0), "block-unit identity");
    c.require(units.u_empty == el(1, -1), "u_empty");

    c.require(extend_observable(f, ExtendMode::component_sum) == oracle,
              "component-sum vs oracle");
    c.require(extend_observable(f, ExtendMode::projection_formula) == oracle,
              "projection formula vs oracle");
  });

  run(2, "worked example E2: meet joint of the counterexample data", 1.0, [](Checker& c) {
    StepFn fx = fixtures::fx_counterexample();
    StepFn fy = fixtures::fy_counterexample();
    JointResult joint = meet_joint({fx, fy});
    const AtomSet& atoms = joint.observable.atoms();
    auto mass = [&](long s, long t) {
      return joint.observable.mass_at(
          atoms.flat({atoms.point_factor(0, Rat(s)), atoms.point_factor(1, Rat(t))}));
    };
    c.require(mass(2, 1) == el(0, 3), "joint mass at {2}x{1}");
    c.require(mass(3, 1) == el(0, 1), "joint mass at {3}x{1}");
    c.require(mass(3, 5) == el(1, -4), "joint mass at {3}x{5}");
    c.require(joint.observable.total() == el(1, 0), "joint total");

    Observable mx = marginal(joint.observable, 0);
    Observable my = marginal(joint.observable, 1);
    c.require(mx.mass_at(mx.atoms().point_factor(0, Rat(2))) == el(0, 3), "x({2})");
    c.require(mx.mass_at(mx.atoms().point_factor(0, Rat(3))) == el(1, -3), "x({3})");
    c.require(my.mass_at(my.atoms().point_factor(0, Rat(1))) == el(0, 4), "y({1})");
    c.require(my.mass_at(my.atoms().point_factor(0, Rat(5))) == el(1, -4), "y({5})");

    // The meet-sum over the four point pairs reproduces the contradiction.
    LexElem x2 = el(0, 3), x3 = el(1, -3), y1 = el(0, 4), y5 = el(1, -4);
    LexElem meet_sum = inf(x2, y1) + inf(x2, y5) + inf(x3, y1) + inf(x3, y5);
    c.require(meet_sum == el(1, 6), "meet-sum value");
    c.require(!(meet_sum == el(1, 0)), "meet-sum must differ from the unit");

    c.require(extend_observable(fixtures::e2(), ExtendMode::oracle) == joint.observable,
              "joint equals the direct extension of E2");
  });

  run(3, "worked example E4: k = 2 staircase decomposition", 1.0, [](Checker& c) {
    StepFn f = fixtures::e4();
    StaircaseDecomposition dec = decompose_staircase(f);
    c.require(dec.components.size() == 5, "2*2+1 components");

    Observable comp = extend_observable(f, ExtendMode::component_sum);
    const AtomSet& atoms = comp.atoms();
    c.require(comp.mass_at(atoms.point_factor(0, Rat(0))) == el(0, 1), "mass at {0}");
    c.require(comp.mass_at(atoms.point_factor(0, Rat(1))) == el(1, 0), "mass at {1}");
    c.require(comp.mass_at(atoms.point_factor(0, Rat(3))) == el(1, -1), "mass at {3}");
    c.require(comp.total() == el(2, 0), "total (2,0)");
    c.require(comp == extend_observable(f, ExtendMode::oracle), "component-sum vs oracle");
  });

  run(4, "property suite: 200 random valid spectral resolutions", 60.0,
      [](Checker& c) { criterion4(c, false); });

  run(5, "property suite: 100 perfect instances, all routes and the case table", 60.0,
      [](Checker& c) { criterion5(c, false); });

  run(6, "semigroup suite: 50 random sum triples", 30.0,
      [](Checker& c) { criterion6(c, false); });

  run(7, "grid-refinement stability of criteria 4-6", 120.0, [](Checker& c) {
    Checker base;
    auto c4 = criterion4(base, false), c4r = criterion4(c, true);
    auto c5 = criterion5(base, false), c5r = criterion5(c, true);
    auto c6 = criterion6(base, false), c6r = criterion6(c, true);
    c.require(base.ok(), "baseline run failed: " + base.detail());
    auto compare = [&](const std::vector<InstanceOutcome>& a,
                       const std::vector<InstanceOutcome>& b, const char* which) {
      c.require(a.size() == b.size(), std::string(which) + ": instance count changed");
      for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        c.require(a[i].all_ok == b[i].all_ok, std::string(which) + ": verdict changed");
        c.require(a[i].masses == b[i].masses, std::string(which) + ": masses changed");
      }
    };
    compare(c4, c4r, "criterion 4");
    compare(c5, c5r, "criterion 5");
    compare(c6, c6r, "criterion 6");
  });

  if (g_failures == 0) {
    std::cout << "acceptance: all criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << g_failures << " criterion/criteria FAILED\n";
  return 1;
}
