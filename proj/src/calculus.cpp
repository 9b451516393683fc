#include "lexspec/calculus.hpp"

#include <algorithm>

#include "lexspec/errors.hpp"

namespace lexspec {

namespace {

JointResult joint_core(const std::vector<StepFn>& factors) {
  if (factors.empty()) throw PreconditionError("meet joint needs at least one factor");
  MvContext ctx = factors[0].ctx();
  std::vector<std::vector<Rat>> axes;
  for (const StepFn& f : factors) {
    if (f.dim() != 1) throw DimensionError("meet joint factors must be one-dimensional");
    if (!(f.ctx() == ctx)) throw DimensionError("meet joint factors share one algebra context");
    axes.push_back(f.grid().axis(0));
  }
  Grid grid(std::move(axes));

  std::vector<LexElem> cells;
  cells.reserve(grid.total_cells());
  std::vector<std::size_t> idx(grid.dim(), 0);
  do {
    LexElem v = factors[0].cell(std::vector<std::size_t>{idx[0]});
    for (std::size_t i = 1; i < factors.size(); ++i) {
      v = inf(v, factors[i].cell(std::vector<std::size_t>{idx[i]}));
    }
    cells.push_back(std::move(v));
  } while (grid.next_cell(idx));
  StepFn joint(std::move(grid), ctx, std::move(cells));

  ValidationReport report = validate_spectral(joint, SrKind::spectral);
  if (!report.ok()) {
    throw PreconditionError("meet joint is not a valid spectral resolution: " + report.summary());
  }
  Observable obs = extend_observable(joint, ExtendMode::component_sum);
  return JointResult{std::move(joint), std::move(report), std::move(obs)};
}

} // namespace

JointResult meet_joint(const std::vector<StepFn>& factors) {
  for (const StepFn& f : factors) {
    if (f.ctx().k != 1) {
      throw PreconditionError("meet joint is stated for perfect algebras (k = 1), got k = " +
                              std::to_string(f.ctx().k));
    }
  }
  return joint_core(factors);
}

Observable marginal(const Observable& x, std::size_t axis) {
  const AtomSet& atoms = x.atoms();
  if (axis >= atoms.dim()) throw DimensionError("marginal axis out of range");
  Grid grid({atoms.grid().axis(axis)});
  AtomSet line(grid);
  std::vector<LexElem> mass(line.count(), LexElem::zero(static_cast<std::size_t>(x.ctx().m)));
  std::vector<std::size_t> idx(atoms.dim(), 0);
  std::size_t flat = 0;
  do {
    mass[idx[axis]] = mass[idx[axis]] + x.mass_at(flat);
    ++flat;
  } while (atoms.next_atom(idx));
  return Observable(std::move(line), x.ctx(), std::move(mass));
}

StepFn convolve_sum(const StepFn& fx, const StepFn& fy) {
  if (fx.dim() != 1 || fy.dim() != 1) {
    throw DimensionError("sum convolution works on one-dimensional resolutions");
  }
  if (!(fx.ctx() == fy.ctx())) throw DimensionError("sum convolution needs one algebra context");
  const auto& ax = fx.grid().axis(0);
  const auto& by = fy.grid().axis(0);

  std::vector<Rat> sums;
  sums.reserve(ax.size() * by.size());
  for (const Rat& a : ax)
    for (const Rat& b : by) sums.push_back(a + b);
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());

  auto value_at = [&](const Rat& t) {
    std::vector<Rat> cuts = ax;
    for (const Rat& b : by) cuts.push_back(t - b);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    auto fx_at = [&](const DecReal& d) { return fx.at(std::vector<DecReal>{d}); };
    auto fy_at = [&](const DecReal& d) { return fy.at(std::vector<DecReal>{d}); };

    // Lowest open piece r < cuts[0].
    LexElem best = inf(fx_at(DecReal::neg_inf()), fy_at(DecReal::after(t - cuts.front())));
    for (std::size_t s = 0; s < cuts.size(); ++s) {
      // The point r = cuts[s].
      best = sup(best, inf(fx_at(DecReal::at(cuts[s])), fy_at(DecReal::at(t - cuts[s]))));
      // The open piece above it.
      LexElem piece =
          s + 1 < cuts.size()
              ? inf(fx_at(DecReal::after(cuts[s])), fy_at(DecReal::after(t - cuts[s + 1])))
              : inf(fx_at(DecReal::after(cuts[s])), fy_at(DecReal::neg_inf()));
      best = sup(best, piece);
    }
    return best;
  };

  std::vector<LexElem> cells;
  cells.reserve(sums.size() + 1);
  for (const Rat& t : sums) cells.push_back(value_at(t));
  cells.push_back(inf(fx.top(), fy.top()));
  return StepFn(Grid({std::move(sums)}), fx.ctx(), std::move(cells));
}

SumResult sum_observables(const Observable& z1, const Observable& z2) {
  if (!(z1.ctx() == z2.ctx())) throw DimensionError("summands share one algebra context");
  if (z1.atoms().dim() != z2.atoms().dim()) {
    throw DimensionError("summands must have the same dimension");
  }
  std::size_t n = z1.atoms().dim();
  std::vector<StepFn> convolved;
  convolved.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    StepFn fx = cumulative(marginal(z1, i));
    StepFn fy = cumulative(marginal(z2, i));
    convolved.push_back(convolve_sum(fx, fy));
  }
  JointResult joint = joint_core(convolved);
  return SumResult{std::move(joint.observable), z1.ctx().k == 1};
}

Observable neutral_observable(MvContext ctx, std::size_t n) {
  std::vector<std::vector<Rat>> axes(n, std::vector<Rat>{Rat(0)});
  AtomSet atoms((Grid(std::move(axes))));
  std::vector<LexElem> mass(atoms.count(), LexElem::zero(static_cast<std::size_t>(ctx.m)));
  std::vector<std::size_t> idx(n, 1); // per-axis factor 1 is the point {0}
  mass[atoms.flat(idx)] = ctx.unit();
  return Observable(std::move(atoms), ctx, std::move(mass));
}

} // namespace lexspec
