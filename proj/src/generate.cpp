#include "lexspec/generate.hpp"

#include <algorithm>
#include <numeric>

#include "lexspec/atoms.hpp"
#include "lexspec/observable.hpp"

namespace lexspec {

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Rat small_rat(std::mt19937_64& rng, int num_lo, int num_hi, int den_hi) {
  long num = static_cast<long>(std::uniform_int_distribution<int>(num_lo, num_hi)(rng));
  long den = static_cast<long>(std::uniform_int_distribution<int>(1, den_hi)(rng));
  return Rat(num, den);
}

GVec nonneg_gvec(std::mt19937_64& rng, std::size_t m) {
  std::vector<Rat> e(m);
  for (auto& x : e) x = small_rat(rng, 0, 3, 3);
  return GVec(std::move(e));
}

GVec any_gvec(std::mt19937_64& rng, std::size_t m) {
  std::vector<Rat> e(m);
  for (auto& x : e) x = small_rat(rng, -2, 2, 2);
  return GVec(std::move(e));
}

} // namespace

StepFn random_spectral(std::mt19937_64& rng, const GenOptions& opt) {
  std::size_t n = pick(rng, opt.n_min, opt.n_max);
  int k = static_cast<int>(pick(rng, static_cast<std::size_t>(opt.k_min),
                                static_cast<std::size_t>(opt.k_max)));
  int m = static_cast<int>(pick(rng, static_cast<std::size_t>(opt.m_min),
                                static_cast<std::size_t>(opt.m_max)));
  MvContext ctx{k, m};

  // Breakpoints drawn without replacement from a fixed half-integer pool.
  std::vector<std::vector<Rat>> axes(n);
  for (auto& ax : axes) {
    std::vector<Rat> pool;
    for (int i = -8; i <= 12; ++i) pool.push_back(Rat(i, 2));
    std::shuffle(pool.begin(), pool.end(), rng);
    std::size_t count = pick(rng, 1, opt.max_breakpoints);
    ax.assign(pool.begin(), pool.begin() + static_cast<long>(count));
    std::sort(ax.begin(), ax.end());
  }
  Grid grid(axes);
  AtomSet atoms(grid);

  // Block jumps: J points with multiplicities summing to k.
  std::size_t jumps = pick(rng, 1, static_cast<std::size_t>(k));
  std::vector<int> mult(jumps, 1);
  for (int extra = k - static_cast<int>(jumps); extra > 0; --extra) ++mult[pick(rng, 0, jumps - 1)];

  bool chain = opt.chain_only || jumps == 1 || pick(rng, 0, 4) != 0;
  std::vector<std::vector<std::size_t>> jump_idx(jumps, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t prev = 0;
    for (std::size_t j = 0; j < jumps; ++j) {
      std::size_t lo = chain ? prev : 0;
      jump_idx[j][i] = pick(rng, lo, axes[i].size() - 1);
      prev = jump_idx[j][i];
    }
  }

  std::vector<LexElem> mass(atoms.count(), LexElem::zero(static_cast<std::size_t>(m)));

  // A few radial block-0 masses on breakpoint corners.
  std::size_t radial = pick(rng, 0, 4);
  for (std::size_t r = 0; r < radial; ++r) {
    std::vector<std::size_t> aidx(n);
    for (std::size_t i = 0; i < n; ++i) aidx[i] = 2 * pick(rng, 0, axes[i].size() - 1) + 1;
    std::size_t at = atoms.flat(aidx);
    mass[at] = mass[at] + LexElem(0, nonneg_gvec(rng, static_cast<std::size_t>(m)));
  }

  // Jump masses; the last one absorbs the group-part balance so the total
  // is exactly the unit. Its block is k only when it is the sole jump, in
  // which case the balance is <= 0 and stays inside the interval.
  GVec balance = GVec::zeros(static_cast<std::size_t>(m));
  for (const auto& lm : mass) balance = balance + lm.g;
  for (std::size_t j = 0; j + 1 < jumps; ++j) {
    std::vector<std::size_t> aidx(n);
    for (std::size_t i = 0; i < n; ++i) aidx[i] = 2 * jump_idx[j][i] + 1;
    LexElem jm(mult[j], any_gvec(rng, static_cast<std::size_t>(m)));
    std::size_t at = atoms.flat(aidx);
    mass[at] = mass[at] + jm;
    balance = balance + jm.g;
  }
  {
    std::vector<std::size_t> aidx(n);
    for (std::size_t i = 0; i < n; ++i) aidx[i] = 2 * jump_idx[jumps - 1][i] + 1;
    std::size_t at = atoms.flat(aidx);
    mass[at] = mass[at] + LexElem(mult[jumps - 1], -balance);
  }

  Observable assembled(atoms, ctx, std::move(mass));
  return cumulative(assembled);
}

} // namespace lexspec
