#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "lexspec/errors.hpp"
#include "lexspec/mvalgebra.hpp"

using namespace lexspec;
using fixtures::el;

namespace {

/** Random valid interval element for the given context. */
MvElem rand_mv(std::mt19937_64& rng, const MvContext& ctx) {
  std::uniform_int_distribution<int> hd(0, ctx.k);
  std::uniform_int_distribution<long> num(0, 6), den(1, 3), mid(-6, 6);
  int h = hd(rng);
  std::vector<Rat> g(static_cast<std::size_t>(ctx.m));
  for (auto& x : g) {
    if (h == 0) {
      x = Rat(num(rng), den(rng));
    } else if (h == ctx.k) {
      x = Rat(-num(rng), den(rng));
    } else {
      x = Rat(mid(rng), den(rng));
    }
  }
  return ctx.validate(LexElem(h, GVec(std::move(g))));
}

} // namespace

TEST_CASE("interval membership") {
  MvContext ctx{1, 1};
  CHECK_THROWS_AS(ctx.validate(el(0, -1)), OutOfIntervalError); // block 0 needs g >= 0
  CHECK_THROWS_AS(ctx.validate(el(1, 1)), OutOfIntervalError);  // top block needs g <= 0
  CHECK(ctx.validate(el(1, -3)).value() == el(1, -3));
  CHECK(ctx.validate(el(0, 3)).block() == 0);
  CHECK(ctx.validate(el(1, -3)).block() == 1);
  MvContext ctx2{2, 1};
  CHECK(ctx2.validate(el(1, 1)).block() == 1); // middle block takes any g
}

TEST_CASE("partial operations") {
  MvContext ctx{1, 1};
  CHECK(partial_add(ctx.validate(el(0, 3)), ctx.validate(el(1, -4))).value() == el(1, -1));
  CHECK_THROWS_AS(partial_add(ctx.validate(el(1, -1)), ctx.validate(el(1, -1))),
                  UndefinedOperationError);
  CHECK(partial_sub(ctx.validate(el(1, 0)), ctx.validate(el(0, 1))).value() == el(1, -1));
  CHECK_THROWS_AS(partial_sub(ctx.validate(el(0, 1)), ctx.validate(el(1, -1))),
                  UndefinedOperationError);
}

TEST_CASE("lattice operations from the counterexample data") {
  MvContext ctx{1, 1};
  CHECK(meet(ctx.validate(el(0, 3)), ctx.validate(el(0, 4))).value() == el(0, 3));
  CHECK(meet(ctx.validate(el(0, 3)), ctx.validate(el(1, -4))).value() == el(0, 3));
  CHECK(meet(ctx.validate(el(1, -3)), ctx.validate(el(1, -4))).value() == el(1, -4));
}

TEST_CASE("interval closure, distributivity, cancellation on random data") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    MvContext ctx{1 + it % 3, 1 + it % 2};
    MvElem a = rand_mv(rng, ctx), b = rand_mv(rng, ctx);

    // Closure: meet/join always defined, partial ops defined when in range.
    MvElem mj = meet(a, b), jj = join(a, b);
    CHECK(ctx.contains(mj.value()));
    CHECK(ctx.contains(jj.value()));
    if (leq(a.value() + b.value(), ctx.unit())) {
      MvElem s = partial_add(a, b);
      CHECK(ctx.contains(s.value()));
      CHECK(partial_sub(s, b) == a); // cancellation
    }

    // Finite distributive laws.
    std::size_t fam = 2 + static_cast<std::size_t>(it % 7);
    std::vector<MvElem> xs;
    for (std::size_t i = 0; i < fam; ++i) xs.push_back(rand_mv(rng, ctx));
    MvElem big = xs[0];
    for (std::size_t i = 1; i < fam; ++i) big = join(big, xs[i]);
    MvElem lhs = meet(a, big);
    MvElem rhs = meet(a, xs[0]);
    for (std::size_t i = 1; i < fam; ++i) rhs = join(rhs, meet(a, xs[i]));
    CHECK(lhs == rhs);

    MvElem small = xs[0];
    for (std::size_t i = 1; i < fam; ++i) small = meet(small, xs[i]);
    MvElem lhs2 = join(a, small);
    MvElem rhs2 = join(a, xs[0]);
    for (std::size_t i = 1; i < fam; ++i) rhs2 = meet(rhs2, join(a, xs[i]));
    CHECK(lhs2 == rhs2);
  }
}
