#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "lexspec/errors.hpp"
#include "lexspec/lexgroup.hpp"

using namespace lexspec;
using fixtures::el;

namespace {

Rat rand_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-12, 12), den(1, 4);
  return Rat(num(rng), den(rng));
}

LexElem rand_elem(std::mt19937_64& rng, std::size_t m) {
  std::uniform_int_distribution<std::int64_t> h(-3, 3);
  std::vector<Rat> g(m);
  for (auto& x : g) x = rand_rat(rng);
  return LexElem(h(rng), GVec(std::move(g)));
}

} // namespace

TEST_CASE("rationals stay canonical and parse round-trips") {
  CHECK(Rat(2, 4).str() == "1/2");
  CHECK(Rat(-3, -6).str() == "1/2");
  CHECK(Rat(3, -6).str() == "-1/2");
  CHECK(Rat(5, 1).str() == "5");
  CHECK(Rat::parse("7/3") == Rat(7, 3));
  CHECK(Rat::parse("-4") == Rat(-4));
  CHECK_THROWS_AS(Rat::parse("1.5"), ParseError);
  CHECK_THROWS_AS(Rat::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rat::parse(""), ParseError);
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
}

TEST_CASE("lexicographic comparison") {
  CHECK(compare(el(0, 1), el(1, -5)) == Cmp::less);
  CHECK(compare(el(0, {1, 2}), el(0, {2, 1})) == Cmp::incomparable);
  CHECK(compare(el(1, 3), el(1, 3)) == Cmp::equal);
  CHECK(compare(el(2, -7), el(1, 100)) == Cmp::greater);
  CHECK_THROWS_AS(compare(el(0, {1, 2}), el(0, {1})), DimensionError);
}

TEST_CASE("lattice operations") {
  CHECK(sup(el(0, {1, 0}), el(0, {0, 1})) == el(0, {1, 1}));
  CHECK(sup(el(0, 5), el(1, -7)) == el(1, -7));
  CHECK(inf(el(1, 2), el(1, 5)) == el(1, 2));
  CHECK(inf(el(0, {1, 0}), el(0, {0, 1})) == el(0, {0, 0}));
}

TEST_CASE("group arithmetic") {
  CHECK(el(0, 1) + el(1, -2) == el(1, -1));
  CHECK(-el(1, -1) == el(-1, 1));
  LexElem a(1, GVec({Rat(1, 2)})), b(1, GVec({Rat(1, 3)}));
  CHECK(a + b == LexElem(2, GVec({Rat(5, 6)})));
}

TEST_CASE("lattice laws on random triples") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 300; ++it) {
    std::size_t m = 1 + (it % 2);
    LexElem a = rand_elem(rng, m), b = rand_elem(rng, m), c = rand_elem(rng, m);

    CHECK(sup(a, b) == sup(b, a));
    CHECK(inf(a, b) == inf(b, a));
    CHECK(sup(a, sup(b, c)) == sup(sup(a, b), c));
    CHECK(inf(a, inf(b, c)) == inf(inf(a, b), c));
    CHECK(sup(a, a) == a);
    CHECK(sup(a, inf(a, b)) == a);
    CHECK(inf(a, sup(a, b)) == a);

    // Least upper bound / greatest lower bound against the order.
    LexElem s = sup(a, b);
    CHECK(leq(a, s));
    CHECK(leq(b, s));
    CHECK(leq(inf(a, b), a));
    CHECK(leq(inf(a, b), b));
    LexElem u = sup(s, c); // any upper bound of a and b dominates s
    CHECK(leq(s, u));

    // Translation invariance.
    CHECK(c + sup(a, b) == sup(c + a, c + b));
    CHECK(c + inf(a, b) == inf(c + a, c + b));

    // Exactness.
    CHECK((a + b) - b == a);
  }
}
