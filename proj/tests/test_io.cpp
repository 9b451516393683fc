#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "lexspec/errors.hpp"
#include "lexspec/extend.hpp"
#include "lexspec/generate.hpp"
#include "lexspec/io.hpp"

using namespace lexspec;
using fixtures::el;
using nlohmann::json;

TEST_CASE("instance serialization round-trips bit-exactly") {
  for (StepFn f : {fixtures::e1(), fixtures::e2(), fixtures::e4()}) {
    Instance inst{f.ctx(), SrKind::spectral, f};
    json j = to_json(inst);
    std::string text = j.dump(2);
    Instance back = instance_from_json(json::parse(text));
    CHECK(back.fn == f);
    CHECK(back.ctx == f.ctx());
    CHECK(back.kind == SrKind::spectral);
    // Deterministic output.
    CHECK(to_json(back).dump(2) == text);
  }
}

TEST_CASE("instance files with awkward rationals survive") {
  MvContext ctx{1, 2};
  Grid grid({{Rat(-7, 3), Rat(22, 7)}});
  StepFn f(grid, ctx,
           {LexElem(0, GVec({Rat(0), Rat(0)})), LexElem(0, GVec({Rat(5, 6), Rat(1, 9)})),
            LexElem(1, GVec({Rat(0), Rat(-13, 11)}))});
  Instance inst{ctx, SrKind::pseudo, f};
  Instance back = instance_from_json(to_json(inst));
  CHECK(back.fn == f);
  CHECK(back.kind == SrKind::pseudo);
}

TEST_CASE("floating-point literals and malformed cells are rejected") {
  json j = to_json(Instance{MvContext{1, 1}, SrKind::spectral, fixtures::e1()});
  j["cells"][0] = json::array({0, json::array({0.5})});
  CHECK_THROWS_AS(instance_from_json(j), ParseError);

  json j2 = to_json(Instance{MvContext{1, 1}, SrKind::spectral, fixtures::e1()});
  j2["cells"][0] = json::array({0, json::array({"1.5"})});
  CHECK_THROWS_AS(instance_from_json(j2), ParseError);

  json j3 = to_json(Instance{MvContext{1, 1}, SrKind::spectral, fixtures::e1()});
  j3["context"]["k"] = 0;
  CHECK_THROWS_AS(instance_from_json(j3), ParseError);

  // Out-of-interval cells are rejected at parse time with the bound named.
  json j4 = to_json(Instance{MvContext{1, 1}, SrKind::spectral, fixtures::e1()});
  j4["cells"][0] = json::array({0, json::array({"-1"})});
  CHECK_THROWS_AS(instance_from_json(j4), OutOfIntervalError);
}

TEST_CASE("observable serialization round-trips") {
  std::mt19937_64 rng(901);
  GenOptions opt;
  for (int it = 0; it < 20; ++it) {
    StepFn f = random_spectral(rng, opt);
    Observable x = oracle_observable(f);
    json j = to_json(x);
    Observable back = observable_from_json(j);
    CHECK(back == x);
    CHECK(to_json(back).dump() == j.dump());
  }
}

TEST_CASE("region grammar") {
  Observable x = oracle_observable(fixtures::e2());
  const AtomSet& atoms = x.atoms();

  CHECK(x.eval(parse_region(atoms, "{3}x{1}")) == el(0, 1));
  CHECK(x.eval(parse_region(atoms, "(-inf,3)x(-inf,inf)")) == el(0, 3));
  CHECK(x.eval(parse_region(atoms, "(2,inf)x(-inf,inf)")) == el(1, -3));
  CHECK(x.eval(parse_region(atoms, "(2,3)x{1}")) == el(0, 0));
  CHECK(x.eval(parse_region(atoms, "{2}x{1} | {3}x{5}")) == el(1, -1));
  // Overlapping unions count each atom once.
  CHECK(x.eval(parse_region(atoms, "{2}x{1} | {2}x{1}")) == el(0, 3));

  CHECK_THROWS_AS(parse_region(atoms, "{4}x{1}"), PreconditionError); // not a breakpoint
  CHECK_THROWS_AS(parse_region(atoms, "{3}"), ParseError);            // wrong arity
  CHECK_THROWS_AS(parse_region(atoms, "[2,3)x{1}"), ParseError);      // unknown factor
}

TEST_CASE("decorated point parsing used in reports") {
  CHECK(DecReal::parse("inf") == DecReal::pos_inf());
  CHECK(DecReal::parse("7/2+") == DecReal::after(Rat(7, 2)));
  CHECK_THROWS_AS(DecReal::parse("inf+"), UndefinedSymbolError);
}
