#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lexspec/calculus.hpp"
#include "lexspec/errors.hpp"
#include "lexspec/extend.hpp"
#include "lexspec/generate.hpp"
#include "lexspec/io.hpp"

using nlohmann::json;
using namespace lexspec;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;

json mass_table(const Observable& x) {
  json t = json::array();
  for (std::size_t i = 0; i < x.atoms().count(); ++i) {
    if (x.mass_at(i) == LexElem::zero(static_cast<std::size_t>(x.ctx().m))) continue;
    t.push_back(json{{"atom", x.atoms().atom_str(i)}, {"mass", to_json(x.mass_at(i))}});
  }
  return t;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_validate(const std::string& path) {
  Instance inst = load_instance(path);
  ValidationReport rep = validate_spectral(inst.fn, inst.kind);
  emit(json{{"command", "validate"},
            {"file", path},
            {"kind", inst.kind == SrKind::spectral ? "spectral" : "pseudo"},
            {"conditions", to_json(rep)},
            {"ok", rep.ok()}});
  return rep.ok() ? kExitOk : kExitCheckFailed;
}

int cmd_charpoints(const std::string& path) {
  Instance inst = load_instance(path);
  CharPointReport rep = characteristic_points(inst.fn);
  json j = to_json(rep);
  j["command"] = "charpoints";
  j["file"] = path;
  emit(j);
  return kExitOk;
}

int cmd_decompose(const std::string& path, const std::string& out_prefix) {
  Instance inst = load_instance(path);
  ValidationReport rep = validate_spectral(inst.fn, inst.kind);
  if (!rep.ok()) {
    emit(json{{"command", "decompose"}, {"error", "input is not valid: " + rep.summary()}});
    return kExitCheckFailed;
  }
  StaircaseDecomposition dec = decompose_staircase(inst.fn);

  StepFn total = StepFn::constant(inst.fn.grid(), inst.fn.ctx(),
                                  LexElem::zero(static_cast<std::size_t>(inst.ctx.m)));
  for (const StepFn& c : dec.components) total = cellwise_add(total, c);
  bool sum_ok = total == inst.fn;

  json thresholds = json::array();
  for (const auto& ts : dec.thresholds) {
    json ax = json::array();
    for (const Rat& t : ts) ax.push_back(t.str());
    thresholds.push_back(std::move(ax));
  }
  json files = json::array();
  if (!out_prefix.empty()) {
    for (std::size_t i = 0; i < dec.components.size(); ++i) {
      std::string name = out_prefix + "_" + std::to_string(i) + ".sr";
      save_instance(Instance{inst.ctx, SrKind::pseudo, dec.components[i]}, name);
      files.push_back(name);
    }
  }
  emit(json{{"command", "decompose"},
            {"file", path},
            {"components", dec.components.size()},
            {"thresholds", std::move(thresholds)},
            {"sum_identity", sum_ok ? "exact" : "VIOLATED"},
            {"written", std::move(files)},
            {"ok", sum_ok}});
  return sum_ok ? kExitOk : kExitCheckFailed;
}

int cmd_extend(const std::string& path, const std::string& mode, const std::string& out) {
  Instance inst = load_instance(path);
  ValidationReport rep = validate_spectral(inst.fn, inst.kind);
  if (!rep.ok()) {
    emit(json{{"command", "extend"}, {"error", "input is not valid: " + rep.summary()}});
    return kExitCheckFailed;
  }

  std::vector<std::pair<std::string, ExtendMode>> runs;
  if (mode == "oracle") {
    runs = {{"oracle", ExtendMode::oracle}};
  } else if (mode == "component-sum") {
    runs = {{"component-sum", ExtendMode::component_sum}};
  } else if (mode == "projection-formula") {
    runs = {{"projection-formula", ExtendMode::projection_formula}};
  } else if (mode == "all") {
    runs = {{"oracle", ExtendMode::oracle}, {"component-sum", ExtendMode::component_sum}};
    if (inst.ctx.k == 1) runs.emplace_back("projection-formula", ExtendMode::projection_formula);
  } else {
    throw PreconditionError("unknown mode: " + mode);
  }

  json tables = json::object();
  std::vector<Observable> results;
  for (const auto& [name, m] : runs) {
    results.push_back(extend_observable(inst.fn, m));
    tables[name] = mass_table(results.back());
  }
  bool agree = true;
  for (std::size_t i = 1; i < results.size(); ++i) agree = agree && results[i] == results[0];

  // The extension must reproduce F on every decorated lower rectangle.
  bool extends = cumulative(results[0]) == inst.fn;

  if (!out.empty()) save_observable(results[0], out);
  emit(json{{"command", "extend"},
            {"file", path},
            {"modes", tables},
            {"mode_agreement", agree},
            {"extends_input", extends},
            {"ok", agree && extends}});
  return agree && extends ? kExitOk : kExitCheckFailed;
}

int cmd_oracle(const std::string& path, const std::string& out) {
  Instance inst = load_instance(path);
  Observable x = oracle_observable(inst.fn);
  if (!out.empty()) save_observable(x, out);
  emit(json{{"command", "oracle"},
            {"file", path},
            {"mass", mass_table(x)},
            {"total", to_json(x.total())}});
  return kExitOk;
}

int cmd_query(const std::string& path, const std::string& region_expr) {
  Observable x = load_observable(path);
  RegionSet region = parse_region(x.atoms(), region_expr);
  LexElem v = x.eval(region);
  emit(json{{"command", "query"},
            {"file", path},
            {"region", region_expr},
            {"value", to_json(v)}});
  return kExitOk;
}

int cmd_joint(const std::vector<std::string>& paths, const std::string& out) {
  std::vector<StepFn> factors;
  std::vector<Observable> factor_obs;
  for (const auto& p : paths) {
    Instance inst = load_instance(p);
    ValidationReport rep = validate_spectral(inst.fn, SrKind::spectral);
    if (!rep.ok()) {
      emit(json{{"command", "joint"}, {"error", p + " is not valid: " + rep.summary()}});
      return kExitCheckFailed;
    }
    factors.push_back(inst.fn);
    factor_obs.push_back(oracle_observable(inst.fn));
  }
  JointResult joint = meet_joint(factors);

  bool marginals_ok = true;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    marginals_ok = marginals_ok && marginal(joint.observable, i).mass() == factor_obs[i].mass();
  }

  if (!out.empty()) save_observable(joint.observable, out);
  emit(json{{"command", "joint"},
            {"mass", mass_table(joint.observable)},
            {"marginals_reproduce_factors", marginals_ok},
            {"ok", marginals_ok}});
  return marginals_ok ? kExitOk : kExitCheckFailed;
}

int cmd_sum(const std::string& p1, const std::string& p2, const std::string& out) {
  Observable z1 = load_observable(p1);
  Observable z2 = load_observable(p2);
  SumResult s = sum_observables(z1, z2);
  SumResult swapped = sum_observables(z2, z1);
  bool commutative = s.observable == swapped.observable;

  if (!out.empty()) save_observable(s.observable, out);
  json j{{"command", "sum"},
         {"mass", mass_table(s.observable)},
         {"commutative", commutative},
         {"ok", commutative}};
  if (!s.perfect) j["note"] = "k > 1: sum construction is an extension beyond the perfect case";
  emit(j);
  return commutative ? kExitOk : kExitCheckFailed;
}

int cmd_fuzz(std::size_t count, bool chain_only) {
  std::uint64_t seed = 0;
  if (const char* env = std::getenv("LEXSPEC_SEED")) seed = std::strtoull(env, nullptr, 10);
  std::mt19937_64 rng(seed);
  GenOptions opt;
  opt.chain_only = chain_only;

  std::size_t failures = 0;
  json cases = json::array();
  for (std::size_t i = 0; i < count; ++i) {
    StepFn f = random_spectral(rng, opt);
    ValidationReport rep = validate_spectral(f, SrKind::spectral);
    bool ok = rep.ok();
    std::string failed;
    if (ok) {
      Observable oracle = oracle_observable(f);
      Observable comp = extend_observable(f, ExtendMode::component_sum);
      if (!(comp == oracle)) {
        ok = false;
        failed = "component-sum disagrees with oracle";
      } else if (f.ctx().k == 1) {
        Observable proj = extend_observable(f, ExtendMode::projection_formula);
        if (!(proj == oracle)) {
          ok = false;
          failed = "projection formula disagrees with oracle";
        }
      }
      if (ok && !(cumulative(oracle) == f)) {
        ok = false;
        failed = "extension does not reproduce the input";
      }
      if (ok && !verify_uniqueness(f)) {
        ok = false;
        failed = "uniqueness system has a different solution";
      }
    } else {
      failed = rep.summary();
    }
    if (!ok) ++failures;
    cases.push_back(json{{"case", i}, {"ok", ok}, {"k", f.ctx().k}, {"n", f.dim()},
                         {"detail", failed}});
  }
  emit(json{{"command", "fuzz"},
            {"seed", seed},
            {"count", count},
            {"failures", failures},
            {"cases", cases},
            {"ok", failures == 0}});
  return failures == 0 ? kExitOk : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculus of n-dimensional spectral resolutions and observables on "
               "k-perfect MV-/effect algebras"};
  app.require_subcommand(1);

  std::string file, out, mode = "all", region;
  std::vector<std::string> files;
  std::size_t count = 20;
  bool chain_only = false;

  auto* validate = app.add_subcommand("validate", "Check the spectral-resolution axioms");
  validate->add_option("file", file)->required();

  auto* charpoints = app.add_subcommand("charpoints", "List characteristic points");
  charpoints->add_option("file", file)->required();

  auto* decompose = app.add_subcommand("decompose", "Chain decomposition into pseudo resolutions");
  decompose->add_option("file", file)->required();
  decompose->add_option("-o,--output", out, "Prefix for component files");

  auto* extend = app.add_subcommand("extend", "Extend to the unique observable");
  extend->add_option("file", file)->required();
  extend->add_option("--mode", mode, "oracle | component-sum | projection-formula | all");
  extend->add_option("-o,--output", out, "Observable output file");

  auto* oracle = app.add_subcommand("oracle", "Brute-force atom masses");
  oracle->add_option("file", file)->required();
  oracle->add_option("-o,--output", out, "Observable output file");

  auto* query = app.add_subcommand("query", "Evaluate an observable on a region");
  query->add_option("file", file)->required();
  query->add_option("--region", region)->required();

  auto* joint = app.add_subcommand("joint", "Meet joint of one-dimensional resolutions");
  joint->add_option("files", files)->required()->expected(-1);
  joint->add_option("-o,--output", out, "Observable output file");

  auto* sum = app.add_subcommand("sum", "Sum of two observables");
  sum->add_option("files", files)->required()->expected(2);
  sum->add_option("-o,--output", out, "Observable output file");

  auto* fuzz = app.add_subcommand("fuzz", "Random-instance property battery (seed: LEXSPEC_SEED)");
  fuzz->add_option("--count", count);
  fuzz->add_flag("--chain-only", chain_only, "Only ordering-property staircases");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(file);
    if (charpoints->parsed()) return cmd_charpoints(file);
    if (decompose->parsed()) return cmd_decompose(file, out);
    if (extend->parsed()) return cmd_extend(file, mode, out);
    if (oracle->parsed()) return cmd_oracle(file, out);
    if (query->parsed()) return cmd_query(file, region);
    if (joint->parsed()) return cmd_joint(files, out);
    if (sum->parsed()) return cmd_sum(files[0], files[1], out);
    if (fuzz->parsed()) return cmd_fuzz(count, chain_only);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return kExitOk;
}
