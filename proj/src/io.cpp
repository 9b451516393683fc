#include "lexspec/io.hpp"

#include <fstream>

#include "lexspec/errors.hpp"

namespace lexspec {

using nlohmann::json;

json to_json(const LexElem& v) {
  json g = json::array();
  for (std::size_t i = 0; i < v.g.size(); ++i) g.push_back(v.g[i].str());
  return json::array({v.h, g});
}

LexElem lexelem_from_json(const json& j, std::size_t m) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_array()) {
    throw ParseError("element must be [h, [g...]]: " + j.dump());
  }
  std::vector<Rat> g;
  for (const auto& e : j[1]) {
    if (!e.is_string()) throw ParseError("rationals serialize as strings: " + e.dump());
    g.push_back(Rat::parse(e.get<std::string>()));
  }
  if (g.size() != m) {
    throw ParseError("element has " + std::to_string(g.size()) + " group coordinates, expected " +
                     std::to_string(m));
  }
  return LexElem(j[0].get<std::int64_t>(), GVec(std::move(g)));
}

namespace {

json axes_to_json(const Grid& grid) {
  json axes = json::array();
  for (std::size_t i = 0; i < grid.dim(); ++i) {
    json ax = json::array();
    for (const Rat& b : grid.axis(i)) ax.push_back(b.str());
    axes.push_back(std::move(ax));
  }
  return axes;
}

Grid axes_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("axes must be an array of breakpoint arrays");
  std::vector<std::vector<Rat>> axes;
  for (const auto& ax : j) {
    if (!ax.is_array()) throw ParseError("axis must be an array of rational strings");
    std::vector<Rat> bs;
    for (const auto& b : ax) {
      if (!b.is_string()) throw ParseError("breakpoints serialize as strings");
      bs.push_back(Rat::parse(b.get<std::string>()));
    }
    axes.push_back(std::move(bs));
  }
  return Grid(std::move(axes));
}

json cells_to_json(const StepFn& fn, std::size_t axis, std::vector<std::size_t>& idx) {
  if (axis == fn.dim()) return to_json(fn.cell(idx));
  json arr = json::array();
  for (std::size_t c = 0; c < fn.grid().cell_count(axis); ++c) {
    idx[axis] = c;
    arr.push_back(cells_to_json(fn, axis + 1, idx));
  }
  return arr;
}

void cells_from_json(const json& j, const Grid& grid, std::size_t m, std::size_t axis,
                     std::vector<std::size_t>& idx, std::vector<LexElem>& cells) {
  if (axis == grid.dim()) {
    cells[grid.flat(idx)] = lexelem_from_json(j, m);
    return;
  }
  if (!j.is_array() || j.size() != grid.cell_count(axis)) {
    throw ParseError("cell array along axis " + std::to_string(axis) + " must have " +
                     std::to_string(grid.cell_count(axis)) + " entries");
  }
  for (std::size_t c = 0; c < j.size(); ++c) {
    idx[axis] = c;
    cells_from_json(j[c], grid, m, axis + 1, idx, cells);
  }
}

MvContext ctx_from_json(const json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("m")) {
    throw ParseError("context must be {\"k\": int, \"m\": int}");
  }
  MvContext ctx{j.at("k").get<int>(), j.at("m").get<int>()};
  if (ctx.k < 1 || ctx.m < 1) throw ParseError("context requires k >= 1 and m >= 1");
  return ctx;
}

json ctx_to_json(const MvContext& ctx) { return json{{"k", ctx.k}, {"m", ctx.m}}; }

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return j;
}

void write_file(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out << j.dump(2) << "\n";
}

} // namespace

json to_json(const Instance& inst) {
  std::vector<std::size_t> idx(inst.fn.dim(), 0);
  return json{{"context", ctx_to_json(inst.ctx)},
              {"kind", inst.kind == SrKind::spectral ? "spectral" : "pseudo"},
              {"axes", axes_to_json(inst.fn.grid())},
              {"cells", cells_to_json(inst.fn, 0, idx)}};
}

Instance instance_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("instance file must hold an object");
  MvContext ctx = ctx_from_json(j.at("context"));
  std::string kind = j.value("kind", "spectral");
  if (kind != "spectral" && kind != "pseudo") {
    throw ParseError("kind must be \"spectral\" or \"pseudo\"");
  }
  Grid grid = axes_from_json(j.at("axes"));
  if (grid.dim() == 0) throw ParseError("instance needs at least one axis");
  std::vector<LexElem> cells(grid.total_cells(), LexElem::zero(static_cast<std::size_t>(ctx.m)));
  std::vector<std::size_t> idx(grid.dim(), 0);
  cells_from_json(j.at("cells"), grid, static_cast<std::size_t>(ctx.m), 0, idx, cells);
  StepFn fn(std::move(grid), ctx, std::move(cells));
  // Cells must be elements of the interval algebra; which bound fails is
  // part of the message.
  std::vector<std::size_t> ci(fn.dim(), 0);
  do {
    ctx.validate(fn.cell(ci));
  } while (fn.grid().next_cell(ci));
  return Instance{ctx, kind == "spectral" ? SrKind::spectral : SrKind::pseudo, std::move(fn)};
}

Instance load_instance(const std::string& path) { return instance_from_json(read_file(path)); }

void save_instance(const Instance& inst, const std::string& path) {
  write_file(to_json(inst), path);
}

namespace {

json factor_to_json(const AtomFactor& f) {
  switch (f.kind) {
    case FactorKind::lower: return json{{"kind", "lower"}, {"hi", f.hi.str()}};
    case FactorKind::point: return json{{"kind", "point"}, {"at", f.lo.str()}};
    case FactorKind::open: return json{{"kind", "open"}, {"lo", f.lo.str()}, {"hi", f.hi.str()}};
    case FactorKind::upper: return json{{"kind", "upper"}, {"lo", f.lo.str()}};
    case FactorKind::all: return json{{"kind", "all"}};
  }
  throw ParseError("unknown factor kind");
}

AtomFactor factor_from_json(const json& j) {
  AtomFactor f;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "lower") {
    f.kind = FactorKind::lower;
    f.hi = Rat::parse(j.at("hi").get<std::string>());
  } else if (kind == "point") {
    f.kind = FactorKind::point;
    f.lo = Rat::parse(j.at("at").get<std::string>());
  } else if (kind == "open") {
    f.kind = FactorKind::open;
    f.lo = Rat::parse(j.at("lo").get<std::string>());
    f.hi = Rat::parse(j.at("hi").get<std::string>());
  } else if (kind == "upper") {
    f.kind = FactorKind::upper;
    f.lo = Rat::parse(j.at("lo").get<std::string>());
  } else if (kind == "all") {
    f.kind = FactorKind::all;
  } else {
    throw ParseError("unknown factor kind: " + kind);
  }
  return f;
}

} // namespace

json to_json(const Observable& x) {
  json atoms = json::array();
  json mass = json::array();
  for (std::size_t i = 0; i < x.atoms().count(); ++i) {
    if (x.mass_at(i) == LexElem::zero(static_cast<std::size_t>(x.ctx().m))) continue;
    json fs = json::array();
    for (const AtomFactor& f : x.atoms().atom(i)) fs.push_back(factor_to_json(f));
    atoms.push_back(std::move(fs));
    mass.push_back(to_json(x.mass_at(i)));
  }
  return json{{"context", ctx_to_json(x.ctx())},
              {"axes", axes_to_json(x.atoms().grid())},
              {"atoms", std::move(atoms)},
              {"mass", std::move(mass)}};
}

Observable observable_from_json(const json& j) {
  MvContext ctx = ctx_from_json(j.at("context"));
  Grid grid = axes_from_json(j.at("axes"));
  AtomSet atoms(std::move(grid));
  const json& ja = j.at("atoms");
  const json& jm = j.at("mass");
  if (!ja.is_array() || !jm.is_array() || ja.size() != jm.size()) {
    throw ParseError("atoms and mass must be parallel arrays");
  }
  std::vector<LexElem> mass(atoms.count(), LexElem::zero(static_cast<std::size_t>(ctx.m)));
  for (std::size_t i = 0; i < ja.size(); ++i) {
    std::vector<AtomFactor> fs;
    for (const auto& f : ja[i]) fs.push_back(factor_from_json(f));
    std::size_t idx = atoms.index_of(fs);
    mass[idx] = mass[idx] + lexelem_from_json(jm[i], static_cast<std::size_t>(ctx.m));
  }
  return Observable(std::move(atoms), ctx, std::move(mass));
}

Observable load_observable(const std::string& path) {
  return observable_from_json(read_file(path));
}

void save_observable(const Observable& x, const std::string& path) {
  write_file(to_json(x), path);
}

json to_json(const ValidationReport& rep) {
  json arr = json::array();
  for (const auto& c : rep.conditions) {
    json e{{"condition", c.condition}, {"status", c.pass ? "pass" : "fail"}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    if (!c.witness.empty()) e["witness"] = c.witness;
    arr.push_back(std::move(e));
  }
  return arr;
}

json to_json(const CharPointReport& rep) {
  json pts = json::array();
  for (const auto& p : rep.points) {
    json coords = json::array();
    for (const Rat& c : p.point) coords.push_back(c.str());
    pts.push_back(json{{"block", p.block}, {"point", std::move(coords)}});
  }
  json j{{"points", std::move(pts)}, {"ordering_property", ordering_property(rep.points)}};
  if (!rep.irregular_blocks.empty()) j["irregular_blocks"] = rep.irregular_blocks;
  return j;
}

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(' || s[i] == '{') ++depth;
    if (s[i] == ')' || s[i] == '}') --depth;
    if (s[i] == sep && depth == 0) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(s.substr(start));
  return parts;
}

/** Atom factor indices covered by one textual factor on one axis. */
std::vector<std::size_t> factor_indices(const AtomSet& atoms, std::size_t axis,
                                        std::string_view text) {
  text = strip(text);
  if (text.size() < 3) throw ParseError("malformed region factor: " + std::string(text));
  std::vector<std::size_t> out;
  if (text.front() == '{') {
    if (text.back() != '}') throw ParseError("malformed region factor: " + std::string(text));
    Rat a = Rat::parse(strip(text.substr(1, text.size() - 2)));
    out.push_back(atoms.point_factor(axis, a));
    return out;
  }
  if (text.front() != '(' || text.back() != ')') {
    throw ParseError("malformed region factor: " + std::string(text));
  }
  auto inner = split(text.substr(1, text.size() - 2), ',');
  if (inner.size() != 2) throw ParseError("malformed region factor: " + std::string(text));
  std::string_view lo = strip(inner[0]), hi = strip(inner[1]);
  std::size_t from, to; // factor index range [from, to)
  if (lo == "-inf") {
    from = 0;
  } else {
    from = atoms.factors_below(axis, DecReal::after(Rat::parse(lo)));
  }
  if (hi == "inf" || hi == "+inf") {
    to = atoms.factor_count(axis);
  } else {
    to = atoms.factors_below(axis, DecReal::at(Rat::parse(hi)));
  }
  if (from >= to) throw ParseError("empty region factor: " + std::string(text));
  for (std::size_t j = from; j < to; ++j) out.push_back(j);
  return out;
}

} // namespace

RegionSet parse_region(const AtomSet& atoms, std::string_view expr) {
  RegionSet region(atoms.count());
  for (std::string_view product : split(expr, '|')) {
    auto factors = split(product, 'x');
    if (factors.size() != atoms.dim()) {
      throw ParseError("region product has " + std::to_string(factors.size()) +
                       " factors, observable has " + std::to_string(atoms.dim()) + " axes");
    }
    std::vector<std::vector<std::size_t>> choices;
    for (std::size_t i = 0; i < atoms.dim(); ++i) {
      choices.push_back(factor_indices(atoms, i, factors[i]));
    }
    std::vector<std::size_t> pick(atoms.dim(), 0);
    while (true) {
      std::vector<std::size_t> idx(atoms.dim());
      for (std::size_t i = 0; i < atoms.dim(); ++i) idx[i] = choices[i][pick[i]];
      region.add(atoms.flat(idx));
      std::size_t i = atoms.dim();
      bool done = true;
      while (i-- > 0) {
        if (++pick[i] < choices[i].size()) {
          done = false;
          break;
        }
        pick[i] = 0;
      }
      if (done) break;
    }
  }
  return region;
}

} // namespace lexspec
