#ifndef LEXSPEC_IO_HPP
#define LEXSPEC_IO_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "lexspec/observable.hpp"
#include "lexspec/spectral.hpp"

namespace lexspec {

/** On-disk form of a step function: algebra context, kind, axes, cells.
    Rationals are strings ("p" or "p/q"); no floating-point literal ever
    appears in a file. */
struct Instance {
  MvContext ctx;
  SrKind kind = SrKind::spectral;
  StepFn fn;
};

nlohmann::json to_json(const LexElem& v);
LexElem lexelem_from_json(const nlohmann::json& j, std::size_t m);

nlohmann::json to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& j);
Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

nlohmann::json to_json(const Observable& x);
Observable observable_from_json(const nlohmann::json& j);
Observable load_observable(const std::string& path);
void save_observable(const Observable& x, const std::string& path);

nlohmann::json to_json(const ValidationReport& rep);
nlohmann::json to_json(const CharPointReport& rep);

/** Region expressions: products of factors (-inf,a), {a}, (a,b), (a,inf),
    (-inf,inf), factors joined with 'x', products joined with '|'. All
    endpoints must be grid breakpoints. */
RegionSet parse_region(const AtomSet& atoms, std::string_view expr);

} // namespace lexspec

#endif
