#pragma once

// Wire formats: JSON encodings of regions, rules, evidence and results, the
// a:b:k grid syntax, and the s-expression formula syntax used by the CLI.
// Region round-trips are bit-exact (finite endpoint values are emitted with
// enough digits to reparse to the same double; infinities are the strings
// "-inf"/"inf").

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "confirm/confidence.hpp"
#include "confirm/evidence.hpp"
#include "confirm/kripke.hpp"
#include "confirm/power.hpp"
#include "confirm/region.hpp"
#include "confirm/rigged.hpp"
#include "confirm/severity.hpp"
#include "confirm/verdict.hpp"

namespace confirm {

using Json = nlohmann::json;

Json to_json(const Endpoint& e);
Json to_json(const Interval& iv);
Json to_json(const RegionSet& r);
Endpoint endpoint_from_json(const Json& j);
Interval interval_from_json(const Json& j);
RegionSet region_from_json(const Json& j);

// A rule descriptor carries both the rule and the sampling model it runs
// against: {"constructor": "wald_normal", "alpha": 0.05, "sigma": 1.0,
// "ambient": {...}?} or {"constructor": "wald_binomial", "alpha": ...,
// "horizon": 7} or {"constructor": "rigged", "base": {...},
// "trigger": [...]|"1011000", "payload": {...}}.
struct RuleDescriptor {
    ConfidenceRule rule;
    SamplingModel model;
};

RuleDescriptor rule_from_json(const Json& j);
Json to_json(const RuleDescriptor& d);

// Evidence files are bare JSON arrays; the model comes from the rule.
std::vector<double> observations_from_json(const Json& j);

Json to_json(const Verdict& v, double alpha);
Json to_json(const DValueReport& r);
Json to_json(const RiggedDemo& d);
Json to_json(const AdequacyResult& r, double alpha);

// "a:b:k" -> k evenly spaced points from a to b inclusive (k >= 2, or k = 1
// with a == b). Also accepts a JSON array of numbers.
std::vector<double> parse_grid(const std::string& spec);
std::vector<double> grid_from_json(const Json& j);

// Formula s-expressions: (atom NAME), (not f), (and f g ...), (or f g ...),
// (boxc f), (diamondc f), (boxe f), (diamonde f). Atom names resolve
// through the bindings map.
FormulaPtr parse_formula(const std::string& text,
                         const std::map<std::string, RegionSet>& bindings);

// Frame descriptor: {"grid": "0:1:21"|[...], "alphabet": [0,1],
// "horizon": 6, "rule": {...}}.
Frame frame_from_json(const Json& j);

std::string format_double(double v);  // 17 significant digits

}  // namespace confirm
