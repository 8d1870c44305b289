#include "confirm/json_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace confirm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

}  // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Json to_json(const Endpoint& e) {
    Json j;
    if (e.value == -kInf)
        j["value"] = "-inf";
    else if (e.value == kInf)
        j["value"] = "inf";
    else
        j["value"] = e.value;
    j["closed"] = e.closed;
    return j;
}

Endpoint endpoint_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("value") || !j.contains("closed"))
        bad("endpoint needs {value, closed}");
    double v = 0.0;
    const Json& jv = j.at("value");
    if (jv.is_string()) {
        const std::string s = jv.get<std::string>();
        if (s == "-inf" || s == "−inf")
            v = -kInf;
        else if (s == "inf" || s == "+inf")
            v = kInf;
        else
            bad("endpoint value string must be one of inf, +inf, -inf");
    } else if (jv.is_number()) {
        v = jv.get<double>();
    } else {
        bad("endpoint value must be a number or an infinity string");
    }
    return make_endpoint(v, j.at("closed").get<bool>());
}

Json to_json(const Interval& iv) {
    return Json{{"lo", to_json(iv.lo())}, {"hi", to_json(iv.hi())}};
}

Interval interval_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("lo") || !j.contains("hi"))
        bad("interval needs {lo, hi}");
    return Interval(endpoint_from_json(j.at("lo")), endpoint_from_json(j.at("hi")));
}

Json to_json(const RegionSet& r) {
    Json j;
    j["ambient"] = to_json(r.ambient());
    if (r.kind() == RegionKind::DenseCodense) {
        j["kind"] = "dense_codense";
        j["intervals"] = Json::array();
    } else {
        j["kind"] = "intervals";
        Json parts = Json::array();
        for (const Interval& p : r.parts()) parts.push_back(to_json(p));
        j["intervals"] = parts;
    }
    return j;
}

RegionSet region_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind")) bad("region needs {ambient, kind, intervals}");
    const Interval ambient = j.contains("ambient") ? interval_from_json(j.at("ambient"))
                                                   : Interval::real_line();
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "dense_codense") return RegionSet::dense_codense(ambient);
    if (kind != "intervals") bad("region kind must be intervals or dense_codense");
    std::vector<Interval> parts;
    for (const Json& p : j.value("intervals", Json::array()))
        parts.push_back(interval_from_json(p));
    return RegionSet::intervals(ambient, std::move(parts));
}

RuleDescriptor rule_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("constructor")) bad("rule needs a constructor");
    const std::string ctor = j.at("constructor").get<std::string>();
    if (ctor == "wald_normal") {
        const double alpha = j.at("alpha").get<double>();
        NormalKnownSigma model;
        model.sigma = j.at("sigma").get<double>();
        if (j.contains("ambient")) model.ambient = interval_from_json(j.at("ambient"));
        return RuleDescriptor{ConfidenceRule::wald_normal(alpha), make_model(model)};
    }
    if (ctor == "wald_binomial") {
        const double alpha = j.at("alpha").get<double>();
        BernoulliSequence model{j.at("horizon").get<int>()};
        return RuleDescriptor{ConfidenceRule::wald_binomial(alpha), make_model(model)};
    }
    if (ctor == "rigged") {
        RuleDescriptor base = rule_from_json(j.at("base"));
        const Json& jt = j.at("trigger");
        Evidence trigger = [&] {
            const auto* bern = std::get_if<BernoulliSequence>(&base.model);
            if (jt.is_string()) {
                if (!bern) bad("bit-string triggers need a bernoulli base rule");
                return bits_evidence(*bern, jt.get<std::string>());
            }
            return make_evidence(base.model, observations_from_json(jt));
        }();
        RegionSet payload = region_from_json(j.at("payload"));
        if (!(payload.ambient() == model_ambient(base.model)))
            bad("rigged payload ambient differs from the base model's");
        return RuleDescriptor{
            ConfidenceRule::rigged(std::move(base.rule), std::move(trigger), std::move(payload)),
            base.model};
    }
    bad("unknown rule constructor: " + ctor);
}

namespace {

Json constructor_to_json(const ConfidenceRule& rule, const SamplingModel& model) {
    Json j;
    if (std::holds_alternative<WaldNormalRule>(rule.constructor())) {
        const auto& m = std::get<NormalKnownSigma>(model);
        j["constructor"] = "wald_normal";
        j["alpha"] = rule.level_alpha();
        j["sigma"] = m.sigma;
        j["ambient"] = to_json(m.ambient);
    } else if (std::holds_alternative<WaldBinomialRule>(rule.constructor())) {
        j["constructor"] = "wald_binomial";
        j["alpha"] = rule.level_alpha();
        j["horizon"] = std::get<BernoulliSequence>(model).horizon;
    } else {
        const auto& rig = std::get<RiggedRule>(rule.constructor());
        j["constructor"] = "rigged";
        j["base"] = constructor_to_json(*rig.base, model);
        j["trigger"] = rig.trigger.observations;
        j["payload"] = to_json(rig.payload);
    }
    return j;
}

}  // namespace

Json to_json(const RuleDescriptor& d) { return constructor_to_json(d.rule, d.model); }

std::vector<double> observations_from_json(const Json& j) {
    if (!j.is_array()) bad("evidence must be a JSON array of numbers");
    std::vector<double> out;
    out.reserve(j.size());
    for (const Json& v : j) {
        if (!v.is_number()) bad("evidence must be a JSON array of numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

Json to_json(const Verdict& v, double alpha) {
    return Json{{"outcome", std::string(to_string(v.outcome))},
                {"region", to_json(v.region)},
                {"alpha", alpha}};
}

Json to_json(const DValueReport& r) {
    Json per = Json::array();
    for (const DValuePoint& p : r.per_theta)
        per.push_back(Json{{"theta", p.theta},
                           {"in_h0", p.in_h0},
                           {"decisive_error_prob", p.decisive_error_prob}});
    Json j{{"d_value", r.d_value},
           {"alpha", r.alpha},
           {"n", r.n},
           {"method", r.method == PowerMethod::ClosedForm ? "closed_form" : "monte_carlo"},
           {"per_theta", per}};
    if (r.method == PowerMethod::MonteCarlo) {
        j["reps"] = r.reps;
        j["seed"] = r.seed;
    }
    return j;
}

Json to_json(const RiggedDemo& d) {
    Json coverage = Json::array();
    for (std::size_t i = 0; i < d.theta_grid.size(); ++i)
        coverage.push_back(Json{{"theta", d.theta_grid[i]},
                                {"base", d.base_coverage[i]},
                                {"rigged", d.rigged_coverage[i]}});
    return Json{{"base_alpha", d.base_alpha},
                {"trigger", d.trigger.observations},
                {"payload", to_json(d.payload)},
                {"sup_trigger_prob", d.sup_trigger_prob},
                {"argmax_theta", d.argmax_theta},
                {"rigged_level_bound", d.rigged_level_bound},
                {"coverage", coverage}};
}

Json to_json(const AdequacyResult& r, double alpha) {
    return Json{{"verdict", to_json(r.verdict, alpha)},
                {"loss_statistic_region", to_json(r.loss_statistic_region)},
                {"h_tau", to_json(r.h_tau)},
                {"mean_loss", r.mean_loss},
                {"sd_loss", r.sd_loss},
                {"n", r.n},
                {"severe_test_passed", r.verdict.outcome == Outcome::ConfirmNull}};
}

std::vector<double> parse_grid(const std::string& spec) {
    const auto c1 = spec.find(':');
    const auto c2 = spec.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        bad("grid must be a:b:k, e.g. -1:1:41");
    const auto parse_num = [&](const std::string& s) -> double {
        double v = 0.0;
        const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || end != s.data() + s.size())
            bad("bad number in grid spec: " + s);
        return v;
    };
    const double a = parse_num(spec.substr(0, c1));
    const double b = parse_num(spec.substr(c1 + 1, c2 - c1 - 1));
    const double kd = parse_num(spec.substr(c2 + 1));
    const auto k = static_cast<long>(kd);
    if (kd != static_cast<double>(k) || k < 1) bad("grid count must be a positive integer");
    if (k == 1) {
        if (a != b) bad("a 1-point grid needs a == b");
        return {a};
    }
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(k));
    for (long i = 0; i < k; ++i)
        out.push_back(a + (b - a) * static_cast<double>(i) / static_cast<double>(k - 1));
    return out;
}

std::vector<double> grid_from_json(const Json& j) {
    if (j.is_string()) return parse_grid(j.get<std::string>());
    if (j.is_array()) return observations_from_json(j);
    bad("grid must be an a:b:k string or an array of numbers");
}

namespace {

struct SExprParser {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    std::string next_token() {
        skip_ws();
        if (pos >= text.size()) bad("unexpected end of formula");
        const char c = text[pos];
        if (c == '(' || c == ')') {
            ++pos;
            return std::string(1, c);
        }
        const std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
               text[pos] != '(' && text[pos] != ')')
            ++pos;
        return text.substr(start, pos - start);
    }

    FormulaPtr parse(const std::map<std::string, RegionSet>& bindings) {
        if (next_token() != "(") bad("formula must start with (");
        std::string op = next_token();
        for (char& c : op) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));

        if (op == "atom") {
            const std::string name = next_token();
            if (next_token() != ")") bad("atom takes exactly one name");
            const auto it = bindings.find(name);
            if (it == bindings.end()) bad("unbound atom name: " + name);
            return Formula::atom(it->second);
        }

        std::vector<FormulaPtr> args;
        for (;;) {
            skip_ws();
            if (pos < text.size() && text[pos] == ')') {
                ++pos;
                break;
            }
            args.push_back(parse(bindings));
        }

        const auto unary = [&](FormulaPtr (*make)(FormulaPtr)) {
            if (args.size() != 1) bad(op + " takes exactly one subformula");
            return make(std::move(args[0]));
        };
        if (op == "not") return unary(&Formula::negation);
        if (op == "boxc") return unary(&Formula::box_c);
        if (op == "diamondc") return unary(&Formula::diamond_c);
        if (op == "boxe") return unary(&Formula::box_e);
        if (op == "diamonde") return unary(&Formula::diamond_e);
        if (op == "and") return Formula::conjunction(std::move(args));
        if (op == "or") return Formula::disjunction(std::move(args));
        bad("unknown formula operator: " + op);
    }
};

}  // namespace

FormulaPtr parse_formula(const std::string& text,
                         const std::map<std::string, RegionSet>& bindings) {
    SExprParser p{text};
    FormulaPtr f = p.parse(bindings);
    p.skip_ws();
    if (p.pos != text.size()) bad("trailing characters after formula");
    return f;
}

Frame frame_from_json(const Json& j) {
    if (!j.is_object()) bad("frame must be a JSON object");
    const std::vector<double> grid = grid_from_json(j.at("grid"));
    const std::vector<double> alphabet = observations_from_json(j.at("alphabet"));
    const int horizon = j.at("horizon").get<int>();
    RuleDescriptor rd = rule_from_json(j.at("rule"));
    return Frame(grid, alphabet, horizon, std::move(rd.rule), std::move(rd.model));
}

}  // namespace confirm
