#include "confirm/confidence.hpp"

#include <cmath>
#include <stdexcept>

#include "confirm/normal.hpp"

namespace confirm {

ConfidenceRule::ConfidenceRule(double alpha, Constructor ctor)
    : level_alpha_(alpha), ctor_(std::move(ctor)) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("confidence level alpha must lie in (0, 1)");
}

ConfidenceRule ConfidenceRule::wald_normal(double alpha) {
    return ConfidenceRule(alpha, WaldNormalRule{});
}

ConfidenceRule ConfidenceRule::wald_binomial(double alpha) {
    return ConfidenceRule(alpha, WaldBinomialRule{});
}

ConfidenceRule ConfidenceRule::rigged(ConfidenceRule base, Evidence trigger,
                                      RegionSet payload) {
    const double alpha = base.level_alpha();
    RiggedRule r{std::make_shared<const ConfidenceRule>(std::move(base)),
                 std::move(trigger), std::move(payload)};
    return ConfidenceRule(alpha, std::move(r));
}

const ConfidenceRule& ConfidenceRule::base_rule() const {
    const ConfidenceRule* r = this;
    while (const auto* rig = std::get_if<RiggedRule>(&r->ctor_)) r = rig->base.get();
    return *r;
}

namespace {

double mean(const std::vector<double>& xs) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

RegionSet clipped_open_interval(const Interval& ambient, double lo, double hi) {
    return RegionSet::intervals(ambient, {Interval::open(lo, hi)});
}

RegionSet wald_normal_region(const ConfidenceRule& rule, const Evidence& e) {
    const auto* model = std::get_if<NormalKnownSigma>(&e.model);
    if (!model)
        throw std::invalid_argument("wald_normal rule requires normal-known-sigma evidence");
    const Interval ambient = model->ambient;
    if (e.n() == 0) return RegionSet::all(ambient);
    const double w =
        two_sided_z(rule.level_alpha()) * model->sigma / std::sqrt(static_cast<double>(e.n()));
    const double xbar = mean(e.observations);
    return clipped_open_interval(ambient, xbar - w, xbar + w);
}

RegionSet wald_binomial_region(const ConfidenceRule& rule, const Evidence& e) {
    const auto* model = std::get_if<BernoulliSequence>(&e.model);
    if (!model)
        throw std::invalid_argument("wald_binomial rule requires bernoulli evidence");
    const Interval ambient = Interval::closed(0.0, 1.0);
    const auto n = static_cast<double>(e.n());
    if (e.n() == 0) return RegionSet::all(ambient);
    const double z = two_sided_z(rule.level_alpha());
    const double phat = mean(e.observations);
    if (phat == 0.0 || phat == 1.0) {
        // Degenerate standard error. Widen the point into a half-open sliver
        // of width z*sqrt(1/(4n^2)) on the interior side so the region stays
        // open-valued relative to [0, 1].
        const double w = z / (2.0 * n);
        if (phat == 0.0)
            return RegionSet::intervals(
                ambient, {Interval(Endpoint::closed_at(0.0), Endpoint::open(std::min(w, 1.0)))});
        return RegionSet::intervals(
            ambient, {Interval(Endpoint::open(std::max(1.0 - w, 0.0)), Endpoint::closed_at(1.0))});
    }
    const double w = z * std::sqrt(phat * (1.0 - phat) / n);
    return clipped_open_interval(ambient, phat - w, phat + w);
}

}  // namespace

RegionSet region(const ConfidenceRule& rule, const Evidence& e) {
    if (const auto* rig = std::get_if<RiggedRule>(&rule.constructor())) {
        if (e == rig->trigger) {
            if (!(rig->payload.ambient() == model_ambient(e.model)))
                throw std::invalid_argument("rigged payload ambient differs from the model's");
            return rig->payload;
        }
        return region(*rig->base, e);
    }
    if (std::holds_alternative<WaldNormalRule>(rule.constructor()))
        return wald_normal_region(rule, e);
    return wald_binomial_region(rule, e);
}

bool is_non_refuting(const ConfidenceRule& rule, std::span<const Evidence> universe) {
    for (const Evidence& e : universe)
        if (region(rule, e).is_empty()) return false;
    return true;
}

EvidenceEnumerator enumerate_universe(std::vector<Evidence> universe) {
    auto state = std::make_shared<std::pair<std::vector<Evidence>, std::size_t>>(
        std::move(universe), 0);
    return [state]() -> std::optional<Evidence> {
        if (state->second >= state->first.size()) return std::nullopt;
        return state->first[state->second++];
    };
}

std::optional<Evidence> satisfies_precision(const ConfidenceRule& rule,
                                            const RegionSet& target,
                                            const EvidenceEnumerator& search) {
    if (!has_nonempty_interior(target))
        throw std::invalid_argument("precision target must have nonempty interior");
    while (auto e = search()) {
        const RegionSet r = region(rule, *e);
        if (!r.is_empty() && contains(target, r)) return e;
    }
    return std::nullopt;
}

Evidence wald_normal_precision_evidence(const ConfidenceRule& rule,
                                        const NormalKnownSigma& model,
                                        const RegionSet& target) {
    const RegionSet inner = interior(target);
    if (inner.is_empty())
        throw std::invalid_argument("precision target must have nonempty interior");
    if (!(inner.ambient() == model.ambient))
        throw std::invalid_argument("target ambient differs from the model's");

    // Pick the widest interior component; unbounded components give a free
    // unit radius around a point one unit inside.
    const Interval* best = nullptr;
    double best_width = -1.0;
    for (const Interval& p : inner.parts()) {
        const double width = p.hi().value - p.lo().value;  // may be inf
        if (width > best_width) {
            best_width = width;
            best = &p;
        }
    }
    double centre = 0.0;
    double radius = 1.0;
    const bool lo_inf = best->lo().is_infinite();
    const bool hi_inf = best->hi().is_infinite();
    if (!lo_inf && !hi_inf) {
        centre = 0.5 * (best->lo().value + best->hi().value);
        radius = 0.5 * (best->hi().value - best->lo().value);
    } else if (!lo_inf) {
        centre = best->lo().value + 1.0;
    } else if (!hi_inf) {
        centre = best->hi().value - 1.0;
    }

    const double z = two_sided_z(rule.level_alpha());
    const double ratio = z * model.sigma / radius;
    const auto n = static_cast<std::size_t>(std::ceil(ratio * ratio)) + 1;
    return make_evidence(make_model(model), std::vector<double>(n, centre));
}

ConfidenceRule rigged_table(ConfidenceRule base,
                            std::vector<std::pair<Evidence, RegionSet>> entries) {
    ConfidenceRule rule = std::move(base);
    for (auto& [trigger, payload] : entries)
        rule = ConfidenceRule::rigged(std::move(rule), std::move(trigger), std::move(payload));
    return rule;
}

}  // namespace confirm
