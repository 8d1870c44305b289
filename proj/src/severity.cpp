#include "confirm/severity.hpp"

#include <cmath>
#include <stdexcept>

#include "confirm/power.hpp"
#include "confirm/rng.hpp"

namespace confirm {

AdequacyResult test_adequacy(const TheorySpec& spec, std::span<const double> inputs,
                             std::span<const double> actuals, const ConfidenceRule& rule) {
    if (inputs.size() != actuals.size())
        throw std::invalid_argument("inputs and actuals must have the same length");
    if (inputs.empty()) throw std::invalid_argument("adequacy test needs at least one trial");
    if (!(spec.margin > 0.0)) throw std::invalid_argument("adequacy margin must be positive");
    if (!std::holds_alternative<WaldNormalRule>(rule.base_rule().constructor()))
        throw std::invalid_argument("adequacy testing uses a wald_normal rule");

    std::vector<double> losses(inputs.size());
    bool nonnegative = true;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        losses[i] = spec.loss(spec.predictor(inputs[i]), actuals[i]);
        if (std::isnan(losses[i]) || std::isinf(losses[i]))
            throw std::invalid_argument("loss values must be finite");
        nonnegative = nonnegative && losses[i] >= 0.0;
    }

    const auto n = static_cast<double>(losses.size());
    double mean = 0.0;
    for (double l : losses) mean += l;
    mean /= n;
    double ss = 0.0;
    for (double l : losses) ss += (l - mean) * (l - mean);
    const double sd = losses.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;

    const Interval ambient = nonnegative
                                 ? Interval(Endpoint::closed_at(0.0), Endpoint::pos_inf())
                                 : Interval::real_line();
    const RegionSet h_tau =
        nonnegative ? RegionSet::intervals(ambient, {Interval::closed(0.0, spec.margin)})
                    : RegionSet::intervals(ambient,
                                           {Interval::closed(-spec.margin, spec.margin)});

    RegionSet loss_region = RegionSet::empty(ambient);
    if (sd > 0.0) {
        const NormalKnownSigma model{sd, ambient};
        const Evidence evidence = make_evidence(make_model(model), losses);
        loss_region = region(rule, evidence);
    } else {
        loss_region = RegionSet::point(ambient, mean);
    }

    AdequacyResult result{evaluate(h_tau, loss_region), loss_region, h_tau,
                          mean, sd, static_cast<int>(losses.size())};
    return result;
}

std::vector<SeverityPoint> severity_bound_check(const RegionSet& h_tau,
                                                const ConfidenceRule& rule,
                                                const NormalKnownSigma& model,
                                                std::span<const double> thetas_in_h1, int n,
                                                long reps, std::uint64_t seed) {
    for (double theta : thetas_in_h1)
        if (contains_point(h_tau, theta))
            throw std::invalid_argument("severity grid points must lie outside h_tau");

    std::vector<SeverityPoint> out;
    out.reserve(thetas_in_h1.size());
    std::uint64_t stream = 0;
    for (double theta : thetas_in_h1) {
        const PowerPoint p = power_point_mc(h_tau, rule, make_model(model), theta, n, reps,
                                            derive_stream_seed(seed, stream++));
        SeverityPoint sp;
        sp.theta = theta;
        sp.prob_not_confirm_null = p.delta0 + p.indecisive + p.refuted;
        sp.mc_se = std::sqrt(sp.prob_not_confirm_null * (1.0 - sp.prob_not_confirm_null) /
                             static_cast<double>(reps));
        sp.bound_satisfied =
            sp.prob_not_confirm_null >= 1.0 - rule.level_alpha() - 3.0 * sp.mc_se;
        out.push_back(sp);
    }
    return out;
}

}  // namespace confirm
