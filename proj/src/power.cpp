#include "confirm/power.hpp"

#include <cmath>
#include <stdexcept>

#include "confirm/normal.hpp"
#include "confirm/rng.hpp"
#include "confirm/verdict.hpp"

namespace confirm {

namespace {

// P(xbar in [lo, hi]) for xbar ~ N(theta, s^2); handles infinite bounds.
double prob_mean_between(double lo, double hi, double theta, double s) {
    if (!(hi > lo)) return 0.0;
    const double phi_hi = std::isinf(hi) ? (hi > 0 ? 1.0 : 0.0) : norm_cdf((hi - theta) / s);
    const double phi_lo = std::isinf(lo) ? (lo > 0 ? 1.0 : 0.0) : norm_cdf((lo - theta) / s);
    return phi_hi - phi_lo;
}

// P(the clipped Wald region lies inside one component [L, U] of a target).
// On a side where the component reaches the ambient boundary, the clipped
// region can never poke out unless the component excludes a boundary point
// the ambient keeps.
double prob_region_inside(const Interval& component, const Interval& ambient, double theta,
                          double s, double w) {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();

    const bool lo_at_ambient = component.lo().value == ambient.lo().value &&
                               (component.lo().closed || !ambient.lo().closed);
    if (!lo_at_ambient) lo = component.lo().value + w;

    const bool hi_at_ambient = component.hi().value == ambient.hi().value &&
                               (component.hi().closed || !ambient.hi().closed);
    if (!hi_at_ambient) hi = component.hi().value - w;

    return prob_mean_between(lo, hi, theta, s);
}

double prob_region_inside_set(const RegionSet& target, double theta, double s, double w) {
    double p = 0.0;
    for (const Interval& component : target.parts())
        p += prob_region_inside(component, target.ambient(), theta, s, w);
    return p;
}

struct VerdictCounts {
    long confirm_null = 0;
    long confirm_alt = 0;
    long indecisive = 0;
    long refuted = 0;
};

}  // namespace

PowerPoint power_point_exact(const RegionSet& h0, const ConfidenceRule& rule,
                             const NormalKnownSigma& model, double theta, int n) {
    if (!std::holds_alternative<WaldNormalRule>(rule.constructor()))
        throw std::invalid_argument("closed-form power requires a plain wald_normal rule");
    if (h0.kind() == RegionKind::DenseCodense)
        throw std::invalid_argument("closed-form power is undefined for dense-codense h0");
    if (!(h0.ambient() == model.ambient))
        throw std::invalid_argument("h0 ambient differs from the model's");
    if (n < 1) throw std::invalid_argument("sample size must be >= 1");

    const double s = model.sigma / std::sqrt(static_cast<double>(n));
    const double w = two_sided_z(rule.level_alpha()) * model.sigma /
                     std::sqrt(static_cast<double>(n));

    PowerPoint p;
    p.theta = theta;
    p.n = n;
    p.method = PowerMethod::ClosedForm;
    p.delta1 = prob_region_inside_set(h0, theta, s, w);
    p.delta0 = prob_region_inside_set(complement(h0), theta, s, w);
    p.beta = p.delta0;
    p.delta = p.delta0 + p.delta1;
    p.indecisive = 1.0 - p.delta;
    return p;
}

PowerPoint power_point_mc(const RegionSet& h0, const ConfidenceRule& rule,
                          const SamplingModel& model, double theta, int n, long reps,
                          std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sample size must be >= 1");
    if (reps < 1) throw std::invalid_argument("reps must be >= 1");
    if (!(h0.ambient() == model_ambient(model)))
        throw std::invalid_argument("h0 ambient differs from the model's");

    const bool plain_normal =
        std::holds_alternative<WaldNormalRule>(rule.constructor()) &&
        std::holds_alternative<NormalKnownSigma>(model);

    VerdictCounts totals;
    for (int worker = 0; worker < kMcWorkers; ++worker) {
        const long lo = reps * worker / kMcWorkers;
        const long hi = reps * (worker + 1) / kMcWorkers;
        RngStream rng(seed, static_cast<std::uint64_t>(worker));
        VerdictCounts counts;
        if (plain_normal) {
            // The Wald region is a function of evidence only through
            // (xbar, n), so drawing the sufficient statistic directly gives
            // the same verdict distribution as drawing n observations.
            const auto& nm = std::get<NormalKnownSigma>(model);
            const double s = nm.sigma / std::sqrt(static_cast<double>(n));
            const double w = two_sided_z(rule.level_alpha()) * s;
            for (long r = lo; r < hi; ++r) {
                const double xbar = rng.normal(theta, s);
                const RegionSet reg = RegionSet::intervals(
                    nm.ambient, {Interval::open(xbar - w, xbar + w)});
                switch (evaluate(h0, reg).outcome) {
                    case Outcome::ConfirmNull: ++counts.confirm_null; break;
                    case Outcome::ConfirmAlt: ++counts.confirm_alt; break;
                    case Outcome::Indecisive: ++counts.indecisive; break;
                    case Outcome::RefutedAll: ++counts.refuted; break;
                }
            }
        } else {
            std::vector<double> obs(static_cast<std::size_t>(n));
            for (long r = lo; r < hi; ++r) {
                if (const auto* nm = std::get_if<NormalKnownSigma>(&model)) {
                    for (double& o : obs) o = rng.normal(theta, nm->sigma);
                } else {
                    for (double& o : obs) o = rng.bernoulli_bit(theta);
                }
                const Evidence e{model, obs};
                switch (run_test(rule, e, h0).outcome) {
                    case Outcome::ConfirmNull: ++counts.confirm_null; break;
                    case Outcome::ConfirmAlt: ++counts.confirm_alt; break;
                    case Outcome::Indecisive: ++counts.indecisive; break;
                    case Outcome::RefutedAll: ++counts.refuted; break;
                }
            }
        }
        totals.confirm_null += counts.confirm_null;
        totals.confirm_alt += counts.confirm_alt;
        totals.indecisive += counts.indecisive;
        totals.refuted += counts.refuted;
    }

    const auto frac = [reps](long c) { return static_cast<double>(c) / static_cast<double>(reps); };
    PowerPoint p;
    p.theta = theta;
    p.n = n;
    p.method = PowerMethod::MonteCarlo;
    p.reps = reps;
    p.seed = seed;
    p.delta1 = frac(totals.confirm_null);
    p.delta0 = frac(totals.confirm_alt);
    p.beta = p.delta0;
    p.delta = p.delta0 + p.delta1;
    p.indecisive = frac(totals.indecisive);
    p.refuted = frac(totals.refuted);
    return p;
}

namespace {

PowerPoint power_point(const RegionSet& h0, const ConfidenceRule& rule,
                       const SamplingModel& model, double theta, int n, PowerMethod method,
                       long reps, std::uint64_t seed) {
    if (method == PowerMethod::ClosedForm) {
        const auto* nm = std::get_if<NormalKnownSigma>(&model);
        if (!nm)
            throw std::invalid_argument("closed-form power requires the normal model");
        return power_point_exact(h0, rule, *nm, theta, n);
    }
    return power_point_mc(h0, rule, model, theta, n, reps, seed);
}

}  // namespace

DValueReport d_value(const RegionSet& h0, const ConfidenceRule& rule,
                     const SamplingModel& model, std::span<const double> theta_grid, int n,
                     PowerMethod method, long reps, std::uint64_t seed) {
    if (theta_grid.empty()) throw std::invalid_argument("theta grid must be nonempty");
    if (h0.kind() == RegionKind::DenseCodense)
        throw std::invalid_argument("d-value grid membership is undecidable for dense-codense h0");

    DValueReport report;
    report.alpha = rule.level_alpha();
    report.n = n;
    report.method = method;
    report.reps = method == PowerMethod::MonteCarlo ? reps : 0;
    report.seed = method == PowerMethod::MonteCarlo ? seed : 0;
    report.per_theta.reserve(theta_grid.size());

    std::uint64_t stream = 0;
    for (double theta : theta_grid) {
        const PowerPoint p =
            power_point(h0, rule, model, theta, n, method, reps,
                        method == PowerMethod::MonteCarlo ? derive_stream_seed(seed, stream++)
                                                          : seed);
        DValuePoint dp;
        dp.theta = theta;
        dp.in_h0 = contains_point(h0, theta);
        dp.decisive_error_prob = dp.in_h0 ? p.delta0 : p.delta1;
        report.d_value = std::max(report.d_value, dp.decisive_error_prob);
        report.per_theta.push_back(dp);
    }
    return report;
}

std::vector<PowerPoint> indecisiveness_curve(const RegionSet& h0, const ConfidenceRule& rule,
                                             const SamplingModel& model,
                                             std::span<const double> thetas, int n,
                                             PowerMethod method, long reps,
                                             std::uint64_t seed) {
    std::vector<PowerPoint> out;
    out.reserve(thetas.size());
    if (h0.kind() == RegionKind::DenseCodense) {
        // Both the dense set and its complement meet every open-valued
        // region, so the test is indecisive with certainty.
        for (double theta : thetas) {
            PowerPoint p;
            p.theta = theta;
            p.n = n;
            p.method = method;
            p.indecisive = 1.0;
            out.push_back(p);
        }
        return out;
    }
    std::uint64_t stream = 0;
    for (double theta : thetas)
        out.push_back(power_point(h0, rule, model, theta, n, method, reps,
                                  method == PowerMethod::MonteCarlo
                                      ? derive_stream_seed(seed, stream++)
                                      : seed));
    return out;
}

}  // namespace confirm
