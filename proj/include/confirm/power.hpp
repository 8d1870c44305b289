#pragma once

// Decisive power analysis for the trivalent test.
//
// beta is the classical power P(region ⊆ h0^c); delta1 and delta0 are the
// partial decisive powers P(region ⊆ h0) and P(region ⊆ h0^c); delta is
// their sum and the indecisiveness is 1 - delta. The closed form is exact
// for WaldNormal rules (the sample mean is normal with known sigma); the
// Monte Carlo estimator works for any rule/model pair and reports verdict
// frequencies over seeded replicates.

#include <cstdint>
#include <span>
#include <vector>

#include "confirm/confidence.hpp"
#include "confirm/evidence.hpp"
#include "confirm/region.hpp"

namespace confirm {

enum class PowerMethod { ClosedForm, MonteCarlo };

struct PowerPoint {
    double theta = 0.0;
    int n = 0;
    double beta = 0.0;        // = delta0
    double delta0 = 0.0;      // P(confirm alternative)
    double delta1 = 0.0;      // P(confirm null)
    double delta = 0.0;       // delta0 + delta1
    double indecisive = 0.0;  // 1 - delta when nothing is refuted
    double refuted = 0.0;     // P(empty region); 0 for Wald rules
    PowerMethod method = PowerMethod::ClosedForm;
    long reps = 0;            // Monte Carlo only
    std::uint64_t seed = 0;   // Monte Carlo only
};

// Exact probabilities via the normal CDF of the sample-mean events, summed
// per component interval of h0 (containment events for separated components
// are disjoint in the sample mean). Requires a plain WaldNormal rule and an
// interval-union h0 whose ambient matches the model's.
PowerPoint power_point_exact(const RegionSet& h0, const ConfidenceRule& rule,
                             const NormalKnownSigma& model, double theta, int n);

// Verdict frequencies over `reps` seeded draws at sample size n.
PowerPoint power_point_mc(const RegionSet& h0, const ConfidenceRule& rule,
                          const SamplingModel& model, double theta, int n, long reps,
                          std::uint64_t seed);

struct DValuePoint {
    double theta = 0.0;
    bool in_h0 = false;
    // P(confirm the wrong side): ConfirmAlt for theta in h0, ConfirmNull
    // for theta outside.
    double decisive_error_prob = 0.0;
};

struct DValueReport {
    double d_value = 0.0;  // max over the grid of decisive_error_prob
    double alpha = 0.0;    // the rule's level
    int n = 0;
    PowerMethod method = PowerMethod::ClosedForm;
    long reps = 0;
    std::uint64_t seed = 0;
    std::vector<DValuePoint> per_theta;
};

// Worst decisive-error probability over a finite grid; grid points are
// classified by membership in h0 (DenseCodense h0 is rejected). reps/seed
// are ignored for the closed form.
DValueReport d_value(const RegionSet& h0, const ConfidenceRule& rule,
                     const SamplingModel& model, std::span<const double> theta_grid, int n,
                     PowerMethod method, long reps = 0, std::uint64_t seed = 0);

// Pointwise indecisiveness. A DenseCodense h0 needs no simulation: every
// open-valued region meets both the dense set and its dense complement, so
// the curve is identically 1.
std::vector<PowerPoint> indecisiveness_curve(const RegionSet& h0, const ConfidenceRule& rule,
                                             const SamplingModel& model,
                                             std::span<const double> thetas, int n,
                                             PowerMethod method, long reps = 0,
                                             std::uint64_t seed = 0);

}  // namespace confirm
