#pragma once

// Severe-testing harness: test the empirical adequacy of a predictive theory
// by running the trivalent test on the mean of a per-trial loss statistic.
// The adequacy hypothesis is [0, M] for nonnegative losses (over the ambient
// [0, inf)) and [-M, M] for signed discrepancies (over the real line);
// ConfirmNull reads as "passed a severe test relative to (L, M, alpha)".

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "confirm/confidence.hpp"
#include "confirm/region.hpp"
#include "confirm/verdict.hpp"

namespace confirm {

struct TheorySpec {
    std::function<double(double)> predictor;         // experimental input -> prediction
    std::function<double(double, double)> loss;      // (prediction, actual) -> discrepancy
    double margin = 0.0;                             // adequacy margin M > 0
    double alpha = 0.05;
};

struct AdequacyResult {
    Verdict verdict;
    RegionSet loss_statistic_region;
    RegionSet h_tau;
    double mean_loss = 0.0;
    double sd_loss = 0.0;   // sample SD, the plug-in sigma
    int n = 0;
};

// Computes per-trial losses, forms evidence for the mean loss with the
// sample SD as plug-in sigma (an approximation outside the known-sigma
// theory, recorded in the result), and evaluates the verdict against the
// adequacy hypothesis. Zero-variance losses cannot form a known-sigma
// model; the region then degenerates to the point {mean}.
AdequacyResult test_adequacy(const TheorySpec& spec, std::span<const double> inputs,
                             std::span<const double> actuals, const ConfidenceRule& rule);

struct SeverityPoint {
    double theta = 0.0;
    double prob_not_confirm_null = 0.0;
    double mc_se = 0.0;
    bool bound_satisfied = false;  // prob >= 1 - alpha - 3*SE
};

// Monte Carlo check of the severity clause: at every theta outside h_tau,
// P(verdict != ConfirmNull) >= 1 - alpha up to 3 standard errors. Grid
// points inside h_tau are precondition errors.
std::vector<SeverityPoint> severity_bound_check(const RegionSet& h_tau,
                                                const ConfidenceRule& rule,
                                                const NormalKnownSigma& model,
                                                std::span<const double> thetas_in_h1, int n,
                                                long reps, std::uint64_t seed);

}  // namespace confirm
