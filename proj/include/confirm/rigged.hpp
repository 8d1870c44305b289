#pragma once

// Rigged confidence regions on the finite Bernoulli model: swap an arbitrary
// payload in on one low-probability trigger event and account for the level
// with a union bound. Coverage statements are checked by exact enumeration
// of the 2^n sample space, so every probability here is a finite sum.

#include <span>
#include <vector>

#include "confirm/confidence.hpp"
#include "confirm/evidence.hpp"
#include "confirm/region.hpp"

namespace confirm {

struct SupEventResult {
    double probability = 0.0;
    double argmax_theta = 0.0;
};

// Maximizes P_theta(event) = theta^{#1s} (1-theta)^{#0s} over the grid,
// refined by the analytic maximizer #1s/len. The empty event has
// probability 1 at every theta; by convention the first grid point is
// reported as its maximizer.
SupEventResult sup_event_probability(const BernoulliSequence& model, const Evidence& event,
                                     std::span<const double> theta_grid);

struct RiggedDemo {
    double base_alpha = 0.0;
    Evidence trigger;
    RegionSet payload = RegionSet::empty(Interval::closed(0.0, 1.0));
    double sup_trigger_prob = 0.0;
    double argmax_theta = 0.0;
    // Union bound on the rigged level: base_alpha + sup_trigger_prob. The
    // base's exact coverage can sit below its nominal level (Wald at small n
    // does), so the bound is relative to the nominal level by construction
    // and to the exact coverage via base_coverage/rigged_coverage below.
    double rigged_level_bound = 0.0;
    std::vector<double> theta_grid;
    std::vector<double> base_coverage;    // exact, per grid theta
    std::vector<double> rigged_coverage;  // exact, per grid theta
};

// Builds the rigged rule, computes the trigger's sup probability and the
// union bound, and enumerates exact coverage of base and rigged rules over
// the full-length sample space.
RiggedDemo rigged_level(const ConfidenceRule& base, const Evidence& trigger,
                        const RegionSet& payload, std::span<const double> theta_grid);

struct TopoCoveragePoint {
    double theta = 0.0;
    double coverage = 0.0;       // P(theta in c(E))
    double topo_coverage = 0.0;  // P(theta in c(E) and c(E) has nonempty interior)
};

// Exact enumeration over all length-horizon bit sequences.
std::vector<TopoCoveragePoint> topological_coverage(const ConfidenceRule& rule,
                                                    const BernoulliSequence& model,
                                                    std::span<const double> theta_grid);

// P_theta of one exact bit sequence.
double sequence_probability(double theta, const std::vector<double>& bits);

}  // namespace confirm
