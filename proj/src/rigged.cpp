#include "confirm/rigged.hpp"

#include <cmath>
#include <stdexcept>

namespace confirm {

double sequence_probability(double theta, const std::vector<double>& bits) {
    double p = 1.0;
    for (double b : bits) p *= b == 1.0 ? theta : 1.0 - theta;
    return p;
}

SupEventResult sup_event_probability(const BernoulliSequence& model, const Evidence& event,
                                     std::span<const double> theta_grid) {
    if (!(event.model == SamplingModel(model)))
        throw std::invalid_argument("event does not belong to the given bernoulli model");
    if (theta_grid.empty()) throw std::invalid_argument("theta grid must be nonempty");

    if (event.n() == 0) return SupEventResult{1.0, theta_grid.front()};

    std::vector<double> candidates(theta_grid.begin(), theta_grid.end());
    double ones = 0.0;
    for (double b : event.observations) ones += b;
    candidates.push_back(ones / static_cast<double>(event.n()));

    SupEventResult best{-1.0, 0.0};
    for (double t : candidates) {
        if (t < 0.0 || t > 1.0) continue;
        const double p = sequence_probability(t, event.observations);
        if (p > best.probability) best = SupEventResult{p, t};
    }
    return best;
}

namespace {

std::vector<double> exact_coverage(const ConfidenceRule& rule,
                                   const std::vector<Evidence>& sample_space,
                                   std::span<const double> theta_grid) {
    std::vector<RegionSet> regions;
    regions.reserve(sample_space.size());
    for (const Evidence& e : sample_space) regions.push_back(region(rule, e));

    std::vector<double> out;
    out.reserve(theta_grid.size());
    for (double theta : theta_grid) {
        double cov = 0.0;
        for (std::size_t i = 0; i < sample_space.size(); ++i) {
            if (regions[i].kind() == RegionKind::DenseCodense) continue;
            if (contains_point(regions[i], theta))
                cov += sequence_probability(theta, sample_space[i].observations);
        }
        out.push_back(cov);
    }
    return out;
}

}  // namespace

RiggedDemo rigged_level(const ConfidenceRule& base, const Evidence& trigger,
                        const RegionSet& payload, std::span<const double> theta_grid) {
    const auto* model = std::get_if<BernoulliSequence>(&trigger.model);
    if (!model)
        throw std::invalid_argument("rigged_level requires a bernoulli trigger");
    if (model->horizon > 24)
        throw std::invalid_argument("sample space too large for exact enumeration");

    RiggedDemo demo;
    demo.base_alpha = base.level_alpha();
    demo.trigger = trigger;
    demo.payload = payload;

    const SupEventResult sup = sup_event_probability(*model, trigger, theta_grid);
    demo.sup_trigger_prob = sup.probability;
    demo.argmax_theta = sup.argmax_theta;
    demo.rigged_level_bound = demo.base_alpha + demo.sup_trigger_prob;

    const ConfidenceRule rigged = ConfidenceRule::rigged(base, trigger, payload);
    const std::vector<Evidence> space = all_bit_sequences(*model, model->horizon);
    demo.theta_grid.assign(theta_grid.begin(), theta_grid.end());
    demo.base_coverage = exact_coverage(base, space, theta_grid);
    demo.rigged_coverage = exact_coverage(rigged, space, theta_grid);
    return demo;
}

std::vector<TopoCoveragePoint> topological_coverage(const ConfidenceRule& rule,
                                                    const BernoulliSequence& model,
                                                    std::span<const double> theta_grid) {
    if (model.horizon > 24)
        throw std::invalid_argument("sample space too large for exact enumeration");
    const std::vector<Evidence> space = all_bit_sequences(model, model.horizon);

    std::vector<RegionSet> regions;
    std::vector<bool> open_valued;
    regions.reserve(space.size());
    open_valued.reserve(space.size());
    for (const Evidence& e : space) {
        regions.push_back(region(rule, e));
        open_valued.push_back(regions.back().kind() == RegionKind::IntervalUnion &&
                              has_nonempty_interior(regions.back()));
    }

    std::vector<TopoCoveragePoint> out;
    out.reserve(theta_grid.size());
    for (double theta : theta_grid) {
        TopoCoveragePoint pt;
        pt.theta = theta;
        for (std::size_t i = 0; i < space.size(); ++i) {
            if (regions[i].kind() == RegionKind::DenseCodense) continue;
            if (!contains_point(regions[i], theta)) continue;
            const double p = sequence_probability(theta, space[i].observations);
            pt.coverage += p;
            if (open_valued[i]) pt.topo_coverage += p;
        }
        out.push_back(pt);
    }
    return out;
}

}  // namespace confirm
