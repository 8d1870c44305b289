#pragma once

// Confidence rules: evidence-indexed regions of the parameter space.
//
// Three constructors are provided. WaldNormal and WaldBinomial are the usual
// two-sided Wald intervals (open, so every region with data has nonempty
// interior). Rigged wraps another rule and swaps in an arbitrary payload
// region on one exact trigger evidence; rigging composes, so a chain of
// Rigged layers acts as a lookup table over evidence.

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "confirm/evidence.hpp"
#include "confirm/region.hpp"

namespace confirm {

class ConfidenceRule;

struct WaldNormalRule {};
struct WaldBinomialRule {};
struct RiggedRule {
    std::shared_ptr<const ConfidenceRule> base;
    Evidence trigger;
    RegionSet payload;
};

class ConfidenceRule {
public:
    using Constructor = std::variant<WaldNormalRule, WaldBinomialRule, RiggedRule>;

    static ConfidenceRule wald_normal(double alpha);
    static ConfidenceRule wald_binomial(double alpha);
    // A rigged rule keeps the base's nominal level; its achieved level is
    // what rigged_level() reports.
    static ConfidenceRule rigged(ConfidenceRule base, Evidence trigger, RegionSet payload);

    double level_alpha() const { return level_alpha_; }
    const Constructor& constructor() const { return ctor_; }

    bool is_rigged() const { return std::holds_alternative<RiggedRule>(ctor_); }
    // The non-rigged rule at the bottom of a rigging chain (self if plain).
    const ConfidenceRule& base_rule() const;

private:
    ConfidenceRule(double alpha, Constructor ctor);

    double level_alpha_;
    Constructor ctor_;
};

// The confidence region c(E). Requires a compatible evidence model
// (WaldNormal with NormalKnownSigma, WaldBinomial with BernoulliSequence)
// and throws std::invalid_argument otherwise. Empty evidence yields the
// full ambient; regions are clipped to the ambient.
RegionSet region(const ConfidenceRule& rule, const Evidence& e);

// True iff region(rule, e) is nonempty for every e in the universe.
bool is_non_refuting(const ConfidenceRule& rule, std::span<const Evidence> universe);

// Pull-based evidence source: returns evidence until exhausted.
using EvidenceEnumerator = std::function<std::optional<Evidence>()>;

EvidenceEnumerator enumerate_universe(std::vector<Evidence> universe);

// Searches the enumerator for evidence whose region is nonempty and inside
// `target`. Requires target to have nonempty interior (no region with
// interior can fit in a target without one). Returns nullopt if the
// enumerator is exhausted first.
std::optional<Evidence> satisfies_precision(const ConfidenceRule& rule,
                                            const RegionSet& target,
                                            const EvidenceEnumerator& search);

// Analytic precision witness for WaldNormal: evidence of n copies of the
// centre of a widest interior component of `target`, with n large enough
// that the Wald half-width fits. WaldNormal satisfies precision because the
// half-width z*sigma/sqrt(n) can be made smaller than any positive radius.
Evidence wald_normal_precision_evidence(const ConfidenceRule& rule,
                                        const NormalKnownSigma& model,
                                        const RegionSet& target);

// Folds a list of (evidence, region) overrides into nested Rigged layers.
ConfidenceRule rigged_table(ConfidenceRule base,
                            std::vector<std::pair<Evidence, RegionSet>> entries);

}  // namespace confirm
