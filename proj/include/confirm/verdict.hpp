#pragma once

// The trivalent test outcome. Exactly one of ConfirmNull / ConfirmAlt /
// Indecisive holds whenever the region is nonempty; an empty region refutes
// every parameter value at once and is reported as RefutedAll rather than
// treated as an error.

#include <iosfwd>
#include <string_view>

#include "confirm/confidence.hpp"
#include "confirm/region.hpp"

namespace confirm {

enum class Outcome { ConfirmNull, ConfirmAlt, Indecisive, RefutedAll };

std::string_view to_string(Outcome o);
std::ostream& operator<<(std::ostream& os, Outcome o);

// Carries the region that produced the outcome, for audit and reports.
struct Verdict {
    Outcome outcome;
    RegionSet region;
};

// ConfirmNull  <=> region nonempty and region ⊆ h0
// ConfirmAlt   <=> region nonempty and region ⊆ h0^c
// Indecisive   <=> region meets both h0 and h0^c
// RefutedAll   <=> region empty
// The complement is taken relative to the shared ambient; mismatched
// ambients throw std::invalid_argument.
Verdict evaluate(const RegionSet& h0, const RegionSet& region);

enum class ModalOp { Box, Diamond };

// Box: region ⊆ h. Diamond: region meets h. Box(h) == !Diamond(complement(h)).
bool modal_holds(const RegionSet& h, const RegionSet& region, ModalOp op);

// evaluate(h0, region(rule, e)).
Verdict run_test(const ConfidenceRule& rule, const Evidence& e, const RegionSet& h0);

}  // namespace confirm
