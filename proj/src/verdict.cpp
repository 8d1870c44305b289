#include "confirm/verdict.hpp"

#include <ostream>
#include <stdexcept>

namespace confirm {

std::string_view to_string(Outcome o) {
    switch (o) {
        case Outcome::ConfirmNull: return "confirm_null";
        case Outcome::ConfirmAlt: return "confirm_alt";
        case Outcome::Indecisive: return "indecisive";
        case Outcome::RefutedAll: return "refuted_all";
    }
    throw std::logic_error("unknown outcome");
}

std::ostream& operator<<(std::ostream& os, Outcome o) { return os << to_string(o); }

Verdict evaluate(const RegionSet& h0, const RegionSet& region) {
    if (!(h0.ambient() == region.ambient()))
        throw std::invalid_argument("hypothesis and region have different ambient spaces");
    if (region.is_empty()) return Verdict{Outcome::RefutedAll, region};
    if (contains(h0, region)) return Verdict{Outcome::ConfirmNull, region};
    if (contains(complement(h0), region)) return Verdict{Outcome::ConfirmAlt, region};
    return Verdict{Outcome::Indecisive, region};
}

bool modal_holds(const RegionSet& h, const RegionSet& region, ModalOp op) {
    if (!(h.ambient() == region.ambient()))
        throw std::invalid_argument("hypothesis and region have different ambient spaces");
    return op == ModalOp::Box ? contains(h, region) : intersects(region, h);
}

Verdict run_test(const ConfidenceRule& rule, const Evidence& e, const RegionSet& h0) {
    return evaluate(h0, region(rule, e));
}

}  // namespace confirm
