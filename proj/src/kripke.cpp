#include "confirm/kripke.hpp"

#include <algorithm>
#include <stdexcept>

namespace confirm {

Frame::Frame(std::vector<double> theta_grid, std::vector<double> alphabet, int horizon,
             ConfidenceRule rule, SamplingModel model)
    : theta_grid_(std::move(theta_grid)),
      alphabet_(std::move(alphabet)),
      horizon_(horizon),
      rule_(std::move(rule)),
      model_(std::move(model)),
      ambient_(model_ambient(model_)) {
    if (theta_grid_.empty()) throw std::invalid_argument("theta grid must be nonempty");
    if (!std::is_sorted(theta_grid_.begin(), theta_grid_.end()) ||
        std::adjacent_find(theta_grid_.begin(), theta_grid_.end()) != theta_grid_.end())
        throw std::invalid_argument("theta grid must be strictly increasing");
    for (double t : theta_grid_)
        if (!interval_contains_point(ambient_, t))
            throw std::invalid_argument("theta grid must lie inside the model ambient");
    if (horizon_ < 0) throw std::invalid_argument("horizon must be >= 0");
    if (const auto* bern = std::get_if<BernoulliSequence>(&model_)) {
        if (horizon_ > bern->horizon)
            throw std::invalid_argument("frame horizon exceeds the model horizon");
        for (double a : alphabet_)
            if (a != 0.0 && a != 1.0)
                throw std::invalid_argument("bernoulli frames need a bit alphabet");
    }

    sequences_ = enumerate_sequences(alphabet_, horizon_);
    children_.resize(sequences_.size());
    regions_.reserve(sequences_.size());
    for (std::size_t i = 0; i < sequences_.size(); ++i) {
        regions_.push_back(region(rule_, Evidence{model_, sequences_[i]}));
        if (regions_.back().kind() == RegionKind::DenseCodense)
            throw std::invalid_argument(
                "frame regions must be interval unions; dense-codense plausibility is "
                "undecidable on a grid");
    }

    // Breadth-first enumeration: children of node i are contiguous and in
    // alphabet order, so they can be located by offset per level.
    std::size_t level_begin = 0;
    std::size_t next_level_begin = 1;
    for (int len = 0; len < horizon_; ++len) {
        const std::size_t level_size = next_level_begin - level_begin;
        for (std::size_t i = 0; i < level_size; ++i) {
            const std::size_t node = level_begin + i;
            children_[node].reserve(alphabet_.size());
            for (std::size_t a = 0; a < alphabet_.size(); ++a)
                children_[node].push_back(next_level_begin + i * alphabet_.size() + a);
        }
        level_begin = next_level_begin;
        next_level_begin += level_size * alphabet_.size();
    }
}

World Frame::world(std::size_t index) const {
    const std::size_t seq = index / theta_grid_.size();
    const std::size_t t = index % theta_grid_.size();
    return World{theta_grid_[t], evidence_at(seq)};
}

std::size_t Frame::world_index(std::size_t seq_index, std::size_t theta_index) const {
    return seq_index * theta_grid_.size() + theta_index;
}

std::optional<std::size_t> Frame::find_sequence(const std::vector<double>& seq) const {
    const auto it = std::find(sequences_.begin(), sequences_.end(), seq);
    if (it == sequences_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - sequences_.begin());
}

const std::vector<double>& Frame::sequence(std::size_t seq_index) const {
    return sequences_.at(seq_index);
}

Evidence Frame::evidence_at(std::size_t seq_index) const {
    return Evidence{model_, sequences_.at(seq_index)};
}

const RegionSet& Frame::region_at(std::size_t seq_index) const {
    return regions_.at(seq_index);
}

const std::vector<std::size_t>& Frame::children_of(std::size_t seq_index) const {
    return children_.at(seq_index);
}

Interval Frame::grid_cell(std::size_t theta_index) const {
    const Endpoint lo = theta_index == 0 ? ambient_.lo()
                                         : Endpoint::open(theta_grid_[theta_index - 1]);
    const Endpoint hi = theta_index + 1 == theta_grid_.size()
                            ? ambient_.hi()
                            : Endpoint::open(theta_grid_[theta_index + 1]);
    return Interval(lo, hi);
}

namespace {

std::size_t locate_world(const Frame& f, const World& w) {
    const auto seq = f.find_sequence(w.evidence.observations);
    if (!seq || !(w.evidence.model == f.model()))
        throw std::invalid_argument("world evidence does not belong to the frame");
    const auto& grid = f.theta_grid();
    const auto it = std::find(grid.begin(), grid.end(), w.theta);
    if (it == grid.end())
        throw std::invalid_argument("world theta does not belong to the frame grid");
    return f.world_index(*seq, static_cast<std::size_t>(it - grid.begin()));
}

}  // namespace

std::vector<World> accessible_c(const Frame& f, const World& w) {
    const std::size_t index = locate_world(f, w);
    const RegionSet& reg = f.region_at(index / f.theta_grid().size());
    std::vector<World> out;
    for (std::size_t t = 0; t < f.theta_grid().size(); ++t) {
        if (!contains_point(reg, f.theta_grid()[t])) continue;
        for (std::size_t s = 0; s < f.sequence_count(); ++s)
            out.push_back(f.world(f.world_index(s, t)));
    }
    return out;
}

std::vector<World> accessible_e(const Frame& f, const World& w) {
    const std::size_t index = locate_world(f, w);
    const auto& prefix = f.sequence(index / f.theta_grid().size());
    std::vector<World> out;
    for (std::size_t s = 0; s < f.sequence_count(); ++s) {
        if (!is_prefix_of(prefix, f.sequence(s))) continue;
        for (std::size_t t = 0; t < f.theta_grid().size(); ++t)
            out.push_back(f.world(f.world_index(s, t)));
    }
    return out;
}

Formula::Formula(Kind kind, std::optional<RegionSet> region, std::vector<FormulaPtr> children)
    : kind_(kind), region_(std::move(region)), children_(std::move(children)) {}

FormulaPtr Formula::atom(RegionSet h) {
    return FormulaPtr(new Formula(Kind::Atom, std::move(h), {}));
}
FormulaPtr Formula::negation(FormulaPtr f) {
    return FormulaPtr(new Formula(Kind::Not, std::nullopt, {std::move(f)}));
}
FormulaPtr Formula::conjunction(std::vector<FormulaPtr> fs) {
    if (fs.empty()) throw std::invalid_argument("conjunction needs at least one operand");
    return FormulaPtr(new Formula(Kind::And, std::nullopt, std::move(fs)));
}
FormulaPtr Formula::disjunction(std::vector<FormulaPtr> fs) {
    if (fs.empty()) throw std::invalid_argument("disjunction needs at least one operand");
    return FormulaPtr(new Formula(Kind::Or, std::nullopt, std::move(fs)));
}
FormulaPtr Formula::box_c(FormulaPtr f) {
    return FormulaPtr(new Formula(Kind::BoxC, std::nullopt, {std::move(f)}));
}
FormulaPtr Formula::diamond_c(FormulaPtr f) {
    return FormulaPtr(new Formula(Kind::DiamondC, std::nullopt, {std::move(f)}));
}
FormulaPtr Formula::box_e(FormulaPtr f) {
    return FormulaPtr(new Formula(Kind::BoxE, std::nullopt, {std::move(f)}));
}
FormulaPtr Formula::diamond_e(FormulaPtr f) {
    return FormulaPtr(new Formula(Kind::DiamondE, std::nullopt, {std::move(f)}));
}

const RegionSet& Formula::region() const {
    if (!region_) throw std::logic_error("formula node has no region");
    return *region_;
}

namespace {

using SatVector = std::vector<char>;

// R_c-modalities: the accessible set {v : theta_v in c(E_w)} constrains only
// theta, so BoxC(phi) at w depends on E_w alone once phi has been reduced to
// "holds at (t, every E)" per theta index.
SatVector modal_c(const Frame& f, const SatVector& sub, bool universal) {
    const std::size_t n_theta = f.theta_grid().size();
    const std::size_t n_seq = f.sequence_count();

    std::vector<char> theta_reduced(n_theta, universal ? 1 : 0);
    for (std::size_t t = 0; t < n_theta; ++t)
        for (std::size_t s = 0; s < n_seq; ++s) {
            const char v = sub[f.world_index(s, t)];
            if (universal && !v) {
                theta_reduced[t] = 0;
                break;
            }
            if (!universal && v) {
                theta_reduced[t] = 1;
                break;
            }
        }

    SatVector out(f.world_count());
    for (std::size_t s = 0; s < n_seq; ++s) {
        char value = universal ? 1 : 0;
        const RegionSet& reg = f.region_at(s);
        for (std::size_t t = 0; t < n_theta; ++t) {
            if (!contains_point(reg, f.theta_grid()[t])) continue;
            if (universal && !theta_reduced[t]) {
                value = 0;
                break;
            }
            if (!universal && theta_reduced[t]) {
                value = 1;
                break;
            }
        }
        for (std::size_t t = 0; t < n_theta; ++t) out[f.world_index(s, t)] = value;
    }
    return out;
}

// R_E-modalities: reduce phi to "holds at (e, every theta)" per evidence
// node, then fold over the extension tree from the leaves up.
SatVector modal_e(const Frame& f, const SatVector& sub, bool universal) {
    const std::size_t n_theta = f.theta_grid().size();
    const std::size_t n_seq = f.sequence_count();

    std::vector<char> seq_reduced(n_seq);
    for (std::size_t s = 0; s < n_seq; ++s) {
        char v = universal ? 1 : 0;
        for (std::size_t t = 0; t < n_theta; ++t) {
            const char w = sub[f.world_index(s, t)];
            if (universal && !w) {
                v = 0;
                break;
            }
            if (!universal && w) {
                v = 1;
                break;
            }
        }
        seq_reduced[s] = v;
    }

    // Breadth-first indices put children after parents, so a reverse sweep
    // sees every subtree before its root.
    std::vector<char> folded(seq_reduced);
    for (std::size_t s = n_seq; s-- > 0;) {
        for (const std::size_t c : f.children_of(s)) {
            if (universal)
                folded[s] = folded[s] && folded[c];
            else
                folded[s] = folded[s] || folded[c];
        }
    }

    SatVector out(f.world_count());
    for (std::size_t s = 0; s < n_seq; ++s)
        for (std::size_t t = 0; t < n_theta; ++t) out[f.world_index(s, t)] = folded[s];
    return out;
}

}  // namespace

std::vector<char> evaluate(const Frame& f, const FormulaPtr& phi) {
    if (!phi) throw std::invalid_argument("null formula");
    switch (phi->kind()) {
        case Formula::Kind::Atom: {
            const RegionSet& h = phi->region();
            if (h.kind() == RegionKind::DenseCodense)
                throw std::invalid_argument("dense-codense atoms have undecidable membership");
            if (!(h.ambient() == f.ambient()))
                throw std::invalid_argument("atom ambient differs from the frame's");
            SatVector out(f.world_count());
            std::vector<char> member(f.theta_grid().size());
            for (std::size_t t = 0; t < member.size(); ++t)
                member[t] = contains_point(h, f.theta_grid()[t]) ? 1 : 0;
            for (std::size_t s = 0; s < f.sequence_count(); ++s)
                for (std::size_t t = 0; t < member.size(); ++t)
                    out[f.world_index(s, t)] = member[t];
            return out;
        }
        case Formula::Kind::Not: {
            SatVector out = evaluate(f, phi->children()[0]);
            for (char& v : out) v = !v;
            return out;
        }
        case Formula::Kind::And:
        case Formula::Kind::Or: {
            SatVector out = evaluate(f, phi->children()[0]);
            for (std::size_t i = 1; i < phi->children().size(); ++i) {
                const SatVector next = evaluate(f, phi->children()[i]);
                for (std::size_t w = 0; w < out.size(); ++w)
                    out[w] = phi->kind() == Formula::Kind::And ? (out[w] && next[w])
                                                               : (out[w] || next[w]);
            }
            return out;
        }
        case Formula::Kind::BoxC: return modal_c(f, evaluate(f, phi->children()[0]), true);
        case Formula::Kind::DiamondC: return modal_c(f, evaluate(f, phi->children()[0]), false);
        case Formula::Kind::BoxE: return modal_e(f, evaluate(f, phi->children()[0]), true);
        case Formula::Kind::DiamondE: return modal_e(f, evaluate(f, phi->children()[0]), false);
    }
    throw std::logic_error("unknown formula kind");
}

bool satisfies(const Frame& f, const World& w, const FormulaPtr& phi) {
    return evaluate(f, phi)[locate_world(f, w)] != 0;
}

std::vector<PepCounterexample> check_pep(const Frame& f, std::optional<int> max_prefix_len) {
    const std::size_t n_seq = f.sequence_count();
    std::vector<PepCounterexample> out;

    for (std::size_t t = 0; t < f.theta_grid().size(); ++t) {
        const double theta = f.theta_grid()[t];
        const Interval cell = f.grid_cell(t);
        const RegionSet cell_region = RegionSet::intervals(f.ambient(), {cell});

        for (std::size_t s = 0; s < n_seq; ++s) {
            const auto len = static_cast<int>(f.sequence(s).size());
            if (max_prefix_len && len > *max_prefix_len) continue;

            // Depth-first over the extension subtree rooted at s, including
            // s itself.
            bool witnessed = false;
            std::vector<std::size_t> stack{s};
            while (!stack.empty() && !witnessed) {
                const std::size_t node = stack.back();
                stack.pop_back();
                const RegionSet& reg = f.region_at(node);
                if (reg.kind() == RegionKind::IntervalUnion && !reg.is_empty() &&
                    contains_point(reg, theta) && contains(cell_region, reg))
                    witnessed = true;
                else
                    for (const std::size_t c : f.children_of(node)) stack.push_back(c);
            }
            if (!witnessed)
                out.push_back(PepCounterexample{theta, cell, f.evidence_at(s)});
        }
    }
    return out;
}

}  // namespace confirm
