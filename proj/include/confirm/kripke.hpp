#pragma once

// Finite Kripke frames for the two accessibility relations over worlds
// (theta, evidence):
//
//   w R_c v  <=>  theta_v in c(E_w)      (plausibility)
//   w R_E v  <=>  E_w is a prefix of E_v (evidence extension)
//
// Worlds are the product of a finite theta grid and the universe of all
// observation sequences up to the frame horizon over a finite alphabet.
// Formula satisfaction is computed bottom-up: each subformula is labelled
// once across the whole frame, which keeps nested modalities linear in the
// number of worlds.

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "confirm/confidence.hpp"
#include "confirm/evidence.hpp"
#include "confirm/region.hpp"

namespace confirm {

struct World {
    double theta = 0.0;
    Evidence evidence;
};

class Frame {
public:
    // theta_grid must be strictly increasing and inside the model ambient;
    // the Bernoulli model restricts the alphabet to bits and the horizon to
    // the model's. Regions are computed once per evidence node.
    Frame(std::vector<double> theta_grid, std::vector<double> alphabet, int horizon,
          ConfidenceRule rule, SamplingModel model);

    const std::vector<double>& theta_grid() const { return theta_grid_; }
    const std::vector<double>& alphabet() const { return alphabet_; }
    int horizon() const { return horizon_; }
    const ConfidenceRule& rule() const { return rule_; }
    const SamplingModel& model() const { return model_; }
    const Interval& ambient() const { return ambient_; }

    std::size_t sequence_count() const { return sequences_.size(); }
    std::size_t world_count() const { return sequences_.size() * theta_grid_.size(); }

    // World indexing: index = seq_index * |grid| + theta_index.
    World world(std::size_t index) const;
    std::size_t world_index(std::size_t seq_index, std::size_t theta_index) const;
    std::optional<std::size_t> find_sequence(const std::vector<double>& seq) const;

    const std::vector<double>& sequence(std::size_t seq_index) const;
    Evidence evidence_at(std::size_t seq_index) const;
    const RegionSet& region_at(std::size_t seq_index) const;
    const std::vector<std::size_t>& children_of(std::size_t seq_index) const;

    // The open neighbor cell around grid point i: bounded by the adjacent
    // grid points, falling back to the ambient bounds at the edges.
    Interval grid_cell(std::size_t theta_index) const;

private:
    std::vector<double> theta_grid_;
    std::vector<double> alphabet_;
    int horizon_;
    ConfidenceRule rule_;
    SamplingModel model_;
    Interval ambient_;
    std::vector<std::vector<double>> sequences_;        // breadth-first, [0] empty
    std::vector<std::vector<std::size_t>> children_;    // one-step extensions
    std::vector<RegionSet> regions_;
};

// All v with theta_v in region(rule, E_w); the evidence of v is free.
std::vector<World> accessible_c(const Frame& f, const World& w);

// All v whose evidence extends E_w (prefix order, reflexive); theta is free.
std::vector<World> accessible_e(const Frame& f, const World& w);

// Modal formulas over region atoms.
class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

class Formula {
public:
    enum class Kind { Atom, Not, And, Or, BoxC, DiamondC, BoxE, DiamondE };

    static FormulaPtr atom(RegionSet h);
    static FormulaPtr negation(FormulaPtr f);
    static FormulaPtr conjunction(std::vector<FormulaPtr> fs);
    static FormulaPtr disjunction(std::vector<FormulaPtr> fs);
    static FormulaPtr box_c(FormulaPtr f);
    static FormulaPtr diamond_c(FormulaPtr f);
    static FormulaPtr box_e(FormulaPtr f);
    static FormulaPtr diamond_e(FormulaPtr f);

    Kind kind() const { return kind_; }
    const RegionSet& region() const;
    const std::vector<FormulaPtr>& children() const { return children_; }

private:
    Formula(Kind kind, std::optional<RegionSet> region, std::vector<FormulaPtr> children);

    Kind kind_;
    std::optional<RegionSet> region_;
    std::vector<FormulaPtr> children_;
};

// Truth value of phi at every world, indexed like Frame::world_index.
// Atoms hold where theta_w lies in the atom's region; DenseCodense atoms
// are rejected (membership undecidable).
std::vector<char> evaluate(const Frame& f, const FormulaPtr& phi);

bool satisfies(const Frame& f, const World& w, const FormulaPtr& phi);

// Precise-extension check at frame resolution: for each grid theta, its
// neighbor cell U and each evidence E (with |E| <= max_prefix_len when
// given), search extensions E' of E inside the universe for
// theta in region(E') ⊆ U. Returns the triples with no witness.
//
// Certification is meaningful only with a prefix cap that leaves room to
// extend: a maximal-length E has no extension but itself, and one region
// cannot serve two distinct grid points' disjointly-bounded cells, so the
// uncapped check cannot come back empty on a grid with two or more points.
struct PepCounterexample {
    double theta = 0.0;
    Interval cell = Interval::real_line();
    Evidence evidence;
};

std::vector<PepCounterexample> check_pep(const Frame& f,
                                         std::optional<int> max_prefix_len = std::nullopt);

}  // namespace confirm
