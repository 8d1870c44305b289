#pragma once

// Evidence is a finite observation sequence tagged with the sampling model
// that generated it. Two models are supported: i.i.d. normal draws with
// known sigma over a real ambient space, and Bernoulli bit sequences up to a
// declared horizon over the ambient [0, 1].

#include <string_view>
#include <variant>
#include <vector>

#include "confirm/region.hpp"

namespace confirm {

struct NormalKnownSigma {
    double sigma = 1.0;
    Interval ambient = Interval::real_line();

    friend bool operator==(const NormalKnownSigma&, const NormalKnownSigma&) = default;
};

struct BernoulliSequence {
    int horizon = 1;

    friend bool operator==(const BernoulliSequence&, const BernoulliSequence&) = default;
};

using SamplingModel = std::variant<NormalKnownSigma, BernoulliSequence>;

// Validates model parameters (sigma > 0, horizon >= 1).
SamplingModel make_model(NormalKnownSigma m);
SamplingModel make_model(BernoulliSequence m);

Interval model_ambient(const SamplingModel& m);
bool operator==(const SamplingModel& a, const SamplingModel& b);

struct Evidence {
    SamplingModel model;
    std::vector<double> observations;

    std::size_t n() const { return observations.size(); }
    friend bool operator==(const Evidence&, const Evidence&) = default;
};

// Validates observations against the model: bits in {0,1} and length within
// the horizon for Bernoulli sequences. Empty evidence is permitted.
Evidence make_evidence(SamplingModel model, std::vector<double> observations);

// Bit-string convenience, e.g. "1011000".
Evidence bits_evidence(const BernoulliSequence& model, std::string_view bits);

// All sequences over `alphabet` of length 0..max_len, breadth-first
// (index 0 is the empty sequence, children of s are s+a in alphabet order).
std::vector<std::vector<double>> enumerate_sequences(const std::vector<double>& alphabet,
                                                     int max_len);

// All length-n bit sequences, lexicographic; the exact sample space of the
// Bernoulli model at a fixed sample size.
std::vector<Evidence> all_bit_sequences(const BernoulliSequence& model, int n);

bool is_prefix_of(const std::vector<double>& prefix, const std::vector<double>& seq);

}  // namespace confirm
