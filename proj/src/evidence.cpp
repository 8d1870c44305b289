#include "confirm/evidence.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace confirm {

SamplingModel make_model(NormalKnownSigma m) {
    if (!(m.sigma > 0.0) || std::isinf(m.sigma))
        throw std::invalid_argument("normal model requires finite sigma > 0");
    return SamplingModel(m);
}

SamplingModel make_model(BernoulliSequence m) {
    if (m.horizon < 1)
        throw std::invalid_argument("bernoulli model requires horizon >= 1");
    return SamplingModel(m);
}

Interval model_ambient(const SamplingModel& m) {
    if (std::holds_alternative<NormalKnownSigma>(m))
        return std::get<NormalKnownSigma>(m).ambient;
    return Interval::closed(0.0, 1.0);
}

bool operator==(const SamplingModel& a, const SamplingModel& b) {
    if (a.index() != b.index()) return false;
    if (std::holds_alternative<NormalKnownSigma>(a))
        return std::get<NormalKnownSigma>(a) == std::get<NormalKnownSigma>(b);
    return std::get<BernoulliSequence>(a) == std::get<BernoulliSequence>(b);
}

Evidence make_evidence(SamplingModel model, std::vector<double> observations) {
    if (const auto* bern = std::get_if<BernoulliSequence>(&model)) {
        if (observations.size() > static_cast<std::size_t>(bern->horizon))
            throw std::invalid_argument("evidence longer than the model horizon");
        for (double v : observations)
            if (v != 0.0 && v != 1.0)
                throw std::invalid_argument("bernoulli observations must be bits");
    } else {
        for (double v : observations)
            if (std::isnan(v) || std::isinf(v))
                throw std::invalid_argument("observations must be finite");
    }
    return Evidence{std::move(model), std::move(observations)};
}

Evidence bits_evidence(const BernoulliSequence& model, std::string_view bits) {
    std::vector<double> obs;
    obs.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("bit string may contain only 0 and 1");
        obs.push_back(c == '1' ? 1.0 : 0.0);
    }
    return make_evidence(make_model(model), std::move(obs));
}

std::vector<std::vector<double>> enumerate_sequences(const std::vector<double>& alphabet,
                                                     int max_len) {
    if (alphabet.empty()) throw std::invalid_argument("alphabet must be nonempty");
    if (max_len < 0) throw std::invalid_argument("max_len must be >= 0");
    std::vector<std::vector<double>> out;
    out.push_back({});
    std::size_t level_begin = 0;
    for (int len = 1; len <= max_len; ++len) {
        const std::size_t level_end = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i)
            for (double a : alphabet) {
                std::vector<double> s = out[i];
                s.push_back(a);
                out.push_back(std::move(s));
            }
        level_begin = level_end;
    }
    return out;
}

std::vector<Evidence> all_bit_sequences(const BernoulliSequence& model, int n) {
    if (n < 0 || n > model.horizon)
        throw std::invalid_argument("sequence length must lie in [0, horizon]");
    if (n > 30) throw std::invalid_argument("refusing to enumerate more than 2^30 sequences");
    std::vector<Evidence> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<double> obs(n);
        for (int i = 0; i < n; ++i) obs[i] = (mask >> (n - 1 - i)) & 1 ? 1.0 : 0.0;
        out.push_back(make_evidence(make_model(model), std::move(obs)));
    }
    return out;
}

bool is_prefix_of(const std::vector<double>& prefix, const std::vector<double>& seq) {
    if (prefix.size() > seq.size()) return false;
    for (std::size_t i = 0; i < prefix.size(); ++i)
        if (prefix[i] != seq[i]) return false;
    return true;
}

}  // namespace confirm
