#include "qftlab/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>

#include "qftlab/errors.hpp"

namespace qftlab {

OutcomeDistribution distribution(const StateVector& s) {
    OutcomeDistribution d;
    d.n_qubits = s.n_qubits();
    d.probs.resize(s.dim());
    for (std::size_t m = 0; m < s.dim(); ++m) d.probs[m] = std::norm(s[m]);
    return d;
}

ShotCounts sample(const StateVector& s, std::uint64_t shots, std::uint64_t seed) {
    ShotCounts out;
    out.shots = shots;
    if (shots == 0) return out;

    const OutcomeDistribution d = distribution(s);
    std::vector<double> cumulative(d.probs.size());
    double acc = 0.0;
    for (std::size_t m = 0; m < d.probs.size(); ++m) {
        acc += d.probs[m];
        cumulative[m] = acc;
    }

    std::mt19937_64 gen(seed);
    for (std::uint64_t i = 0; i < shots; ++i) {
        // Top 53 bits -> uniform double in [0, 1).
        const double u = double(gen() >> 11) * 0x1.0p-53;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        std::size_t idx = std::size_t(it - cumulative.begin());
        if (idx >= cumulative.size()) idx = cumulative.size() - 1; // rounding guard
        ++out.counts[idx];
    }
    return out;
}

double decode_phase(std::uint64_t outcome, int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits)
        throw SizeOutOfRange("decode_phase: register of " + std::to_string(n_qubits) +
                             " qubits outside [1, " + std::to_string(kMaxQubits) + "]");
    const std::size_t dim = dim_for_qubits(n_qubits);
    if (outcome >= dim)
        throw IndexOutOfRange("decode_phase: outcome " + std::to_string(outcome) + " >= " +
                              std::to_string(dim));
    return double(outcome) / double(dim);
}

std::string histogram_csv(const OutcomeDistribution& d, const ShotCounts* counts) {
    std::string out = "outcome_binary,outcome_decimal,probability,counts\n";
    char buf[96];
    for (std::size_t m = 0; m < d.probs.size(); ++m) {
        std::string binary(std::size_t(d.n_qubits), '0');
        for (int b = 0; b < d.n_qubits; ++b)
            if (m & (std::size_t{1} << (d.n_qubits - 1 - b))) binary[std::size_t(b)] = '1';
        std::snprintf(buf, sizeof buf, "%s,%zu,%.9f,", binary.c_str(), m, d.probs[m]);
        out += buf;
        if (counts == nullptr) {
            out += "—"; // em-dash: no shots were taken
        } else {
            const auto it = counts->counts.find(m);
            const std::uint64_t c = (it == counts->counts.end()) ? 0 : it->second;
            out += std::to_string(c);
        }
        out += '\n';
    }
    return out;
}

} // namespace qftlab
