#include "qftlab/encoding.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qftlab/errors.hpp"

namespace qftlab {
namespace {

void check_register(int n_qubits, const char* who) {
    if (n_qubits < 1 || n_qubits > kMaxQubits)
        throw SizeOutOfRange(std::string(who) + ": register of " + std::to_string(n_qubits) +
                             " qubits outside [1, " + std::to_string(kMaxQubits) + "]");
}

double bits_value(const std::vector<int>& bits) {
    double v = 0.0;
    for (std::size_t t = 0; t < bits.size(); ++t) v += bits[t] * std::exp2(-double(t + 1));
    return v;
}

// Strict double parse of a whole token.
double parse_number(const std::string& token, const std::string& field) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(token, &used);
    } catch (const std::exception&) {
        throw ConfigInvalid("signal: " + field + " '" + token + "' is not a number");
    }
    if (used != token.size())
        throw ConfigInvalid("signal: " + field + " '" + token + "' has trailing characters");
    return v;
}

} // namespace

DyadicPhase dyadic_from_bits(const std::vector<int>& bits) {
    if (bits.empty())
        throw std::invalid_argument("dyadic_from_bits: empty bit list");
    for (int b : bits)
        if (b != 0 && b != 1)
            throw std::invalid_argument("dyadic_from_bits: bits must be 0 or 1, got " +
                                        std::to_string(b));
    return DyadicPhase{bits, bits_value(bits)};
}

DyadicPhase double_phase(const DyadicPhase& p) {
    std::vector<int> shifted(p.bits.begin() + (p.bits.empty() ? 0 : 1), p.bits.end());
    const double v = bits_value(shifted);
    return DyadicPhase{std::move(shifted), v};
}

SignalSpec parse_signal_spec(const std::string& text, int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits)
        throw ConfigInvalid("n_qubits: " + std::to_string(n_qubits) + " outside [1, " +
                            std::to_string(kMaxQubits) + "]");
    SignalSpec spec;
    spec.n_qubits = n_qubits;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        const std::string pair = text.substr(start, comma - start);
        const std::size_t colon = pair.find(':');
        if (pair.empty() || colon == std::string::npos)
            throw ConfigInvalid("signal: expected 'phase:amplitude', got '" + pair + "'");
        SignalComponent comp;
        comp.phase_bins = parse_number(pair.substr(0, colon), "phase");
        comp.amplitude = parse_number(pair.substr(colon + 1), "amplitude");
        if (!std::isfinite(comp.phase_bins) || comp.phase_bins < 0.0)
            throw ConfigInvalid("signal: phase " + pair.substr(0, colon) +
                                " must be finite and >= 0");
        if (!std::isfinite(comp.amplitude) || comp.amplitude <= 0.0)
            throw ConfigInvalid("signal: amplitude " + pair.substr(colon + 1) +
                                " must be finite and > 0");
        spec.components.push_back(comp);
        start = comma + 1;
    }
    if (spec.components.empty())
        throw ConfigInvalid("signal: component list is empty");
    return spec;
}

std::string signal_spec_text(const SignalSpec& spec) {
    std::string out;
    char buf[64];
    for (std::size_t i = 0; i < spec.components.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%s%.9g:%.9g", i ? "," : "",
                      spec.components[i].phase_bins, spec.components[i].amplitude);
        out += buf;
    }
    return out;
}

StateVector prepare_uniform(int n_qubits) {
    check_register(n_qubits, "prepare_uniform");
    const std::size_t dim = dim_for_qubits(n_qubits);
    const double a = 1.0 / std::sqrt(double(dim));
    return StateVector::from_amplitudes(std::vector<Complex>(dim, Complex{a, 0.0}));
}

StateVector encode_phase(double theta, int n_qubits) {
    check_register(n_qubits, "encode_phase");
    if (!std::isfinite(theta))
        throw std::invalid_argument("encode_phase: theta must be finite");
    // Reduce to [0, 1) first: theta and theta+1 encode identical states, and
    // the reduction keeps dyadic inputs exact (17/16 -> 1/16 bit for bit).
    const double theta_mod = theta - std::floor(theta);
    const std::size_t dim = dim_for_qubits(n_qubits);
    const double scale = 1.0 / std::sqrt(double(dim));
    std::vector<Complex> amps(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        // Keep the argument of cos/sin small: theta·k mod 1 before the 2π.
        const double turns = std::fmod(theta_mod * double(k), 1.0);
        const double angle = 2.0 * std::numbers::pi * turns;
        amps[k] = Complex{scale * std::cos(angle), scale * std::sin(angle)};
    }
    return StateVector::from_amplitudes(std::move(amps));
}

StateVector encode_signal(const SignalSpec& spec) {
    check_register(spec.n_qubits, "encode_signal");
    if (spec.components.empty())
        throw std::invalid_argument("encode_signal: component list is empty");
    const std::size_t dim = dim_for_qubits(spec.n_qubits);
    std::vector<Complex> accum(dim, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < spec.components.size(); ++i) {
        const SignalComponent& comp = spec.components[i];
        if (!std::isfinite(comp.phase_bins) || comp.phase_bins < 0.0)
            throw std::invalid_argument("encode_signal: component " + std::to_string(i) +
                                        " phase must be finite and >= 0");
        if (!std::isfinite(comp.amplitude) || comp.amplitude <= 0.0)
            throw std::invalid_argument("encode_signal: component " + std::to_string(i) +
                                        " amplitude must be finite and > 0");
        const StateVector part = encode_phase(comp.phase_bins / double(dim), spec.n_qubits);
        for (std::size_t k = 0; k < dim; ++k) accum[k] += comp.amplitude * part[k];
    }
    return StateVector::normalized(std::move(accum));
}

} // namespace qftlab
