// State preparation: uniform superposition, single-phase states, weighted
// multi-phase superpositions, and dyadic (binary-fraction) phase arithmetic.
//
// Unit conventions: encode_phase takes theta in revolutions per step (one
// full turn = 1.0). SignalSpec phases are in *bins* — a phase of p means
// theta = p/2^n revolutions — matching how experiments are labeled
// ("phases {3, 5, 7}"). encode_signal is the single conversion point.

#pragma once

#include <string>
#include <vector>

#include "qftlab/state_vector.hpp"

namespace qftlab {

// Binary fraction 0.b1b2...bn = sum_t b_t / 2^t. The bit list may be empty
// (value 0), which is where repeated doubling ends up.
struct DyadicPhase {
    std::vector<int> bits;
    double value = 0.0;
};

// Builds a DyadicPhase from its bit list; bits must be 0/1 and nonempty.
DyadicPhase dyadic_from_bits(const std::vector<int>& bits);

// Mod-1 doubling: 2·(0.b1b2...) ≡ 0.b2b3... — drops the leading bit.
DyadicPhase double_phase(const DyadicPhase& p);

struct SignalComponent {
    double phase_bins;  // >= 0, in bins (theta·2^n); non-integer values leak
    double amplitude;   // > 0, finite
};

struct SignalSpec {
    std::vector<SignalComponent> components; // nonempty
    int n_qubits = 0;
};

// Parses the compact CLI form "3:1,5:2,7:4" (phase:amplitude pairs).
// Throws ConfigInvalid on syntax errors or invariant violations.
SignalSpec parse_signal_spec(const std::string& text, int n_qubits);

// Renders a spec back to the compact text form (9 significant digits).
std::string signal_spec_text(const SignalSpec& spec);

// All 2^n amplitudes equal to 2^{-n/2}.
StateVector prepare_uniform(int n_qubits);

// amps[k] = 2^{-n/2}·e^{2πi·theta·k}, theta in revolutions. theta and
// theta+1 produce identical states (period-1 aliasing).
StateVector encode_phase(double theta, int n_qubits);

// normalize( sum_j amplitude_j · encode_phase(phase_bins_j / 2^n, n) ).
// Throws ZeroVector if the superposition annihilates itself (impossible for
// specs that satisfy the positive-amplitude invariant).
StateVector encode_signal(const SignalSpec& spec);

} // namespace qftlab
