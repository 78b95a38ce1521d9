// Projective measurement: the exact outcome distribution, seeded shot
// sampling, phase decoding, and the CSV histogram export.
//
// Sampling RNG is pinned so golden files stay bit-stable: std::mt19937_64
// seeded with the caller's seed, mapped to uniform doubles in [0,1) via
// (gen() >> 11) * 2^-53, consumed by cumulative-probability inversion — one
// draw per shot. Experiment runners that need several independent streams
// derive them as seed + run_index.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qftlab/state_vector.hpp"

namespace qftlab {

struct OutcomeDistribution {
    int n_qubits = 0;
    std::vector<double> probs; // length 2^n, sums to 1 within 1e-10
};

struct ShotCounts {
    std::map<std::uint64_t, std::uint64_t> counts; // outcome -> hits, zero rows absent
    std::uint64_t shots = 0;
};

// probs[m] = |amps[m]|^2 — the squared norm left after projecting every
// qubit onto the bits of m. Does not mutate the state.
OutcomeDistribution distribution(const StateVector& s);

// Multinomial draw of `shots` outcomes; identical (state, shots, seed)
// yields identical counts.
ShotCounts sample(const StateVector& s, std::uint64_t shots, std::uint64_t seed);

// outcome/2^n, the phase the outcome bin stands for (mod-1 residue).
double decode_phase(std::uint64_t outcome, int n_qubits);

// CSV export, header `outcome_binary,outcome_decimal,probability,counts`.
// Binary labels are big-endian (b1...bn); probabilities carry 9 decimal
// places; the counts column is an em-dash when counts is null (exact run).
std::string histogram_csv(const OutcomeDistribution& d, const ShotCounts* counts);

} // namespace qftlab
