// Gate-level circuits: the exact QFT / inverse-QFT builders, a sequential
// executor, and a dense-matrix view for oracle comparison.
//
// Sign convention: the QFT here is the e^{+2πi jk/N} transform, i.e. the
// conjugate of the classical DFT in analysis.hpp (which uses e^{-}). A final
// layer of SWAPs makes the circuit matrix literally equal to that conjugate
// DFT matrix rather than equal up to qubit reversal.

#pragma once

#include <string>
#include <vector>

#include "qftlab/gate_matrix.hpp"
#include "qftlab/state_vector.hpp"

namespace qftlab {

enum class OpKind { Hadamard, ControlledPhase, Swap };

struct CircuitOp {
    OpKind kind;
    // Hadamard: {qubit}. ControlledPhase: {control, target}.
    // Swap: {first, second}.
    std::vector<int> targets;
    // Radians; meaningful only for ControlledPhase.
    double angle = 0.0;
};

struct Circuit {
    int n_qubits = 0;
    std::vector<CircuitOp> ops;
};

// QFT on n qubits: per qubit j a Hadamard followed by controlled rotations
// CP(2π/2^{k-j+1}) from each lower qubit k > j, then the bit-reversal SWAP
// layer. Gate count: n H + n(n-1)/2 CP + floor(n/2) SWAP.
Circuit qft_circuit(int n_qubits);

// Same ops in reverse order with negated rotation angles; its matrix is the
// conjugate transpose of the QFT's.
Circuit iqft_circuit(int n_qubits);

// Applies the ops in order via apply_local.
StateVector run_circuit(const Circuit& c, const StateVector& s);

// Product of the embedded op matrices in application order. Oracle support;
// register capped at 6 qubits to keep the 2^n x 2^n products sane.
GateMatrix circuit_matrix(const Circuit& c);

// Line-based text form, one op per line: `H q0`, `CP q1 q0 angle=1.57079633`
// (control first), `SWAP q0 q3`. Angles printed with 9 significant digits.
std::string circuit_to_text(const Circuit& c);

} // namespace qftlab
