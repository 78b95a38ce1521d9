// The concrete gate set: Hadamard, phase, identity, SWAP, controlled-U, and
// the computational-basis projectors.
//
// hadamard/phase/identity_gate return single-qubit (arity-1) matrices.
// swap_gate and controlled build the full n-qubit operator directly — they
// are oracle/test builders, capped at kMaxDenseQubits like embed. Circuits
// act on large registers through apply_local with the 2-qubit local forms
// (swap_gate(0,1,2), controlled(u,0,1,2)).

#pragma once

#include "qftlab/gate_matrix.hpp"

namespace qftlab {

// (1/√2) [[1,1],[1,-1]]; self-inverse.
GateMatrix hadamard();

// diag(1, e^{i·angle}); angle in radians, any finite value (wraparound is
// the caller's business).
GateMatrix phase(double angle);

// 2x2 identity.
GateMatrix identity_gate();

// Permutation matrix exchanging qubits p and q of an n-qubit register.
GateMatrix swap_gate(int p, int q, int n_qubits);

// |0><0|_control ⊗ I + |1><1|_control ⊗ U_target, identity on all other
// qubits. u must be a single-qubit gate.
GateMatrix controlled(const GateMatrix& u, int control, int target, int n_qubits);

// |bit><bit| — idempotent, self-adjoint, deliberately non-unitary. Consumed
// by measurement-style math via matvec, never by apply_full.
GateMatrix projector(int bit);

} // namespace qftlab
