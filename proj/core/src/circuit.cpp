#include "qftlab/circuit.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "qftlab/errors.hpp"
#include "qftlab/gates.hpp"

namespace qftlab {
namespace {

// Smallest-register matrix for an op; apply_local / embed place it at the
// op's actual targets. For two-qubit kinds the first listed target is the
// local most significant bit, matching the embedding convention.
GateMatrix local_matrix(const CircuitOp& op) {
    switch (op.kind) {
        case OpKind::Hadamard: return hadamard();
        case OpKind::ControlledPhase: return controlled(phase(op.angle), 0, 1, 2);
        case OpKind::Swap: return swap_gate(0, 1, 2);
    }
    throw std::invalid_argument("local_matrix: unknown op kind");
}

void check_register(int n_qubits, const char* who) {
    if (n_qubits < 1 || n_qubits > kMaxQubits)
        throw SizeOutOfRange(std::string(who) + ": register of " + std::to_string(n_qubits) +
                             " qubits outside [1, " + std::to_string(kMaxQubits) + "]");
}

} // namespace

Circuit qft_circuit(int n_qubits) {
    check_register(n_qubits, "qft_circuit");
    Circuit c;
    c.n_qubits = n_qubits;
    for (int j = 0; j < n_qubits; ++j) {
        c.ops.push_back({OpKind::Hadamard, {j}, 0.0});
        for (int k = j + 1; k < n_qubits; ++k) {
            // Qubit k (worth 2^{-(k+1)} of the phase) rotates qubit j by
            // 2π/2^{k-j+1}.
            const double angle = 2.0 * std::numbers::pi / std::exp2(k - j + 1);
            c.ops.push_back({OpKind::ControlledPhase, {k, j}, angle});
        }
    }
    // Bit-reversal layer: the product formula emits qubits in reversed
    // significance order.
    for (int j = 0; j < n_qubits / 2; ++j)
        c.ops.push_back({OpKind::Swap, {j, n_qubits - 1 - j}, 0.0});
    return c;
}

Circuit iqft_circuit(int n_qubits) {
    Circuit qft = qft_circuit(n_qubits);
    Circuit c;
    c.n_qubits = n_qubits;
    c.ops.reserve(qft.ops.size());
    for (auto it = qft.ops.rbegin(); it != qft.ops.rend(); ++it) {
        CircuitOp op = *it;
        if (op.kind == OpKind::ControlledPhase) op.angle = -op.angle;
        c.ops.push_back(std::move(op));
    }
    return c;
}

StateVector run_circuit(const Circuit& c, const StateVector& s) {
    if (c.n_qubits != s.n_qubits())
        throw DimensionMismatch("run_circuit: circuit register of " +
                                std::to_string(c.n_qubits) + " qubits vs state of " +
                                std::to_string(s.n_qubits()));
    StateVector out = s;
    for (const CircuitOp& op : c.ops) out = apply_local(local_matrix(op), op.targets, out);
    return out;
}

GateMatrix circuit_matrix(const Circuit& c) {
    if (c.n_qubits < 1 || c.n_qubits > 6)
        throw SizeOutOfRange("circuit_matrix: register of " + std::to_string(c.n_qubits) +
                             " qubits outside the oracle range [1, 6]");
    GateMatrix m = GateMatrix::identity(c.n_qubits);
    for (const CircuitOp& op : c.ops)
        m = embed(local_matrix(op), op.targets, c.n_qubits) * m;
    return m;
}

std::string circuit_to_text(const Circuit& c) {
    std::string out;
    char buf[64];
    for (const CircuitOp& op : c.ops) {
        switch (op.kind) {
            case OpKind::Hadamard:
                std::snprintf(buf, sizeof buf, "H q%d\n", op.targets[0]);
                break;
            case OpKind::ControlledPhase:
                std::snprintf(buf, sizeof buf, "CP q%d q%d angle=%.9g\n", op.targets[0],
                              op.targets[1], op.angle);
                break;
            case OpKind::Swap:
                std::snprintf(buf, sizeof buf, "SWAP q%d q%d\n", op.targets[0], op.targets[1]);
                break;
        }
        out += buf;
    }
    return out;
}

} // namespace qftlab
