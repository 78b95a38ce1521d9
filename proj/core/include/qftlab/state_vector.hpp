// Dense complex state vector of an n-qubit register.
//
// A StateVector is a unit vector of 2^n amplitudes (norm 1 within kNormTol)
// and is immutable after construction; every operation returns a new value.
// Basis indices follow the big-endian convention fixed in types.hpp.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qftlab/types.hpp"

namespace qftlab {

class StateVector {
public:
    // Computational basis state |index> of an n-qubit register.
    static StateVector basis(int n_qubits, std::uint64_t index);

    // Wraps an amplitude vector that is already normalized. The length must
    // be a power of two; norm must be 1 within kNormTol.
    static StateVector from_amplitudes(std::vector<Complex> amps);

    // Rescales an arbitrary nonzero vector to unit norm. Throws ZeroVector
    // if the norm is below 1e-12.
    static StateVector normalized(std::vector<Complex> amps);

    int n_qubits() const noexcept { return n_qubits_; }
    std::size_t dim() const noexcept { return amps_.size(); }
    const Complex& operator[](std::size_t i) const noexcept { return amps_[i]; }
    std::span<const Complex> amps() const noexcept { return amps_; }

    // Euclidean norm; 1 within kNormTol by construction.
    double norm() const noexcept;

private:
    StateVector(int n_qubits, std::vector<Complex> amps)
        : n_qubits_(n_qubits), amps_(std::move(amps)) {}

    int n_qubits_;
    std::vector<Complex> amps_;
};

// Euclidean norm of a raw amplitude vector.
double vec_norm(std::span<const Complex> v);

// Kronecker product of two amplitude vectors:
// out[i * len(b) + j] = a[i] * b[j].
std::vector<Complex> kron_vec(std::span<const Complex> a, std::span<const Complex> b);

} // namespace qftlab
