// Dense operator matrices over qubit registers and the application kernels.
//
// A GateMatrix is a row-major 2^arity x 2^arity complex matrix with a
// declared arity. Library gate constructors produce unitaries; projectors
// and other non-unitary operators go through the unchecked matrix() factory
// so the unitarity invariant stays unconditional everywhere else.

#pragma once

#include <span>
#include <vector>

#include "qftlab/state_vector.hpp"
#include "qftlab/types.hpp"

namespace qftlab {

// Largest register for which a full 2^n x 2^n matrix may be materialized
// (embed, swap_gate, controlled, circuit_matrix oracles). Beyond this,
// apply_local is the only way to act on a state.
inline constexpr int kMaxDenseQubits = 10;

class GateMatrix {
public:
    // Validating factory: checks the shape and U†U = I within kNormTol.
    static GateMatrix unitary(int arity, std::vector<Complex> entries);

    // Shape-checked factory without the unitarity test, for operators that
    // are intentionally non-unitary (projectors) or unitary by construction
    // (Kronecker products, embeddings — validated separately in tests).
    static GateMatrix matrix(int arity, std::vector<Complex> entries);

    static GateMatrix identity(int arity);

    int arity() const noexcept { return arity_; }
    std::size_t dim() const noexcept { return dim_; }
    const Complex& operator()(std::size_t row, std::size_t col) const noexcept {
        return entries_[row * dim_ + col];
    }
    std::span<const Complex> entries() const noexcept { return entries_; }

    // Conjugate transpose.
    GateMatrix dagger() const;

    // U†U = I entrywise within tol. O(dim^3); meant for small matrices.
    bool is_unitary(double tol = kNormTol) const;

private:
    GateMatrix(int arity, std::size_t dim, std::vector<Complex> entries)
        : arity_(arity), dim_(dim), entries_(std::move(entries)) {}

    int arity_;
    std::size_t dim_;
    std::vector<Complex> entries_;
};

// Matrix product A·B of two operators of equal arity.
GateMatrix operator*(const GateMatrix& a, const GateMatrix& b);

// Kronecker product; output arity = arity(a) + arity(b), capped at
// kMaxDenseQubits.
GateMatrix kron_mat(const GateMatrix& a, const GateMatrix& b);

// The 2^n x 2^n operator that acts as u on the listed target qubits and as
// identity elsewhere. targets[0] becomes the most significant local bit of
// u's own index space. Oracle support only — n is capped at kMaxDenseQubits.
GateMatrix embed(const GateMatrix& u, const std::vector<int>& targets, int n_qubits);

// Raw matrix-vector product without state-vector invariants (projector
// pipelines, oracle arithmetic).
std::vector<Complex> matvec(const GateMatrix& m, std::span<const Complex> v);

// |X> = U|x> with a full-register operator; norm is re-checked on the way
// out, so u must be unitary.
StateVector apply_full(const GateMatrix& u, const StateVector& s);

// Same result as apply_full(embed(u, targets, n), s) without materializing
// the 2^n x 2^n matrix; cost O(2^n · 2^arity).
StateVector apply_local(const GateMatrix& u, const std::vector<int>& targets,
                        const StateVector& s);

} // namespace qftlab
