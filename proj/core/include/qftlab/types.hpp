// Shared scalar types and numeric tolerances.
//
// Conventions used across the library:
//   * Bit ordering is big-endian: qubit 0 is the MOST significant bit of a
//     basis-state index. |b1 b2 ... bn> therefore reads left-to-right, and
//     the index of that basis state is sum_t b_t * 2^(n-t).
//   * Angles are radians unless a name says otherwise; signal phases are
//     "revolutions" (turns) where a name says so.

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>

namespace qftlab {

using Complex = std::complex<double>;

// Tolerance for unitarity and state-normalization invariants. Double
// precision at n <= 12 qubits leaves several digits of headroom below this.
inline constexpr double kNormTol = 1e-10;

// Tighter tolerance for algebraic identities (Kronecker mixed product,
// apply_local vs. embedded full matrix, involutions).
inline constexpr double kAlgebraTol = 1e-12;

// Desk-scale register limit. 2^14 amplitudes is the largest register any
// builder in this library will produce.
inline constexpr int kMaxQubits = 14;

inline constexpr std::size_t dim_for_qubits(int n_qubits) {
    return std::size_t{1} << n_qubits;
}

} // namespace qftlab
