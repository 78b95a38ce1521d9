#include "qftlab/state_vector.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "qftlab/errors.hpp"

namespace qftlab {
namespace {

// Qubit count for a power-of-two length in [2, 2^kMaxQubits], or -1.
int qubits_for_length(std::size_t len) {
    if (len < 2 || (len & (len - 1)) != 0) return -1;
    int n = 0;
    while (dim_for_qubits(n) < len) ++n;
    return n;
}

int checked_qubits(std::size_t len, const char* who) {
    const int n = qubits_for_length(len);
    if (n < 0)
        throw DimensionMismatch(std::string(who) + ": length " + std::to_string(len) +
                                " is not a power of two >= 2");
    if (n > kMaxQubits)
        throw SizeOutOfRange(std::string(who) + ": " + std::to_string(n) +
                             " qubits exceeds the supported maximum of " +
                             std::to_string(kMaxQubits));
    return n;
}

} // namespace

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
    if (n_qubits < 1 || n_qubits > kMaxQubits)
        throw SizeOutOfRange("basis: n_qubits " + std::to_string(n_qubits) +
                             " outside [1, " + std::to_string(kMaxQubits) + "]");
    const std::size_t dim = dim_for_qubits(n_qubits);
    if (index >= dim)
        throw IndexOutOfRange("basis: index " + std::to_string(index) + " >= " +
                              std::to_string(dim));
    std::vector<Complex> amps(dim, Complex{0.0, 0.0});
    amps[index] = Complex{1.0, 0.0};
    return StateVector(n_qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amps) {
    const int n = checked_qubits(amps.size(), "from_amplitudes");
    const double nrm = vec_norm(amps);
    if (std::abs(nrm - 1.0) > kNormTol)
        throw std::invalid_argument("from_amplitudes: norm " + std::to_string(nrm) +
                                    " differs from 1 by more than 1e-10");
    return StateVector(n, std::move(amps));
}

StateVector StateVector::normalized(std::vector<Complex> amps) {
    const int n = checked_qubits(amps.size(), "normalized");
    const double nrm = vec_norm(amps);
    if (nrm < 1e-12)
        throw ZeroVector("normalized: vector norm below 1e-12, nothing to rescale");
    for (Complex& a : amps) a /= nrm;
    return StateVector(n, std::move(amps));
}

double StateVector::norm() const noexcept { return vec_norm(amps_); }

double vec_norm(std::span<const Complex> v) {
    double sum = 0.0;
    for (const Complex& a : v) sum += std::norm(a);
    return std::sqrt(sum);
}

std::vector<Complex> kron_vec(std::span<const Complex> a, std::span<const Complex> b) {
    std::vector<Complex> out(a.size() * b.size());
    std::size_t i = 0;
    for (const Complex& x : a)
        for (const Complex& y : b) out[i++] = x * y;
    return out;
}

} // namespace qftlab
