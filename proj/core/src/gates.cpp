#include "qftlab/gates.hpp"

#include <cmath>
#include <cstdint>
#include <string>

#include "qftlab/errors.hpp"

namespace qftlab {
namespace {

constexpr double kSqrtHalf = 0.70710678118654752440;

void check_pair(int p, int q, int n_qubits, const char* who) {
    if (n_qubits < 1 || n_qubits > kMaxDenseQubits)
        throw SizeOutOfRange(std::string(who) + ": register of " + std::to_string(n_qubits) +
                             " qubits outside [1, " + std::to_string(kMaxDenseQubits) + "]");
    if (p < 0 || p >= n_qubits || q < 0 || q >= n_qubits)
        throw IndexOutOfRange(std::string(who) + ": qubit pair (" + std::to_string(p) +
                              ", " + std::to_string(q) + ") outside register of " +
                              std::to_string(n_qubits));
    if (p == q)
        throw EqualIndices(std::string(who) + ": the two qubit arguments must differ, both are " +
                           std::to_string(p));
}

} // namespace

GateMatrix hadamard() {
    return GateMatrix::unitary(1, {Complex{kSqrtHalf, 0.0}, Complex{kSqrtHalf, 0.0},
                                   Complex{kSqrtHalf, 0.0}, Complex{-kSqrtHalf, 0.0}});
}

GateMatrix phase(double angle) {
    if (!std::isfinite(angle))
        throw std::invalid_argument("phase: angle must be finite");
    return GateMatrix::unitary(1, {Complex{1.0, 0.0}, Complex{0.0, 0.0}, Complex{0.0, 0.0},
                                   Complex{std::cos(angle), std::sin(angle)}});
}

GateMatrix identity_gate() { return GateMatrix::identity(1); }

GateMatrix swap_gate(int p, int q, int n_qubits) {
    check_pair(p, q, n_qubits, "swap_gate");
    const std::size_t dim = dim_for_qubits(n_qubits);
    const int pb = n_qubits - 1 - p; // big-endian bit positions
    const int qb = n_qubits - 1 - q;
    std::vector<Complex> out(dim * dim, Complex{0.0, 0.0});
    for (std::uint64_t c = 0; c < dim; ++c) {
        const std::uint64_t bp = (c >> pb) & 1u;
        const std::uint64_t bq = (c >> qb) & 1u;
        std::uint64_t r = c & ~((std::uint64_t{1} << pb) | (std::uint64_t{1} << qb));
        r |= (bq << pb) | (bp << qb);
        out[r * dim + c] = Complex{1.0, 0.0};
    }
    return GateMatrix::matrix(n_qubits, std::move(out));
}

GateMatrix controlled(const GateMatrix& u, int control, int target, int n_qubits) {
    if (u.arity() != 1)
        throw BadArity("controlled: expected a single-qubit gate, got arity " +
                       std::to_string(u.arity()));
    check_pair(control, target, n_qubits, "controlled");
    const std::size_t dim = dim_for_qubits(n_qubits);
    const int cb = n_qubits - 1 - control;
    const int tb = n_qubits - 1 - target;
    std::vector<Complex> out(dim * dim, Complex{0.0, 0.0});
    for (std::uint64_t c = 0; c < dim; ++c) {
        if (((c >> cb) & 1u) == 0) {
            out[c * dim + c] = Complex{1.0, 0.0}; // control clear: identity column
            continue;
        }
        const std::uint64_t tin = (c >> tb) & 1u;
        for (std::uint64_t tout = 0; tout < 2; ++tout) {
            const std::uint64_t r = (c & ~(std::uint64_t{1} << tb)) | (tout << tb);
            out[r * dim + c] = u(tout, tin);
        }
    }
    return GateMatrix::matrix(n_qubits, std::move(out));
}

GateMatrix projector(int bit) {
    if (bit != 0 && bit != 1)
        throw std::invalid_argument("projector: bit must be 0 or 1, got " + std::to_string(bit));
    std::vector<Complex> out(4, Complex{0.0, 0.0});
    out[bit == 0 ? 0 : 3] = Complex{1.0, 0.0};
    return GateMatrix::matrix(1, std::move(out));
}

} // namespace qftlab
