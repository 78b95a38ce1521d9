#include "qftlab/gate_matrix.hpp"

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

#include "qftlab/errors.hpp"

namespace qftlab {
namespace {

// Shape validation shared by the factories: 1 <= arity <= kMaxDenseQubits
// and entries.size() == dim^2.
std::size_t checked_dim(int arity, std::size_t n_entries, const char* who) {
    if (arity < 1 || arity > kMaxDenseQubits)
        throw SizeOutOfRange(std::string(who) + ": arity " + std::to_string(arity) +
                             " outside [1, " + std::to_string(kMaxDenseQubits) + "]");
    const std::size_t dim = dim_for_qubits(arity);
    if (n_entries != dim * dim)
        throw DimensionMismatch(std::string(who) + ": expected " +
                                std::to_string(dim * dim) + " entries for arity " +
                                std::to_string(arity) + ", got " +
                                std::to_string(n_entries));
    return dim;
}

// Validates a target list against a register of n qubits and returns the
// global bit positions (bit 0 = least significant) for each target.
std::vector<int> target_bit_positions(int arity, const std::vector<int>& targets,
                                      int n_qubits, const char* who) {
    if (static_cast<std::size_t>(arity) != targets.size())
        throw DimensionMismatch(std::string(who) + ": gate arity " + std::to_string(arity) +
                                " does not match " + std::to_string(targets.size()) +
                                " target(s)");
    std::vector<int> pos(targets.size());
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i] < 0 || targets[i] >= n_qubits)
            throw IndexOutOfRange(std::string(who) + ": target qubit " +
                                  std::to_string(targets[i]) + " outside register of " +
                                  std::to_string(n_qubits));
        for (std::size_t j = 0; j < i; ++j)
            if (targets[j] == targets[i])
                throw DuplicateTarget(std::string(who) + ": qubit " +
                                      std::to_string(targets[i]) + " listed twice");
        // Big-endian: qubit q occupies bit (n-1-q) of the basis index.
        pos[i] = n_qubits - 1 - targets[i];
    }
    return pos;
}

} // namespace

GateMatrix GateMatrix::unitary(int arity, std::vector<Complex> entries) {
    const std::size_t dim = checked_dim(arity, entries.size(), "GateMatrix::unitary");
    GateMatrix g(arity, dim, std::move(entries));
    if (!g.is_unitary(kNormTol))
        throw std::invalid_argument("GateMatrix::unitary: U†U deviates from I by more than 1e-10");
    return g;
}

GateMatrix GateMatrix::matrix(int arity, std::vector<Complex> entries) {
    const std::size_t dim = checked_dim(arity, entries.size(), "GateMatrix::matrix");
    return GateMatrix(arity, dim, std::move(entries));
}

GateMatrix GateMatrix::identity(int arity) {
    const std::size_t dim = checked_dim(arity, dim_for_qubits(arity) * dim_for_qubits(arity),
                                        "GateMatrix::identity");
    std::vector<Complex> e(dim * dim, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = Complex{1.0, 0.0};
    return GateMatrix(arity, dim, std::move(e));
}

GateMatrix GateMatrix::dagger() const {
    std::vector<Complex> out(dim_ * dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c)
            out[c * dim_ + r] = std::conj(entries_[r * dim_ + c]);
    return GateMatrix(arity_, dim_, std::move(out));
}

bool GateMatrix::is_unitary(double tol) const {
    // Entrywise check of U†U against the identity.
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            Complex acc{0.0, 0.0};
            for (std::size_t k = 0; k < dim_; ++k)
                acc += std::conj(entries_[k * dim_ + r]) * entries_[k * dim_ + c];
            const Complex want = (r == c) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
            if (std::abs(acc - want) > tol) return false;
        }
    }
    return true;
}

GateMatrix operator*(const GateMatrix& a, const GateMatrix& b) {
    if (a.arity() != b.arity())
        throw DimensionMismatch("GateMatrix product: arity " + std::to_string(a.arity()) +
                                " vs " + std::to_string(b.arity()));
    const std::size_t dim = a.dim();
    std::vector<Complex> out(dim * dim, Complex{0.0, 0.0});
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t k = 0; k < dim; ++k) {
            const Complex ark = a(r, k);
            if (ark == Complex{0.0, 0.0}) continue;
            for (std::size_t c = 0; c < dim; ++c) out[r * dim + c] += ark * b(k, c);
        }
    return GateMatrix::matrix(a.arity(), std::move(out));
}

GateMatrix kron_mat(const GateMatrix& a, const GateMatrix& b) {
    const int arity = a.arity() + b.arity();
    if (arity > kMaxDenseQubits)
        throw SizeOutOfRange("kron_mat: combined arity " + std::to_string(arity) +
                             " exceeds " + std::to_string(kMaxDenseQubits));
    const std::size_t da = a.dim(), db = b.dim(), dim = da * db;
    std::vector<Complex> out(dim * dim);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j)
            for (std::size_t k = 0; k < db; ++k)
                for (std::size_t l = 0; l < db; ++l)
                    out[(i * db + k) * dim + (j * db + l)] = a(i, j) * b(k, l);
    return GateMatrix::matrix(arity, std::move(out));
}

GateMatrix embed(const GateMatrix& u, const std::vector<int>& targets, int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxDenseQubits)
        throw SizeOutOfRange("embed: register of " + std::to_string(n_qubits) +
                             " qubits outside [1, " + std::to_string(kMaxDenseQubits) + "]");
    const std::vector<int> pos = target_bit_positions(u.arity(), targets, n_qubits, "embed");
    const int k = u.arity();
    const std::size_t dim = dim_for_qubits(n_qubits);

    std::uint64_t target_mask = 0;
    for (int p : pos) target_mask |= std::uint64_t{1} << p;
    const std::uint64_t rest_mask = (dim - 1) & ~target_mask;

    // Local index of a basis state: targets[0] supplies the local MSB.
    auto local = [&](std::uint64_t idx) {
        std::uint64_t l = 0;
        for (int j = 0; j < k; ++j) l |= ((idx >> pos[j]) & 1u) << (k - 1 - j);
        return l;
    };

    std::vector<Complex> out(dim * dim, Complex{0.0, 0.0});
    for (std::uint64_t r = 0; r < dim; ++r)
        for (std::uint64_t c = 0; c < dim; ++c)
            if ((r & rest_mask) == (c & rest_mask))
                out[r * dim + c] = u(local(r), local(c));
    return GateMatrix::matrix(n_qubits, std::move(out));
}

std::vector<Complex> matvec(const GateMatrix& m, std::span<const Complex> v) {
    const std::size_t dim = m.dim();
    if (v.size() != dim)
        throw DimensionMismatch("matvec: matrix dim " + std::to_string(dim) +
                                " vs vector length " + std::to_string(v.size()));
    std::vector<Complex> out(dim, Complex{0.0, 0.0});
    for (std::size_t r = 0; r < dim; ++r) {
        Complex acc{0.0, 0.0};
        for (std::size_t c = 0; c < dim; ++c) acc += m(r, c) * v[c];
        out[r] = acc;
    }
    return out;
}

StateVector apply_full(const GateMatrix& u, const StateVector& s) {
    if (u.arity() != s.n_qubits())
        throw DimensionMismatch("apply_full: gate arity " + std::to_string(u.arity()) +
                                " vs register of " + std::to_string(s.n_qubits()));
    return StateVector::from_amplitudes(matvec(u, s.amps()));
}

StateVector apply_local(const GateMatrix& u, const std::vector<int>& targets,
                        const StateVector& s) {
    const int n = s.n_qubits();
    const std::vector<int> pos = target_bit_positions(u.arity(), targets, n, "apply_local");
    const int k = u.arity();
    const std::size_t dim = s.dim();
    const std::size_t local_dim = u.dim();

    std::uint64_t target_mask = 0;
    for (int p : pos) target_mask |= std::uint64_t{1} << p;

    // offset[l] places local index l (targets[0] = local MSB) into the
    // global index at the target bit positions.
    std::vector<std::uint64_t> offset(local_dim, 0);
    for (std::size_t l = 0; l < local_dim; ++l)
        for (int j = 0; j < k; ++j)
            offset[l] |= ((l >> (k - 1 - j)) & 1u) << pos[j];

    std::vector<Complex> out(s.amps().begin(), s.amps().end());
    std::vector<Complex> gathered(local_dim);
    for (std::uint64_t base = 0; base < dim; ++base) {
        if (base & target_mask) continue; // not a zero-pattern of the target bits
        for (std::size_t l = 0; l < local_dim; ++l) gathered[l] = out[base | offset[l]];
        for (std::size_t r = 0; r < local_dim; ++r) {
            Complex acc{0.0, 0.0};
            for (std::size_t c = 0; c < local_dim; ++c) acc += u(r, c) * gathered[c];
            out[base | offset[r]] = acc;
        }
    }
    return StateVector::from_amplitudes(std::move(out));
}

} // namespace qftlab
