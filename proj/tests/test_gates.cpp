#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "qftlab/errors.hpp"
#include "qftlab/gates.hpp"
#include "test_util.hpp"

using namespace qftlab;
using testutil::max_abs_diff;

namespace {
constexpr double kSqrtHalf = 0.70710678118654752440;
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("hadamard columns and involution") {
    const GateMatrix h = hadamard();
    CHECK(h(0, 0) == Complex{kSqrtHalf, 0});
    CHECK(h(0, 1) == Complex{kSqrtHalf, 0});
    CHECK(h(1, 0) == Complex{kSqrtHalf, 0});
    CHECK(h(1, 1) == Complex{-kSqrtHalf, 0});
    CHECK(h.is_unitary());
    CHECK(max_abs_diff(h * h, GateMatrix::identity(1)) < 1e-15);

    const StateVector h1 = apply_full(h, StateVector::basis(1, 1));
    CHECK(std::abs(h1[0] - Complex{kSqrtHalf, 0}) < 1e-15);
    CHECK(std::abs(h1[1] - Complex{-kSqrtHalf, 0}) < 1e-15);
}

TEST_CASE("phase gate") {
    CHECK(max_abs_diff(phase(0.0), GateMatrix::identity(1)) == 0.0);

    const GateMatrix pz = phase(kPi);
    CHECK(pz(1, 1).real() == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(std::abs(pz(1, 1).imag()) < 1e-15);

    // P(2π·5/16)|1> rotates the amplitude to e^{2πi·5/16}.
    const double theta = 2.0 * kPi * 5.0 / 16.0;
    const StateVector s = apply_full(phase(theta), StateVector::basis(1, 1));
    CHECK(std::abs(s[1] - Complex{std::cos(theta), std::sin(theta)}) == 0.0);
    CHECK(std::abs(s[0]) == 0.0);

    for (double a : {0.0, 0.3, 1.7, kPi, 5.0, -2.4}) CHECK(phase(a).is_unitary());
    CHECK_THROWS_AS(phase(std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS(phase(std::numeric_limits<double>::infinity()), std::invalid_argument);
}

TEST_CASE("identity gate") {
    CHECK(max_abs_diff(identity_gate(), GateMatrix::identity(1)) == 0.0);
    const StateVector r = testutil::random_state(1, 3);
    CHECK(max_abs_diff(apply_full(identity_gate(), r).amps(), r.amps()) == 0.0);
}

TEST_CASE("swap_gate worked examples") {
    // SWAP(0,1) on 2 qubits: |01> -> |10>.
    const StateVector s = apply_full(swap_gate(0, 1, 2), StateVector::basis(2, 1));
    CHECK(s[2] == Complex{1, 0});
    CHECK(std::abs(s[1]) == 0.0);

    // Involution.
    CHECK(max_abs_diff(swap_gate(0, 1, 2) * swap_gate(0, 1, 2), GateMatrix::identity(2)) == 0.0);
    CHECK(swap_gate(0, 1, 2).is_unitary());

    // SWAP(0,2) on 3 qubits exchanges the outer bits: indices 1<->4, 3<->6;
    // 0,2,5,7 are fixed points.
    const GateMatrix sw = swap_gate(0, 2, 3);
    CHECK(sw.is_unitary());
    CHECK(sw(4, 1) == Complex{1, 0});
    CHECK(sw(1, 4) == Complex{1, 0});
    CHECK(sw(6, 3) == Complex{1, 0});
    CHECK(sw(3, 6) == Complex{1, 0});
    for (std::size_t d : {0u, 2u, 5u, 7u}) CHECK(sw(d, d) == Complex{1, 0});
    CHECK(sw(1, 1) == Complex{0, 0});

    // Symmetric in its qubit arguments.
    CHECK(max_abs_diff(swap_gate(2, 0, 3), sw) == 0.0);

    CHECK_THROWS_AS(swap_gate(1, 1, 2), EqualIndices);
    CHECK_THROWS_AS(swap_gate(0, 5, 3), IndexOutOfRange);
    CHECK_THROWS_AS(swap_gate(-1, 0, 2), IndexOutOfRange);
    CHECK_THROWS_AS(swap_gate(0, 1, kMaxDenseQubits + 1), SizeOutOfRange);
}

TEST_CASE("controlled worked examples") {
    // CNOT = controlled-X with control 0, target 1: |10> -> |11>.
    const GateMatrix x = GateMatrix::unitary(1, {{0, 0}, {1, 0}, {1, 0}, {0, 0}});
    const GateMatrix cnot = controlled(x, 0, 1, 2);
    CHECK(cnot.is_unitary());
    const StateVector s = apply_full(cnot, StateVector::basis(2, 2));
    CHECK(s[3] == Complex{1, 0});
    // |00> and |01> are untouched.
    CHECK(apply_full(cnot, StateVector::basis(2, 0))[0] == Complex{1, 0});
    CHECK(apply_full(cnot, StateVector::basis(2, 1))[1] == Complex{1, 0});

    // Controlled-phase is diagonal: e^{iφ} exactly where both bits are set.
    const double phi = 0.81;
    const Complex e{std::cos(phi), std::sin(phi)};
    for (int c = 0; c < 3; ++c)
        for (int t = 0; t < 3; ++t) {
            if (c == t) continue;
            const GateMatrix cp = controlled(phase(phi), c, t, 3);
            CHECK(cp.is_unitary());
            for (std::uint64_t d = 0; d < 8; ++d) {
                const bool cbit = (d >> (2 - c)) & 1u;
                const bool tbit = (d >> (2 - t)) & 1u;
                const Complex want = (cbit && tbit) ? e : Complex{1, 0};
                CHECK(std::abs(cp(d, d) - want) < 1e-15);
            }
        }

    // Control/target symmetry of controlled-phase.
    CHECK(max_abs_diff(controlled(phase(phi), 2, 0, 3), controlled(phase(phi), 0, 2, 3)) == 0.0);

    CHECK_THROWS_AS(controlled(swap_gate(0, 1, 2), 0, 1, 3), BadArity);
    CHECK_THROWS_AS(controlled(hadamard(), 2, 2, 3), EqualIndices);
    CHECK_THROWS_AS(controlled(hadamard(), 0, 4, 3), IndexOutOfRange);
    CHECK_THROWS_AS(controlled(hadamard(), 0, 1, kMaxDenseQubits + 1), SizeOutOfRange);
}

TEST_CASE("controlled acts as U on the control-set subspace") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const GateMatrix u = testutil::random_unitary1(seed);
        const GateMatrix cu = controlled(u, 1, 2, 3); // control q1, target q2
        CHECK(cu.is_unitary());
        for (std::uint64_t d = 0; d < 8; ++d) {
            const StateVector in = StateVector::basis(3, d);
            const StateVector out = apply_full(cu, in);
            if ((d >> 1) & 1u) { // control bit set -> U on the target qubit
                const StateVector want = apply_local(u, {2}, in);
                CHECK(max_abs_diff(out.amps(), want.amps()) < 1e-12);
            } else {
                CHECK(max_abs_diff(out.amps(), in.amps()) < 1e-15);
            }
        }
    }
}

TEST_CASE("phase kickback on |11>") {
    for (double phi = 0.1; phi < 6.3; phi += 0.61) {
        const GateMatrix cp = controlled(phase(phi), 0, 1, 2);
        const StateVector out = apply_full(cp, StateVector::basis(2, 3));
        CHECK(std::abs(out[3] - Complex{std::cos(phi), std::sin(phi)}) < 1e-15);
        const StateVector idle = apply_full(cp, StateVector::basis(2, 1));
        CHECK(idle[1] == Complex{1, 0});
    }
}

TEST_CASE("projectors") {
    const GateMatrix p0 = projector(0);
    const GateMatrix p1 = projector(1);
    CHECK(p0(0, 0) == Complex{1, 0});
    CHECK(p0(1, 1) == Complex{0, 0});
    CHECK(p1(1, 1) == Complex{1, 0});

    // Idempotent, and P0 + P1 = I entrywise.
    CHECK(max_abs_diff(p0 * p0, p0) == 0.0);
    CHECK(max_abs_diff(p1 * p1, p1) == 0.0);
    const GateMatrix id = GateMatrix::identity(1);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(p0.entries()[i] + p1.entries()[i] == id.entries()[i]);

    // P0|1> = 0, P1(α|0> + β|1>) = β|1>.
    const std::vector<Complex> one{{0, 0}, {1, 0}};
    const auto killed = matvec(p0, one);
    CHECK(vec_norm(killed) == 0.0);
    const std::vector<Complex> mix{{0.6, 0}, {0, 0.8}};
    const auto kept = matvec(p1, mix);
    CHECK(kept[0] == Complex{0, 0});
    CHECK(kept[1] == Complex{0, 0.8});

    CHECK_FALSE(p0.is_unitary());
    CHECK_THROWS_AS(projector(2), std::invalid_argument);
    CHECK_THROWS_AS(projector(-1), std::invalid_argument);
}
