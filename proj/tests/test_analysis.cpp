#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include <json.hpp>

#include "qftlab/analysis.hpp"
#include "qftlab/circuit.hpp"
#include "qftlab/errors.hpp"
#include "qftlab/gates.hpp"
#include "test_util.hpp"

using namespace qftlab;
using testutil::max_abs_diff;

namespace {
constexpr double kPi = std::numbers::pi;

// Composite Simpson quadrature of a*e^{2πiδt} over [0, T] — the slow
// reference the closed form is checked against.
Complex simpson_exponential(double a, double delta, double T, int panels) {
    auto f = [&](double t) {
        const double ang = 2.0 * kPi * delta * t;
        return a * Complex{std::cos(ang), std::sin(ang)};
    };
    const double h = T / (2.0 * panels);
    Complex acc = f(0.0) + f(T);
    for (int i = 1; i < 2 * panels; ++i) acc += f(i * h) * ((i % 2) ? 4.0 : 2.0);
    return acc * (h / 3.0);
}

std::vector<Complex> tone(double a, double nu, std::size_t N) {
    std::vector<Complex> x(N);
    for (std::size_t n = 0; n < N; ++n) {
        const double ang = 2.0 * kPi * nu * double(n) / double(N);
        x[n] = a * Complex{std::cos(ang), std::sin(ang)};
    }
    return x;
}
} // namespace

TEST_CASE("dft worked examples") {
    // Impulse -> flat spectrum 1/sqrt(N).
    const std::vector<Complex> impulse{{1, 0}, {0, 0}, {0, 0}, {0, 0}};
    for (const Complex& c : dft(impulse)) CHECK(std::abs(c - Complex{0.5, 0}) < 1e-15);

    // Pure tone at bin 3 of 8: X_3 = sqrt(8) = 2*sqrt(2), all else ~0.
    const auto spectrum = dft(tone(1.0, 3.0, 8));
    CHECK(std::abs(spectrum[3] - Complex{2.0 * std::sqrt(2.0), 0}) < 1e-12);
    for (std::size_t k = 0; k < 8; ++k)
        if (k != 3) CHECK(std::abs(spectrum[k]) < 1e-10);

    CHECK_THROWS_AS(dft(std::vector<Complex>{}), std::invalid_argument);
}

TEST_CASE("dft preserves energy (Parseval)") {
    for (std::size_t N : {2u, 4u, 8u, 16u, 64u}) {
        std::vector<Complex> sig(N);
        std::mt19937_64 gen(N);
        std::normal_distribution<double> nd(0.0, 1.0);
        for (Complex& c : sig) c = Complex{nd(gen), nd(gen)};
        const auto X = dft(sig);
        double ein = 0.0, eout = 0.0;
        for (const Complex& c : sig) ein += std::norm(c);
        for (const Complex& c : X) eout += std::norm(c);
        CHECK(eout == doctest::Approx(ein).epsilon(1e-12));
    }
}

TEST_CASE("dft_matrix") {
    // n = 1 is the Hadamard.
    CHECK(max_abs_diff(dft_matrix(1), hadamard()) < 1e-15);

    for (int n = 1; n <= 4; ++n) CHECK(dft_matrix(n).is_unitary());

    // Matrix route equals the direct dft on random input.
    const auto x = testutil::random_amplitudes(3, 17);
    CHECK(max_abs_diff(matvec(dft_matrix(3), x), dft(x)) < 1e-12);

    CHECK_THROWS_AS(dft_matrix(0), SizeOutOfRange);
    CHECK_THROWS_AS(dft_matrix(7), SizeOutOfRange);
}

TEST_CASE("sinc_reconstruct hits samples exactly on the grid") {
    SampledSignal sig;
    sig.sample_rate = 8.0;
    sig.f_c = 3.0;
    for (int n = 0; n < 64; ++n)
        sig.samples.push_back(std::cos(2.0 * kPi * 3.0 * double(n) / 8.0));
    for (int n : {0, 1, 7, 31, 63})
        CHECK(sinc_reconstruct(sig, double(n) / 8.0) == sig.samples[std::size_t(n)]);

    CHECK_THROWS_AS(sinc_reconstruct(sig, 1.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(sinc_reconstruct(SampledSignal{0.0, {1.0}, 1.0}, 0.5),
                    std::invalid_argument);
    CHECK(sinc_reconstruct(SampledSignal{8.0, {}, 1.0}, 0.5) == 0.0);
}

TEST_CASE("sinc_reconstruct recovers an oversampled cosine") {
    // f_c = 3 Hz at f_s = 8 > 2 f_c; probes stay >= 64 s from either edge so
    // the 500-sample window never truncates asymmetrically.
    SampledSignal sig;
    sig.sample_rate = 8.0;
    sig.f_c = 3.0;
    for (int n = 0; n < 2048; ++n)
        sig.samples.push_back(std::cos(2.0 * kPi * 3.0 * double(n) / 8.0));

    double worst = 0.0;
    for (double t = 80.0; t < 176.0; t += 0.731) {
        const double err = std::abs(sinc_reconstruct(sig, t) - std::cos(2.0 * kPi * 3.0 * t));
        worst = std::max(worst, err);
    }
    CHECK(worst < 1e-2);
}

TEST_CASE("sinc_reconstruct error shrinks as the window doubles") {
    SampledSignal sig;
    sig.sample_rate = 8.0;
    sig.f_c = 3.0;
    for (int n = 0; n < 2048; ++n)
        sig.samples.push_back(std::cos(2.0 * kPi * 3.0 * double(n) / 8.0));

    double prev = std::numeric_limits<double>::infinity();
    double first = 0.0, last = 0.0;
    for (int window = 4; window <= 512; window *= 2) {
        double worst = 0.0;
        for (double t = 80.0; t < 176.0; t += 0.731) {
            const double err =
                std::abs(sinc_reconstruct(sig, t, window) - std::cos(2.0 * kPi * 3.0 * t));
            worst = std::max(worst, err);
        }
        if (window == 4) first = worst;
        last = worst;
        CHECK(worst <= prev * 1.05); // monotone within noise
        prev = worst;
    }
    CHECK(last < first * 0.1);
}

TEST_CASE("undersampling aliases the tone") {
    // f_s = 4 < 2 f_c: the 3 Hz tone is indistinguishable from 1 Hz, so the
    // reconstruction error against the true signal is O(1).
    SampledSignal sig;
    sig.sample_rate = 4.0;
    sig.f_c = 3.0;
    for (int n = 0; n < 1024; ++n)
        sig.samples.push_back(std::cos(2.0 * kPi * 3.0 * double(n) / 4.0));

    double worst = 0.0;
    for (double t = 80.0; t < 176.0; t += 0.731) {
        const double err = std::abs(sinc_reconstruct(sig, t) - std::cos(2.0 * kPi * 3.0 * t));
        worst = std::max(worst, err);
    }
    CHECK(worst > 0.5);

    // ... and it is the 1 Hz alias the sum actually converges to.
    double alias_worst = 0.0;
    for (double t = 80.0; t < 176.0; t += 0.731) {
        const double err = std::abs(sinc_reconstruct(sig, t) - std::cos(2.0 * kPi * 1.0 * t));
        alias_worst = std::max(alias_worst, err);
    }
    CHECK(alias_worst < 1e-2);
}

TEST_CASE("leakage_integral worked examples") {
    // On-resonance: the integral is a*T and the bound degenerates to |a|*T.
    const LeakageIntegral on = leakage_integral(1.5, 2.0, 2.0, 2.5);
    CHECK(on.value == Complex{3.75, 0.0});
    CHECK(on.bound == 3.75);
    CHECK(on.t_jk == 2.5);
    CHECK(on.n_jk == 0);

    // Whole number of difference periods: exact zero.
    const LeakageIntegral whole = leakage_integral(1.0, 2.0, 0.0, 1.5);
    CHECK(std::abs(whole.value) == 0.0);
    CHECK(whole.n_jk == 3);
    CHECK(whole.t_jk == 0.0);
    CHECK(whole.bound == 0.0);

    // Half period at delta = 1/2: |value| = 2/pi, remainder is the full T.
    const LeakageIntegral half = leakage_integral(1.0, 0.5, 0.0, 1.0);
    CHECK(std::abs(half.value) == doctest::Approx(2.0 / kPi).epsilon(1e-12));
    CHECK(half.value.imag() == doctest::Approx(2.0 / kPi).epsilon(1e-12));
    CHECK(std::abs(half.value.real()) < 1e-15);
    CHECK(half.t_jk == 1.0);
    CHECK(half.n_jk == 0);
    CHECK(half.bound == 1.0);

    // Negative detuning mirrors the value into the conjugate.
    const LeakageIntegral neg = leakage_integral(1.0, 0.0, 0.5, 1.0);
    CHECK(std::abs(neg.value - std::conj(half.value)) < 1e-15);
    CHECK(neg.bound == half.bound);

    CHECK_THROWS_AS(leakage_integral(1.0, 1.0, 0.0, 0.0), NonpositiveDuration);
    CHECK_THROWS_AS(leakage_integral(1.0, 1.0, 0.0, -2.0), NonpositiveDuration);
    CHECK_THROWS_AS(leakage_integral(std::nan(""), 1.0, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("leakage_integral obeys its own bound and period split") {
    for (double delta : {-2.5, -1.2, -0.37, -0.1, 0.1, 0.37, 1.2, 2.5})
        for (double T : {0.2, 1.0, 2.7, 5.0}) {
            const LeakageIntegral li = leakage_integral(0.8, delta, 0.0, T);
            CHECK(std::abs(li.value) <= li.bound + 1e-12);
            CHECK(li.bound <= 0.8 / std::abs(delta) + 1e-12); // t_jk < one period
            CHECK(li.n_jk == (long long)std::floor(std::abs(delta) * T));
            CHECK(li.t_jk >= 0.0);
            CHECK(li.t_jk < 1.0 / std::abs(delta) + 1e-12);
            // T decomposes as n_jk whole periods plus the remainder.
            CHECK(double(li.n_jk) / std::abs(delta) + li.t_jk ==
                  doctest::Approx(T).epsilon(1e-9));
        }
}

TEST_CASE("leakage_integral matches Simpson quadrature") {
    for (double delta : {-2.3, -1.1, -0.5, 0.0, 0.37, 0.5, 1.25, 2.0})
        for (double T : {0.3, 1.0, 2.7, 5.0}) {
            const LeakageIntegral li = leakage_integral(1.3, delta + 4.0, 4.0, T);
            const Complex slow = simpson_exponential(1.3, delta, T, 4096);
            CHECK(std::abs(li.value - slow) < 1e-8);
        }
}

TEST_CASE("discrete_leakage worked examples") {
    // On-bin tone: a*sqrt(N), exactly real.
    CHECK(discrete_leakage(2.0, 5.0, 5, 16) == Complex{8.0, 0.0});
    // Offsets that are multiples of N wrap onto the bin.
    CHECK(discrete_leakage(1.0, 19.0, 3, 16) == Complex{4.0, 0.0});
    // Integer offsets that are not multiples of N cancel exactly.
    CHECK(std::abs(discrete_leakage(1.0, 7.0, 3, 16)) == 0.0);
    CHECK(std::abs(discrete_leakage(1.0, 0.0, 3, 16)) == 0.0);

    CHECK_THROWS_AS(discrete_leakage(1.0, 1.0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(discrete_leakage(std::nan(""), 1.0, 0, 8), std::invalid_argument);
}

TEST_CASE("discrete_leakage equals the dft of the sampled tone") {
    for (double nu : {0.5, 1.3, 2.0, 4.5})
        for (std::size_t N : {8u, 16u}) {
            const auto X = dft(tone(1.1, nu, N));
            for (std::size_t k = 0; k < N; ++k)
                CHECK(std::abs(X[k] - discrete_leakage(1.1, nu, (long long)k, N)) < 1e-10);
        }
}

TEST_CASE("half-bin discrete leakage approaches 2/pi from above") {
    const double target = 2.0 / kPi;
    double prev = std::numeric_limits<double>::infinity();
    for (std::size_t N : {64u, 256u, 1024u, 4096u}) {
        const double r = std::abs(discrete_leakage(1.0, 3.5, 3, N)) / std::sqrt(double(N));
        CHECK(r > target);
        CHECK(r < prev);
        prev = r;
    }
    CHECK(prev == doctest::Approx(target).epsilon(0.02)); // N = 4096 well within 2%
}

TEST_CASE("leakage_report combines both views") {
    const LeakageReport r = leakage_report(1.0, 4.5, 4, 16, 2.0);
    CHECK(r.nu == 4.5);
    CHECK(r.k == 4);
    CHECK(r.magnitude == std::abs(discrete_leakage(1.0, 4.5, 4, 16)));
    const LeakageIntegral li = leakage_integral(1.0, 4.5, 4.0, 2.0);
    CHECK(r.bound == li.bound);
    CHECK(r.t_jk == li.t_jk);
    CHECK(r.n_jk == li.n_jk);
}

TEST_CASE("check_theorem1 worked examples") {
    // Amplitudes {1,2,4} on 4 qubits: sum 7; the stated 2^{n/2} bound (1.75)
    // is violated by min = 1, the proof's 2^n bound (0.4375) is met.
    const Theorem1Report r = check_theorem1(parse_signal_spec("3:1,5:2,7:4", 4));
    CHECK(r.min_amplitude == 1.0);
    CHECK(r.sum_amplitudes == 7.0);
    CHECK(r.bound_stated == 1.75);
    CHECK(r.bound_proof == 0.4375);
    CHECK_FALSE(r.satisfied_stated);
    CHECK(r.satisfied_proof);

    // A single component always passes both (its sum is its min).
    const Theorem1Report one = check_theorem1(parse_signal_spec("2:0.3", 2));
    CHECK(one.satisfied_stated);
    CHECK(one.satisfied_proof);

    // Sixteen equal unit amplitudes on 4 qubits sit exactly on the proof
    // bound (16/2^4 = 1) and fail the stated one (16/4 = 4).
    SignalSpec flat;
    flat.n_qubits = 4;
    for (int m = 0; m < 16; ++m) flat.components.push_back({double(m), 1.0});
    const Theorem1Report eq = check_theorem1(flat);
    CHECK(eq.bound_proof == 1.0);
    CHECK(eq.satisfied_proof);
    CHECK_FALSE(eq.satisfied_stated);

    CHECK_THROWS_AS(check_theorem1(SignalSpec{{}, 4}), std::invalid_argument);
    CHECK_THROWS_AS(check_theorem1(SignalSpec{{{1.0, 1.0}}, 0}), SizeOutOfRange);
    CHECK_THROWS_AS(check_theorem1(SignalSpec{{{1.0, -1.0}}, 4}), std::invalid_argument);
}

TEST_CASE("theorem1 proof bound never exceeds the stated bound") {
    std::mt19937_64 gen(31);
    std::uniform_real_distribution<double> amp(0.01, 5.0);
    for (int n = 1; n <= 14; ++n) {
        SignalSpec spec;
        spec.n_qubits = n;
        const int m = 1 + int(gen() % 5);
        for (int i = 0; i < m; ++i) spec.components.push_back({double(i), amp(gen)});
        const Theorem1Report r = check_theorem1(spec);
        CHECK(r.bound_proof <= r.bound_stated);
        if (r.satisfied_stated) CHECK(r.satisfied_proof);
    }
}

TEST_CASE("check_theorem2 worked examples") {
    // Equal eigenvalues: ratio 1 is resolvable at every register size.
    for (int n = 1; n <= 8; ++n) {
        const Theorem2Verdict v = check_theorem2({0.8, 0.8}, n);
        CHECK(v.ratio == 1.0);
        CHECK(v.threshold == std::exp2(1.0 - double(n)));
        CHECK(v.resolvable);
    }

    // n = 4 threshold is 1/8: ratio exactly 1/8 resolves, 1/32 does not.
    const Theorem2Verdict at = check_theorem2({1.0, 8.0}, 4);
    CHECK(at.ratio == 0.125);
    CHECK(at.threshold == 0.125);
    CHECK(at.resolvable);
    const Theorem2Verdict below = check_theorem2({1.0, 32.0}, 4);
    CHECK(below.ratio == 0.03125);
    CHECK_FALSE(below.resolvable);

    // n = 1: threshold 1, only equal eigenvalues pass.
    CHECK(check_theorem2({1.0, 1.0}, 1).resolvable);
    CHECK_FALSE(check_theorem2({0.99, 1.0}, 1).resolvable);

    CHECK_THROWS_AS(check_theorem2({0.0, 1.0}, 4), std::invalid_argument);
    CHECK_THROWS_AS(check_theorem2({-1.0, 1.0}, 4), std::invalid_argument);
    CHECK_THROWS_AS(check_theorem2({2.0, 1.0}, 4), std::invalid_argument);
    CHECK_THROWS_AS(check_theorem2({1.0, 1.0}, 0), SizeOutOfRange);
}

TEST_CASE("empirical_resolution") {
    // Adjacent dyadic bins resolve; identical phases do not.
    CHECK(empirical_resolution(1.0 / 16.0, 2.0 / 16.0, 4));
    CHECK_FALSE(empirical_resolution(5.0 / 16.0, 5.0 / 16.0, 4));

    // Period-1 aliasing: 17/16 behaves as 1/16, distinct from 15/16.
    CHECK(empirical_resolution(15.0 / 16.0, 17.0 / 16.0, 4));
    // ... and identical to a literal 1/16.
    CHECK_FALSE(empirical_resolution(1.0 / 16.0, 17.0 / 16.0, 4));

    // All distinct dyadic pairs on 3 qubits resolve.
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            CHECK(empirical_resolution(i / 8.0, j / 8.0, 3));

    CHECK_THROWS_AS(empirical_resolution(std::nan(""), 0.0, 4), std::invalid_argument);
}

TEST_CASE("json serializers") {
    const Theorem1Report r = check_theorem1(parse_signal_spec("3:1,5:2,7:4", 4));
    const auto j1 = nlohmann::json::parse(theorem1_json(r));
    CHECK(j1["min_amplitude"] == 1.0);
    CHECK(j1["sum_amplitudes"] == 7.0);
    CHECK(j1["bound_stated"] == 1.75);
    CHECK(j1["bound_proof"] == 0.4375);
    CHECK(j1["satisfied_stated"] == false);
    CHECK(j1["satisfied_proof"] == true);

    const auto j2 = nlohmann::json::parse(theorem2_json(check_theorem2({1.0, 8.0}, 4)));
    CHECK(j2["resolvable"] == true);
    CHECK(j2["ratio"] == 0.125);
    CHECK(j2["threshold"] == 0.125);

    const auto j3 = nlohmann::json::parse(leakage_json(leakage_report(1.0, 4.5, 4, 16, 2.0)));
    CHECK(j3["nu"] == 4.5);
    CHECK(j3["k"] == 4);
    CHECK(j3["n_jk"] == 1);
    CHECK(j3["magnitude"].is_number());
    CHECK(j3["bound"].is_number());
}
