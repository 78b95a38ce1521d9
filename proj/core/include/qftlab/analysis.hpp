// Classical oracles and accuracy theory: the reference DFT, sinc
// (Kotelnikov) reconstruction, spectral-leakage forms — the continuous
// window integral and the discrete bin sum — and the two theorem checkers
// (minimal resolvable amplitude, eigenphase resolution).
//
// The DFT here is the e^{-2πi kn/N}, 1/√N-normalized transform; the QFT
// circuit equals its conjugate. Keeping both conventions explicit is what
// lets the oracle tests compare them literally.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qftlab/encoding.hpp"
#include "qftlab/gate_matrix.hpp"
#include "qftlab/types.hpp"

namespace qftlab {

// X_k = (1/√N) Σ_n x_n e^{-2πi kn/N}. Direct O(N²) evaluation — this is a
// reference implementation, not a performance path.
std::vector<Complex> dft(std::span<const Complex> x);

// The DFT as a GateMatrix: F[k,m] = (1/√N) e^{-2πi km/N}. Oracle support;
// capped at 6 qubits.
GateMatrix dft_matrix(int n_qubits);

// Real signal sampled at sample_rate; f_c is the declared band limit used
// by callers to reason about the f_s >= 2 f_c condition (not enforced here
// — undersampling is exactly what the aliasing demonstrations need).
struct SampledSignal {
    double sample_rate = 0.0;
    std::vector<double> samples;
    double f_c = 0.0;
};

// Truncated Whittaker sum Σ x(nT)·sinc((t-nT)/T) over samples within
// ±window of t/T; sinc(0) = 1. At on-grid t it returns that sample exactly.
double sinc_reconstruct(const SampledSignal& sig, double t, int window = 500);

// Closed form of the windowed exponential integral ∫₀ᵀ a·e^{2πi(ν-ω)t} dt
// together with the leakage bound |a|·t_jk, where T = n_jk·T_jk + t_jk
// splits the window into whole periods of the difference frequency plus a
// remainder. The ν = ω case degenerates to (a·T, |a|·T, T, 0).
struct LeakageIntegral {
    Complex value;
    double bound = 0.0;       // |a| · t_jk
    double t_jk = 0.0;        // remainder time, < 1/|ν-ω| when ν ≠ ω
    long long n_jk = 0;       // whole difference-frequency periods in [0,T]
};
LeakageIntegral leakage_integral(double a, double nu, double omega, double T);

// Discrete leakage of frequency ν into bin k over N samples:
// X_jk = (a/√N) Σ_{n<N} e^{2πi(ν-k)n/N}, evaluated in closed form.
// ν ≡ k (mod N) gives a·√N; at half-bin offset |X|/√N tends to a·2/π.
Complex discrete_leakage(double a, double nu, long long k, std::size_t N);

// One scan cell combining both views: the N-sample discrete magnitude at
// bin k plus the continuous bound data for window T.
struct LeakageReport {
    double nu = 0.0;
    long long k = 0;
    double magnitude = 0.0;   // |X_jk| from the discrete sum
    double bound = 0.0;       // |a| · t_jk from the continuous integral
    double t_jk = 0.0;
    long long n_jk = 0;
};
LeakageReport leakage_report(double a, double nu, long long k, std::size_t N, double T);

// Minimal-amplitude criterion, computed under both published denominators:
// the statement's 2^{n/2} and the proof's 2^n. Both verdicts are reported;
// neither is silently preferred.
struct Theorem1Report {
    double min_amplitude = 0.0;
    double sum_amplitudes = 0.0;
    double bound_stated = 0.0;   // Σ|a| / 2^{n/2}
    double bound_proof = 0.0;    // Σ|a| / 2^n
    bool satisfied_stated = false;
    bool satisfied_proof = false;
};
Theorem1Report check_theorem1(const SignalSpec& spec);

struct EigenPair {
    double lambda_min = 0.0; // both > 0, lambda_min <= lambda_max
    double lambda_max = 0.0;
};

// Eigenphase-resolution criterion: resolvable iff
// lambda_min/lambda_max >= 1/2^{n-1}.
struct Theorem2Verdict {
    bool resolvable = false;
    double ratio = 0.0;
    double threshold = 0.0;
};
Theorem2Verdict check_theorem2(const EigenPair& pair, int n_qubits);

// Operational resolution test: encode each phase (revolutions), run the
// inverse QFT, compare the top-probability outcome bins.
bool empirical_resolution(double theta_a, double theta_b, int n_qubits);

// JSON serialization (field names match the struct members).
std::string theorem1_json(const Theorem1Report& r);
std::string theorem2_json(const Theorem2Verdict& v);
std::string leakage_json(const LeakageReport& r);

} // namespace qftlab
