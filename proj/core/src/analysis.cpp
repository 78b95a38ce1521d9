#include "qftlab/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "detail/json_util.hpp"
#include "qftlab/circuit.hpp"
#include "qftlab/errors.hpp"
#include "qftlab/measurement.hpp"

namespace qftlab {
namespace {

// sin(π·s) and cos(π·s) with the integer part of s peeled off first, so an
// integer s yields an exact 0 / ±1 instead of sin(big·π) rounding noise.
double sin_pi(double s) {
    const double n = std::floor(s);
    const double r = s - n;
    const double v = std::sin(std::numbers::pi * r);
    return std::fmod(n, 2.0) == 0.0 ? v : -v;
}

double cos_pi(double s) {
    const double n = std::floor(s);
    const double r = s - n;
    const double v = std::cos(std::numbers::pi * r);
    return std::fmod(n, 2.0) == 0.0 ? v : -v;
}

void check_finite(double v, const char* who, const char* name) {
    if (!std::isfinite(v))
        throw std::invalid_argument(std::string(who) + ": " + name + " must be finite");
}

std::size_t argmax_bin(const std::vector<double>& probs) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < probs.size(); ++i)
        if (probs[i] > probs[best]) best = i;
    return best;
}

} // namespace

std::vector<Complex> dft(std::span<const Complex> x) {
    const std::size_t N = x.size();
    if (N == 0) throw std::invalid_argument("dft: empty input");
    const double scale = 1.0 / std::sqrt(double(N));
    std::vector<Complex> out(N);
    for (std::size_t k = 0; k < N; ++k) {
        Complex acc{0.0, 0.0};
        for (std::size_t n = 0; n < N; ++n) {
            // (k·n) mod N keeps the kernel angle in [0, 2π) exactly.
            const double angle = -2.0 * std::numbers::pi * double((k * n) % N) / double(N);
            acc += x[n] * Complex{std::cos(angle), std::sin(angle)};
        }
        out[k] = scale * acc;
    }
    return out;
}

GateMatrix dft_matrix(int n_qubits) {
    if (n_qubits < 1 || n_qubits > 6)
        throw SizeOutOfRange("dft_matrix: register of " + std::to_string(n_qubits) +
                             " qubits outside the oracle range [1, 6]");
    const std::size_t N = dim_for_qubits(n_qubits);
    const double scale = 1.0 / std::sqrt(double(N));
    std::vector<Complex> entries(N * N);
    for (std::size_t k = 0; k < N; ++k)
        for (std::size_t m = 0; m < N; ++m) {
            const double angle = -2.0 * std::numbers::pi * double((k * m) % N) / double(N);
            entries[k * N + m] = scale * Complex{std::cos(angle), std::sin(angle)};
        }
    return GateMatrix::matrix(n_qubits, std::move(entries));
}

double sinc_reconstruct(const SampledSignal& sig, double t, int window) {
    if (window < 1)
        throw std::invalid_argument("sinc_reconstruct: window must be >= 1");
    if (!std::isfinite(sig.sample_rate) || sig.sample_rate <= 0.0)
        throw std::invalid_argument("sinc_reconstruct: sample_rate must be positive");
    check_finite(t, "sinc_reconstruct", "t");
    if (sig.samples.empty()) return 0.0;

    const double u0 = t * sig.sample_rate; // t/T in sample units
    long long lo = (long long)std::ceil(u0 - double(window));
    long long hi = (long long)std::floor(u0 + double(window));
    lo = std::max(lo, 0LL);
    hi = std::min(hi, (long long)sig.samples.size() - 1);

    double acc = 0.0;
    for (long long n = lo; n <= hi; ++n) {
        const double v = u0 - double(n);
        double s;
        if (v == std::nearbyint(v)) {
            s = (v == 0.0) ? 1.0 : 0.0; // exact grid hit
        } else {
            s = sin_pi(v) / (std::numbers::pi * v);
        }
        acc += sig.samples[std::size_t(n)] * s;
    }
    return acc;
}

LeakageIntegral leakage_integral(double a, double nu, double omega, double T) {
    check_finite(a, "leakage_integral", "a");
    check_finite(nu, "leakage_integral", "nu");
    check_finite(omega, "leakage_integral", "omega");
    if (!std::isfinite(T) || T <= 0.0)
        throw NonpositiveDuration("leakage_integral: window T must be positive, got " +
                                  std::to_string(T));

    const double delta = nu - omega;
    if (delta == 0.0)
        return LeakageIntegral{Complex{a * T, 0.0}, std::abs(a) * T, T, 0};

    // ∫₀ᵀ e^{2πiδt} dt = e^{iπδT}·sin(πδT)/(πδ). With s = δT = n + r the
    // two (-1)^n factors cancel, leaving e^{iπr}·sin(πr)/(πδ) — exact zero
    // whenever the window holds a whole number of difference periods.
    const double s = delta * T;
    const double r = s - std::floor(s);
    const Complex value = a * Complex{cos_pi(r), sin_pi(r)} * sin_pi(r) /
                          (std::numbers::pi * delta);

    const double s_abs = std::abs(s);
    const long long n_jk = (long long)std::floor(s_abs);
    const double t_jk = (s_abs - std::floor(s_abs)) / std::abs(delta);
    const double bound = std::abs(a) * t_jk;
    if (std::abs(value) > bound + 1e-12)
        throw std::logic_error("leakage_integral: closed form exceeded its own bound");
    return LeakageIntegral{value, bound, t_jk, n_jk};
}

Complex discrete_leakage(double a, double nu, long long k, std::size_t N) {
    if (N < 1) throw std::invalid_argument("discrete_leakage: N must be >= 1");
    check_finite(a, "discrete_leakage", "a");
    check_finite(nu, "discrete_leakage", "nu");

    const double delta = nu - double(k);
    const double x = delta / double(N); // revolutions per sample
    const double root_n = std::sqrt(double(N));
    if (x == std::floor(x)) return Complex{a * root_n, 0.0}; // ν ≡ k (mod N): every term is 1

    // Geometric sum: Σ_{n<N} e^{2πixn} = e^{iπx(N-1)}·sin(πxN)/sin(πx),
    // with xN = δ so integer offsets zero out exactly.
    const double num = sin_pi(delta);
    const double den = sin_pi(x);
    const double y = x * double(N - 1);
    const Complex sum = Complex{cos_pi(y), sin_pi(y)} * (num / den);
    return (a / root_n) * sum;
}

LeakageReport leakage_report(double a, double nu, long long k, std::size_t N, double T) {
    const LeakageIntegral cont = leakage_integral(a, nu, double(k), T);
    LeakageReport r;
    r.nu = nu;
    r.k = k;
    r.magnitude = std::abs(discrete_leakage(a, nu, k, N));
    r.bound = cont.bound;
    r.t_jk = cont.t_jk;
    r.n_jk = cont.n_jk;
    return r;
}

Theorem1Report check_theorem1(const SignalSpec& spec) {
    if (spec.components.empty())
        throw std::invalid_argument("check_theorem1: component list is empty");
    if (spec.n_qubits < 1 || spec.n_qubits > kMaxQubits)
        throw SizeOutOfRange("check_theorem1: register of " + std::to_string(spec.n_qubits) +
                             " qubits outside [1, " + std::to_string(kMaxQubits) + "]");
    Theorem1Report r;
    r.min_amplitude = spec.components.front().amplitude;
    for (const SignalComponent& c : spec.components) {
        if (!std::isfinite(c.amplitude) || c.amplitude <= 0.0)
            throw std::invalid_argument("check_theorem1: amplitudes must be finite and > 0");
        r.min_amplitude = std::min(r.min_amplitude, c.amplitude);
        r.sum_amplitudes += std::abs(c.amplitude);
    }
    r.bound_stated = r.sum_amplitudes / std::exp2(spec.n_qubits / 2.0);
    r.bound_proof = r.sum_amplitudes / std::exp2(double(spec.n_qubits));
    r.satisfied_stated = r.min_amplitude >= r.bound_stated;
    r.satisfied_proof = r.min_amplitude >= r.bound_proof;
    return r;
}

Theorem2Verdict check_theorem2(const EigenPair& pair, int n_qubits) {
    if (n_qubits < 1)
        throw SizeOutOfRange("check_theorem2: n_qubits must be >= 1");
    if (!std::isfinite(pair.lambda_min) || !std::isfinite(pair.lambda_max) ||
        pair.lambda_min <= 0.0 || pair.lambda_max <= 0.0)
        throw std::invalid_argument("check_theorem2: eigenvalues must be finite and > 0");
    if (pair.lambda_min > pair.lambda_max)
        throw std::invalid_argument("check_theorem2: lambda_min exceeds lambda_max");
    Theorem2Verdict v;
    v.ratio = pair.lambda_min / pair.lambda_max;
    v.threshold = std::exp2(1.0 - double(n_qubits)); // 1/2^{n-1}
    v.resolvable = v.ratio >= v.threshold;
    return v;
}

bool empirical_resolution(double theta_a, double theta_b, int n_qubits) {
    check_finite(theta_a, "empirical_resolution", "theta_a");
    check_finite(theta_b, "empirical_resolution", "theta_b");
    const Circuit iqft = iqft_circuit(n_qubits);
    const OutcomeDistribution da =
        distribution(run_circuit(iqft, encode_phase(theta_a, n_qubits)));
    const OutcomeDistribution db =
        distribution(run_circuit(iqft, encode_phase(theta_b, n_qubits)));
    return argmax_bin(da.probs) != argmax_bin(db.probs);
}

namespace detail {

ordered_json to_ordered_json(const Theorem1Report& r) {
    ordered_json j;
    j["min_amplitude"] = round9(r.min_amplitude);
    j["sum_amplitudes"] = round9(r.sum_amplitudes);
    j["bound_stated"] = round9(r.bound_stated);
    j["bound_proof"] = round9(r.bound_proof);
    j["satisfied_stated"] = r.satisfied_stated;
    j["satisfied_proof"] = r.satisfied_proof;
    return j;
}

ordered_json to_ordered_json(const Theorem2Verdict& v) {
    ordered_json j;
    j["resolvable"] = v.resolvable;
    j["ratio"] = round9(v.ratio);
    j["threshold"] = round9(v.threshold);
    return j;
}

ordered_json to_ordered_json(const LeakageReport& r) {
    ordered_json j;
    j["nu"] = round9(r.nu);
    j["k"] = r.k;
    j["magnitude"] = round9(r.magnitude);
    j["bound"] = round9(r.bound);
    j["t_jk"] = round9(r.t_jk);
    j["n_jk"] = r.n_jk;
    return j;
}

} // namespace detail

std::string theorem1_json(const Theorem1Report& r) {
    return detail::to_ordered_json(r).dump(2);
}

std::string theorem2_json(const Theorem2Verdict& v) {
    return detail::to_ordered_json(v).dump(2);
}

std::string leakage_json(const LeakageReport& r) {
    return detail::to_ordered_json(r).dump(2);
}

} // namespace qftlab
