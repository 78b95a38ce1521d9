// qftlab command-line front end.
//
// Subcommands:
//   simulate  — run one signal experiment (encode -> iQFT -> measure)
//   preset    — run a canned experiment from the preset catalog
//   theorems  — evaluate the accuracy-theory checkers on a signal, no simulation
//   leakage   — grid scan of the leakage integral/sum bounds, CSV output
//
// Exit codes: 0 success, 2 configuration error, 1 internal error.
// Output files are written atomically (tmp file + rename).

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qftlab/analysis.hpp"
#include "qftlab/circuit.hpp"
#include "qftlab/errors.hpp"
#include "qftlab/experiment.hpp"

namespace {

namespace fs = std::filesystem;

void write_file_atomic(const fs::path& path, const std::string& data) {
    if (!path.parent_path().empty()) fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        f.write(data.data(), std::streamsize(data.size()));
        if (!f) throw std::runtime_error("failed writing " + tmp.string());
    }
    fs::rename(tmp, path);
}

std::vector<qftlab::OutputFormat> parse_formats(const std::string& csv) {
    std::vector<qftlab::OutputFormat> out;
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t comma = csv.find(',', start);
        if (comma == std::string::npos) comma = csv.size();
        const std::string name = csv.substr(start, comma - start);
        if (!name.empty()) out.push_back(qftlab::parse_output_format(name));
        start = comma + 1;
    }
    if (out.empty())
        throw qftlab::UnsupportedFormat("format list is empty; use json, csv, svg or text");
    return out;
}

const char* histogram_filename(qftlab::OutputFormat fmt) {
    switch (fmt) {
        case qftlab::OutputFormat::Csv: return "histogram.csv";
        case qftlab::OutputFormat::Svg: return "histogram.svg";
        case qftlab::OutputFormat::Text: return "histogram.txt";
        case qftlab::OutputFormat::Json: return "report.json";
    }
    return "histogram.out";
}

void print_report_summary(const qftlab::ExperimentReport& report) {
    std::printf("n_qubits=%d signal=%s shots=%llu seed=%llu\n", report.config.n_qubits,
                qftlab::signal_spec_text(report.config.signal).c_str(),
                (unsigned long long)report.config.shots, (unsigned long long)report.config.seed);
    const std::size_t top = std::min<std::size_t>(report.decoded_phases.size(), 5);
    for (std::size_t i = 0; i < top; ++i) {
        const auto& d = report.decoded_phases[i];
        std::printf("  bin %llu  theta=%.9g  p=%.9f\n", (unsigned long long)d.bin, d.theta,
                    d.probability);
    }
    const auto& t1 = report.theorem1;
    std::printf("  theorem1: min=%.9g stated-bound=%.9g (%s) proof-bound=%.9g (%s)\n",
                t1.min_amplitude, t1.bound_stated,
                t1.satisfied_stated ? "satisfied" : "violated", t1.bound_proof,
                t1.satisfied_proof ? "satisfied" : "violated");
}

void write_experiment_outputs(const qftlab::ExperimentReport& report, const fs::path& out_dir,
                              const std::vector<qftlab::OutputFormat>& formats) {
    for (qftlab::OutputFormat fmt : formats) {
        const fs::path path = out_dir / histogram_filename(fmt);
        if (fmt == qftlab::OutputFormat::Json)
            write_file_atomic(path, qftlab::report_json(report));
        else
            write_file_atomic(path, qftlab::render_histogram(report, fmt));
        std::printf("wrote %s\n", path.string().c_str());
    }
}

void write_preset_outputs(const qftlab::PresetResult& result, const fs::path& out_dir,
                          const std::vector<qftlab::OutputFormat>& formats) {
    for (qftlab::OutputFormat fmt : formats) {
        const fs::path path = out_dir / histogram_filename(fmt);
        if (fmt == qftlab::OutputFormat::Json)
            write_file_atomic(path, qftlab::preset_json(result));
        else
            write_file_atomic(path, qftlab::render_histogram(result, fmt));
        std::printf("wrote %s\n", path.string().c_str());
    }
}

struct SimulateArgs {
    int qubits = 4;
    std::string signal;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::string out_dir = ".";
    std::string formats = "json,csv";
    std::string config_path;
};

std::string trim_ws(const std::string& s) {
    const char* ws = " \t\r\n";
    const std::size_t a = s.find_first_not_of(ws);
    if (a == std::string::npos) return {};
    return s.substr(a, s.find_last_not_of(ws) - a + 1);
}

template <typename T>
T parse_config_number(const std::string& value, const std::string& key, std::size_t line_no) {
    T out{};
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw qftlab::ConfigInvalid("config line " + std::to_string(line_no) + ": " + key +
                                    ": invalid value '" + value + "'");
    return out;
}

// Applies key=value lines from args.config_path to every simulate option the
// command line left untouched. Keys mirror the long flags without the dashes;
// unknown keys and unparsable values are configuration errors.
void apply_config_file(const CLI::App& sim, SimulateArgs& args) {
    std::ifstream f(args.config_path);
    if (!f) throw qftlab::ConfigInvalid("config: cannot open " + args.config_path);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(f, line)) {
        ++line_no;
        const std::string text = trim_ws(line);
        if (text.empty() || text[0] == '#') continue;
        const std::size_t eq = text.find('=');
        if (eq == std::string::npos)
            throw qftlab::ConfigInvalid("config line " + std::to_string(line_no) +
                                        ": expected key=value, got '" + text + "'");
        const std::string key = trim_ws(text.substr(0, eq));
        std::string value = trim_ws(text.substr(eq + 1));
        if (value.size() >= 2 && (value.front() == '"' || value.front() == '\'') &&
            value.back() == value.front())
            value = value.substr(1, value.size() - 2);

        const bool known = key == "qubits" || key == "signal" || key == "shots" ||
                           key == "seed" || key == "out-dir" || key == "format";
        if (!known)
            throw qftlab::ConfigInvalid("config line " + std::to_string(line_no) +
                                        ": unknown key '" + key + "'");
        if (sim.count("--" + key) > 0) continue; // flags override the file
        if (key == "qubits")
            args.qubits = parse_config_number<int>(value, key, line_no);
        else if (key == "signal")
            args.signal = value;
        else if (key == "shots")
            args.shots = parse_config_number<std::uint64_t>(value, key, line_no);
        else if (key == "seed")
            args.seed = parse_config_number<std::uint64_t>(value, key, line_no);
        else if (key == "out-dir")
            args.out_dir = value;
        else if (key == "format")
            args.formats = value;
    }
}

void run_simulate(const SimulateArgs& args) {
    if (args.signal.empty())
        throw qftlab::ConfigInvalid("signal: required (e.g. --signal \"3:1,5:2,7:4\")");
    qftlab::ExperimentConfig cfg;
    cfg.n_qubits = args.qubits;
    cfg.signal = qftlab::parse_signal_spec(args.signal, args.qubits);
    cfg.shots = args.shots;
    cfg.seed = args.seed;
    cfg.outputs = parse_formats(args.formats);

    const qftlab::ExperimentReport report = qftlab::run_experiment(cfg);
    print_report_summary(report);
    write_experiment_outputs(report, args.out_dir, cfg.outputs);
}

void run_preset_cmd(const std::string& name, const std::string& out_dir,
                    const std::string& formats) {
    const std::vector<qftlab::OutputFormat> fmts = parse_formats(formats);
    const qftlab::PresetResult result = qftlab::run_preset(name);
    std::printf("preset %s (%zu run%s)\n", result.name.c_str(), result.runs.size(),
                result.runs.size() == 1 ? "" : "s");
    for (const qftlab::ExperimentReport& r : result.runs) print_report_summary(r);
    write_preset_outputs(result, out_dir, fmts);
}

void run_theorems(int qubits, const std::string& signal) {
    if (signal.empty())
        throw qftlab::ConfigInvalid("signal: required (e.g. --signal \"3:1,5:2,7:4\")");
    const qftlab::SignalSpec spec = qftlab::parse_signal_spec(signal, qubits);

    const qftlab::Theorem1Report t1 = qftlab::check_theorem1(spec);
    std::printf("theorem 1 (minimal amplitude), n=%d\n", qubits);
    std::printf("  min amplitude      %.9g\n", t1.min_amplitude);
    std::printf("  sum of amplitudes  %.9g\n", t1.sum_amplitudes);
    std::printf("  stated bound  sum/2^(n/2) = %.9g  -> %s (ratio %.9g)\n", t1.bound_stated,
                t1.satisfied_stated ? "satisfied" : "violated",
                t1.min_amplitude / t1.bound_stated);
    std::printf("  proof bound   sum/2^n     = %.9g  -> %s (ratio %.9g)\n", t1.bound_proof,
                t1.satisfied_proof ? "satisfied" : "violated",
                t1.min_amplitude / t1.bound_proof);

    std::printf("theorem 2 (eigenphase resolution), threshold 1/2^(n-1) = %.9g\n",
                std::exp2(1.0 - qubits));
    for (std::size_t i = 0; i < spec.components.size(); ++i)
        for (std::size_t j = i + 1; j < spec.components.size(); ++j) {
            const double a = spec.components[i].phase_bins;
            const double b = spec.components[j].phase_bins;
            if (a <= 0.0 || b <= 0.0) {
                std::printf("  pair (%.9g, %.9g): skipped (zero eigenvalue)\n", a, b);
                continue;
            }
            const qftlab::Theorem2Verdict v =
                qftlab::check_theorem2({std::min(a, b), std::max(a, b)}, qubits);
            std::printf("  pair (%.9g, %.9g): ratio %.9g -> %s\n", a, b, v.ratio,
                        v.resolvable ? "resolvable" : "not resolvable");
        }
}

struct LeakageArgs {
    double amplitude = 1.0;
    int bins = 8;
    double nu_step = 0.25;
    std::size_t samples = 1024;
    double window = 1.0;
    std::string out_dir = ".";
};

void run_leakage(const LeakageArgs& args) {
    if (args.bins < 1) throw qftlab::ConfigInvalid("bins: must be >= 1");
    if (args.nu_step <= 0.0) throw qftlab::ConfigInvalid("nu-step: must be > 0");
    if (args.samples < 1) throw qftlab::ConfigInvalid("samples: must be >= 1");
    if (args.window <= 0.0) throw qftlab::ConfigInvalid("window: must be > 0");

    std::string csv = "nu,k,magnitude,bound,t_jk,n_jk\n";
    char buf[160];
    std::size_t rows = 0;
    const long long steps = (long long)std::llround(double(args.bins) / args.nu_step);
    for (int k = 0; k < args.bins; ++k) {
        for (long long i = 0; i <= steps; ++i) {
            const double nu = double(i) * args.nu_step;
            const qftlab::LeakageReport r =
                qftlab::leakage_report(args.amplitude, nu, k, args.samples, args.window);
            std::snprintf(buf, sizeof buf, "%.9g,%lld,%.9g,%.9g,%.9g,%lld\n", r.nu, r.k,
                          r.magnitude, r.bound, r.t_jk, r.n_jk);
            csv += buf;
            ++rows;
        }
    }
    const fs::path path = fs::path(args.out_dir) / "leakage.csv";
    write_file_atomic(path, csv);
    std::printf("wrote %s (%zu rows; amplitude=%.9g, N=%zu, T=%.9g)\n", path.string().c_str(),
                rows, args.amplitude, args.samples, args.window);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qftlab — gate-level QFT simulation and accuracy analysis"};
    app.require_subcommand(1);

    SimulateArgs sim_args;
    CLI::App* sim = app.add_subcommand("simulate", "Run one signal experiment");
    sim->add_option("--qubits", sim_args.qubits, "Register size, 1-14")->capture_default_str();
    sim->add_option("--signal", sim_args.signal,
                    "phase:amplitude pairs in bins, e.g. \"3:1,5:2,7:4\"");
    sim->add_option("--shots", sim_args.shots, "Measurement shots (0 = exact distribution)")
        ->capture_default_str();
    sim->add_option("--seed", sim_args.seed, "Sampling seed")->capture_default_str();
    sim->add_option("--out-dir", sim_args.out_dir, "Output directory")->capture_default_str();
    sim->add_option("--format", sim_args.formats, "Comma list of json,csv,svg,text")
        ->capture_default_str();
    sim->add_option("--config", sim_args.config_path,
                    "Key=value file mirroring the flags; flags override");
    sim->callback([&] {
        if (!sim_args.config_path.empty()) apply_config_file(*sim, sim_args);
        run_simulate(sim_args);
    });

    std::string preset_name;
    std::string preset_out_dir = ".";
    std::string preset_formats = "json,csv";
    CLI::App* preset = app.add_subcommand("preset", "Run a canned experiment");
    preset->add_option("name", preset_name, "fig1-left | fig1-right | fig2-left | fig2-right | fig3")
        ->required();
    preset->add_option("--out-dir", preset_out_dir, "Output directory")->capture_default_str();
    preset->add_option("--format", preset_formats, "Comma list of json,csv,svg,text")
        ->capture_default_str();
    preset->callback([&] { run_preset_cmd(preset_name, preset_out_dir, preset_formats); });

    int thm_qubits = 4;
    std::string thm_signal;
    CLI::App* thms = app.add_subcommand("theorems", "Evaluate the theorem checkers (no simulation)");
    thms->add_option("--qubits", thm_qubits, "Register size, 1-14")->capture_default_str();
    thms->add_option("--signal", thm_signal, "phase:amplitude pairs in bins");
    thms->callback([&] { run_theorems(thm_qubits, thm_signal); });

    LeakageArgs leak_args;
    CLI::App* leak = app.add_subcommand("leakage", "Leakage bound grid scan, CSV output");
    leak->add_option("--amplitude", leak_args.amplitude, "Signal amplitude a")
        ->capture_default_str();
    leak->add_option("--bins", leak_args.bins, "Bins k = 0..bins-1; nu scans [0, bins]")
        ->capture_default_str();
    leak->add_option("--nu-step", leak_args.nu_step, "Frequency grid step")->capture_default_str();
    leak->add_option("--samples", leak_args.samples, "Discrete sum length N")
        ->capture_default_str();
    leak->add_option("--window", leak_args.window, "Continuous window T")->capture_default_str();
    leak->add_option("--out-dir", leak_args.out_dir, "Output directory")->capture_default_str();
    leak->callback([&] { run_leakage(leak_args); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // bad flags are configuration errors
    } catch (const qftlab::ConfigInvalid& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const qftlab::UnknownPreset& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const qftlab::UnsupportedFormat& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
