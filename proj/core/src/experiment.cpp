#include "qftlab/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>

#include "detail/json_util.hpp"
#include "qftlab/circuit.hpp"
#include "qftlab/errors.hpp"

namespace qftlab {
namespace {

std::string binary_label(std::uint64_t m, int n_qubits) {
    std::string s(std::size_t(n_qubits), '0');
    for (int b = 0; b < n_qubits; ++b)
        if (m & (std::uint64_t{1} << (n_qubits - 1 - b))) s[std::size_t(b)] = '1';
    return s;
}

void validate_config(const ExperimentConfig& cfg) {
    if (cfg.n_qubits < 1 || cfg.n_qubits > kMaxQubits)
        throw ConfigInvalid("n_qubits: must be in [1, " + std::to_string(kMaxQubits) +
                            "], got " + std::to_string(cfg.n_qubits));
    if (cfg.signal.components.empty())
        throw ConfigInvalid("signal: component list is empty");
    if (cfg.signal.n_qubits != cfg.n_qubits)
        throw ConfigInvalid("signal.n_qubits: " + std::to_string(cfg.signal.n_qubits) +
                            " differs from n_qubits " + std::to_string(cfg.n_qubits));
    for (std::size_t i = 0; i < cfg.signal.components.size(); ++i) {
        const SignalComponent& c = cfg.signal.components[i];
        if (!std::isfinite(c.phase_bins) || c.phase_bins < 0.0)
            throw ConfigInvalid("signal[" + std::to_string(i) +
                                "].phase: must be finite and >= 0");
        if (!std::isfinite(c.amplitude) || c.amplitude <= 0.0)
            throw ConfigInvalid("signal[" + std::to_string(i) +
                                "].amplitude: must be finite and > 0");
    }
}

std::size_t argmax_bin(const std::vector<double>& probs) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < probs.size(); ++i)
        if (probs[i] > probs[best]) best = i;
    return best;
}

detail::ordered_json report_body(const ExperimentReport& r) {
    using detail::ordered_json;
    using detail::round9;
    ordered_json j;

    ordered_json cfg;
    cfg["n_qubits"] = r.config.n_qubits;
    cfg["signal"] = signal_spec_text(r.config.signal);
    cfg["shots"] = r.config.shots;
    cfg["seed"] = r.config.seed;
    j["config"] = std::move(cfg);

    ordered_json dist;
    dist["n_qubits"] = r.dist.n_qubits;
    ordered_json probs = ordered_json::array();
    for (double p : r.dist.probs) probs.push_back(round9(p));
    dist["probs"] = std::move(probs);
    j["distribution"] = std::move(dist);

    if (r.counts) {
        ordered_json c;
        c["shots"] = r.counts->shots;
        ordered_json hist = ordered_json::object();
        for (const auto& [bin, count] : r.counts->counts)
            hist[std::to_string(bin)] = count;
        c["histogram"] = std::move(hist);
        j["counts"] = std::move(c);
    } else {
        j["counts"] = nullptr;
    }

    ordered_json decoded = ordered_json::array();
    for (const DecodedPhase& d : r.decoded_phases) {
        ordered_json e;
        e["bin"] = d.bin;
        e["theta"] = round9(d.theta);
        e["probability"] = round9(d.probability);
        decoded.push_back(std::move(e));
    }
    j["decoded_phases"] = std::move(decoded);

    j["theorem1"] = detail::to_ordered_json(r.theorem1);

    ordered_json pairs = ordered_json::array();
    for (const PhasePairVerdict& p : r.theorem2) {
        ordered_json e;
        e["phase_a"] = round9(p.phase_a_bins);
        e["phase_b"] = round9(p.phase_b_bins);
        e["distinguished"] = p.distinguished;
        e["checker"] = p.checker ? detail::to_ordered_json(*p.checker)
                                 : detail::ordered_json(nullptr);
        pairs.push_back(std::move(e));
    }
    j["theorem2"] = std::move(pairs);
    return j;
}

std::string render_text_rows(const ExperimentReport& r) {
    double pmax = 0.0;
    for (double p : r.dist.probs) pmax = std::max(pmax, p);
    if (pmax <= 0.0) pmax = 1.0;
    std::string out;
    char buf[64];
    for (std::size_t m = 0; m < r.dist.probs.size(); ++m) {
        std::snprintf(buf, sizeof buf, " %.9f ", r.dist.probs[m]);
        out += binary_label(m, r.dist.n_qubits);
        out += buf;
        out.append(std::size_t(std::llround(r.dist.probs[m] / pmax * 40.0)), '#');
        out += '\n';
    }
    return out;
}

// One bar chart per run, stacked vertically. <rect> elements are used for
// the probability bars only (one per nonzero bin), which keeps the file
// structurally checkable.
std::string render_svg(const std::vector<const ExperimentReport*>& runs) {
    constexpr int kLeft = 50, kBarW = 24, kPitch = 30, kRunH = 300, kPlotH = 190;
    std::size_t max_bins = 1;
    for (const ExperimentReport* r : runs) max_bins = std::max(max_bins, r->dist.probs.size());
    const int width = kLeft + int(max_bins) * kPitch + 20;
    const int height = kRunH * int(runs.size());

    char buf[256];
    std::string out;
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"%d\" "
                  "height=\"%d\" viewBox=\"0 0 %d %d\" font-family=\"monospace\">\n",
                  width, height, width, height);
    out += buf;
    for (std::size_t run = 0; run < runs.size(); ++run) {
        const ExperimentReport& r = *runs[run];
        const int dy = int(run) * kRunH;
        const int base = dy + 44 + kPlotH;
        double pmax = 0.0;
        for (double p : r.dist.probs) pmax = std::max(pmax, p);
        if (pmax <= 0.0) pmax = 1.0;

        std::snprintf(buf, sizeof buf,
                      "  <text x=\"8\" y=\"%d\" font-size=\"13\">signal %s  shots=%llu</text>\n",
                      dy + 20, signal_spec_text(r.config.signal).c_str(),
                      (unsigned long long)r.config.shots);
        out += buf;
        std::snprintf(buf, sizeof buf, "  <text x=\"8\" y=\"%d\" font-size=\"10\">max p = %.9g</text>\n",
                      dy + 40, pmax);
        out += buf;
        std::snprintf(buf, sizeof buf,
                      "  <line x1=\"%d\" y1=\"%d\" x2=\"%d\" y2=\"%d\" stroke=\"#333333\"/>\n",
                      kLeft - 4, base, width - 12, base);
        out += buf;

        for (std::size_t m = 0; m < r.dist.probs.size(); ++m) {
            const int x = kLeft + int(m) * kPitch;
            const double p = r.dist.probs[m];
            if (p > 1e-12) {
                const double h = p / pmax * kPlotH;
                std::snprintf(buf, sizeof buf,
                              "  <rect x=\"%d\" y=\"%.2f\" width=\"%d\" height=\"%.2f\" "
                              "fill=\"#4477aa\"/>\n",
                              x, double(base) - h, kBarW, h);
                out += buf;
            }
            const std::string label = binary_label(m, r.dist.n_qubits);
            const int cx = x + kBarW / 2;
            if (r.dist.n_qubits <= 5) {
                std::snprintf(buf, sizeof buf,
                              "  <text x=\"%d\" y=\"%d\" font-size=\"9\" "
                              "text-anchor=\"middle\">%s</text>\n",
                              cx, base + 14, label.c_str());
            } else {
                std::snprintf(buf, sizeof buf,
                              "  <text x=\"%d\" y=\"%d\" font-size=\"9\" text-anchor=\"start\" "
                              "transform=\"rotate(90 %d %d)\">%s</text>\n",
                              cx, base + 10, cx, base + 10, label.c_str());
            }
            out += buf;
        }
    }
    out += "</svg>\n";
    return out;
}

ExperimentConfig preset_config(const std::string& signal, std::uint64_t seed) {
    ExperimentConfig cfg;
    cfg.n_qubits = 4;
    cfg.signal = parse_signal_spec(signal, 4);
    cfg.shots = 0;
    cfg.seed = seed;
    return cfg;
}

} // namespace

OutputFormat parse_output_format(const std::string& name) {
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "svg") return OutputFormat::Svg;
    if (name == "text") return OutputFormat::Text;
    throw UnsupportedFormat("format '" + name + "' not supported; use json, csv, svg or text");
}

std::string output_format_name(OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::Json: return "json";
        case OutputFormat::Csv: return "csv";
        case OutputFormat::Svg: return "svg";
        case OutputFormat::Text: return "text";
    }
    return "?";
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
    validate_config(cfg);
    ExperimentReport report;
    report.config = cfg;

    const StateVector encoded = encode_signal(cfg.signal);
    const Circuit iqft = iqft_circuit(cfg.n_qubits);
    const StateVector transformed = run_circuit(iqft, encoded);
    report.dist = distribution(transformed);
    if (cfg.shots > 0) report.counts = sample(transformed, cfg.shots, cfg.seed);

    for (std::size_t m = 0; m < report.dist.probs.size(); ++m)
        if (report.dist.probs[m] > 1e-12)
            report.decoded_phases.push_back(
                {m, decode_phase(m, cfg.n_qubits), report.dist.probs[m]});
    std::sort(report.decoded_phases.begin(), report.decoded_phases.end(),
              [](const DecodedPhase& a, const DecodedPhase& b) {
                  if (a.probability != b.probability) return a.probability > b.probability;
                  return a.bin < b.bin;
              });

    report.theorem1 = check_theorem1(cfg.signal);

    // Per-component argmax bins back the pairwise operational verdicts
    // (equivalent to empirical_resolution on each pair).
    const std::size_t dim = dim_for_qubits(cfg.n_qubits);
    std::vector<std::size_t> peaks;
    peaks.reserve(cfg.signal.components.size());
    for (const SignalComponent& c : cfg.signal.components) {
        const StateVector single =
            run_circuit(iqft, encode_phase(c.phase_bins / double(dim), cfg.n_qubits));
        peaks.push_back(argmax_bin(distribution(single).probs));
    }
    for (std::size_t i = 0; i < peaks.size(); ++i)
        for (std::size_t j = i + 1; j < peaks.size(); ++j) {
            PhasePairVerdict v;
            v.phase_a_bins = cfg.signal.components[i].phase_bins;
            v.phase_b_bins = cfg.signal.components[j].phase_bins;
            v.distinguished = peaks[i] != peaks[j];
            if (v.phase_a_bins > 0.0 && v.phase_b_bins > 0.0) {
                EigenPair pair{std::min(v.phase_a_bins, v.phase_b_bins),
                               std::max(v.phase_a_bins, v.phase_b_bins)};
                v.checker = check_theorem2(pair, cfg.n_qubits);
            }
            report.theorem2.push_back(std::move(v));
        }
    return report;
}

std::vector<std::string> preset_names() {
    return {"fig1-left", "fig1-right", "fig2-left", "fig2-right", "fig3"};
}

PresetResult run_preset(const std::string& name) {
    PresetResult result;
    result.name = name;
    if (name == "fig1-left") {
        result.runs.push_back(run_experiment(preset_config("5:1", 0)));
    } else if (name == "fig1-right") {
        std::string signal;
        for (int p = 0; p < 16; ++p) signal += (p ? "," : "") + std::to_string(p) + ":1";
        result.runs.push_back(run_experiment(preset_config(signal, 0)));
    } else if (name == "fig2-left") {
        result.runs.push_back(run_experiment(preset_config("3:1,5:2,7:4", 0)));
    } else if (name == "fig2-right") {
        result.runs.push_back(run_experiment(preset_config("2:1,4.5:2,7:4", 0)));
    } else if (name == "fig3") {
        // Two constituent signals, merged; sampling streams (if any were
        // requested) would split as seed + run index.
        result.runs.push_back(run_experiment(preset_config("15:1", 0)));
        result.runs.push_back(run_experiment(preset_config("17:1", 1)));
    } else {
        std::string valid;
        for (const std::string& p : preset_names()) valid += (valid.empty() ? "" : ", ") + p;
        throw UnknownPreset("unknown preset '" + name + "'; valid names: " + valid);
    }
    return result;
}

std::string report_json(const ExperimentReport& r) {
    detail::ordered_json j;
    j["schema"] = 1;
    j.update(report_body(r));
    return j.dump(2) + "\n";
}

std::string preset_json(const PresetResult& p) {
    detail::ordered_json j;
    j["schema"] = 1;
    j["preset"] = p.name;
    detail::ordered_json reports = detail::ordered_json::array();
    for (const ExperimentReport& r : p.runs) reports.push_back(report_body(r));
    j["reports"] = std::move(reports);
    return j.dump(2) + "\n";
}

std::string render_histogram(const ExperimentReport& r, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::Csv:
            return histogram_csv(r.dist, r.counts ? &*r.counts : nullptr);
        case OutputFormat::Text:
            return render_text_rows(r);
        case OutputFormat::Svg:
            return render_svg({&r});
        case OutputFormat::Json:
            break;
    }
    throw UnsupportedFormat("histograms render as text, csv or svg; use report_json for json");
}

std::string render_histogram(const PresetResult& p, OutputFormat fmt) {
    if (p.runs.empty()) throw std::invalid_argument("render_histogram: preset has no runs");
    switch (fmt) {
        case OutputFormat::Csv: {
            std::string out = render_histogram(p.runs.front(), OutputFormat::Csv);
            for (std::size_t i = 1; i < p.runs.size(); ++i) {
                const std::string next = render_histogram(p.runs[i], OutputFormat::Csv);
                out += next.substr(next.find('\n') + 1); // drop the repeated header
            }
            return out;
        }
        case OutputFormat::Text: {
            std::string out;
            for (std::size_t i = 0; i < p.runs.size(); ++i) {
                out += "# run " + std::to_string(i + 1) + ": " +
                       signal_spec_text(p.runs[i].config.signal) + "\n";
                out += render_text_rows(p.runs[i]);
            }
            return out;
        }
        case OutputFormat::Svg: {
            std::vector<const ExperimentReport*> runs;
            for (const ExperimentReport& r : p.runs) runs.push_back(&r);
            return render_svg(runs);
        }
        case OutputFormat::Json:
            break;
    }
    throw UnsupportedFormat("histograms render as text, csv or svg; use preset_json for json");
}

} // namespace qftlab
