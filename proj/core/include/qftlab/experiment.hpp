// Experiment pipeline: encode a signal, run the inverse QFT, measure, and
// attach the accuracy-theory reports. Presets pin the five canonical
// configurations used by the golden tests; all serialization here is
// deterministic (identical config + seed => identical bytes).

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qftlab/analysis.hpp"
#include "qftlab/encoding.hpp"
#include "qftlab/measurement.hpp"

namespace qftlab {

enum class OutputFormat { Json, Csv, Svg, Text };

// Parses "json" / "csv" / "svg" / "text"; throws UnsupportedFormat.
OutputFormat parse_output_format(const std::string& name);
std::string output_format_name(OutputFormat fmt);

struct ExperimentConfig {
    int n_qubits = 4;
    SignalSpec signal;
    std::uint64_t shots = 0; // 0 = exact distribution only
    std::uint64_t seed = 0;
    std::vector<OutputFormat> outputs{OutputFormat::Json, OutputFormat::Csv};
};

struct DecodedPhase {
    std::uint64_t bin = 0;
    double theta = 0.0; // bin / 2^n
    double probability = 0.0;
};

// Resolution verdicts for one pair of signal components. The Theorem-2
// checker needs strictly positive eigenvalues, so it is skipped (left
// empty) when either phase is 0; the operational test always runs.
struct PhasePairVerdict {
    double phase_a_bins = 0.0;
    double phase_b_bins = 0.0;
    bool distinguished = false;
    std::optional<Theorem2Verdict> checker;
};

struct ExperimentReport {
    ExperimentConfig config;
    OutcomeDistribution dist;
    std::optional<ShotCounts> counts; // present iff shots > 0
    std::vector<DecodedPhase> decoded_phases; // prob > 1e-12, descending
    Theorem1Report theorem1;
    std::vector<PhasePairVerdict> theorem2;
};

// Multi-run presets (fig3) carry one report per constituent signal.
struct PresetResult {
    std::string name;
    std::vector<ExperimentReport> runs;
};

// Validates the config (ConfigInvalid with a field-level message), then
// runs encode_signal -> iQFT -> distribution [-> sample].
ExperimentReport run_experiment(const ExperimentConfig& cfg);

// Catalog: fig1-left, fig1-right, fig2-left, fig2-right, fig3.
// Throws UnknownPreset for anything else.
PresetResult run_preset(const std::string& name);
std::vector<std::string> preset_names();

// JSON documents (schema field = 1); numbers carry 9 significant digits.
std::string report_json(const ExperimentReport& r);
std::string preset_json(const PresetResult& p);

// Histogram rendering: Text (aligned bar rows), Csv (measurement schema),
// Svg (standalone file, one rect per nonzero bin). Json is not a histogram
// format — UnsupportedFormat.
std::string render_histogram(const ExperimentReport& r, OutputFormat fmt);
std::string render_histogram(const PresetResult& p, OutputFormat fmt);

} // namespace qftlab
