// Error types thrown by the library. All derive from std::invalid_argument,
// std::out_of_range or std::runtime_error so callers may catch broadly.

#pragma once

#include <stdexcept>
#include <string>

namespace qftlab {

// Operator/state shape disagreement (gate arity vs. register size, vector
// lengths, matrix dimensions).
struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The same qubit named twice in a target list.
struct DuplicateTarget : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A qubit index or outcome index outside the owning register.
struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Two qubit arguments that must differ are equal (swap, controlled gates).
struct EqualIndices : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A gate of the wrong arity where a single-qubit gate is required.
struct BadArity : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Register size outside the supported desk-scale range.
struct SizeOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// A signal superposition annihilated itself; there is no state to normalize.
struct ZeroVector : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Nonpositive observation window passed to the leakage integral.
struct NonpositiveDuration : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Experiment configuration rejected; message names the offending field.
struct ConfigInvalid : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Preset name not in the catalog.
struct UnknownPreset : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Histogram output format not supported.
struct UnsupportedFormat : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace qftlab
