// Internal JSON plumbing shared by analysis and experiment serialization.
// Not installed; the public API returns plain strings.

#pragma once

#include <cstdio>
#include <cstdlib>

#include <json.hpp>

#include "qftlab/analysis.hpp"

namespace qftlab::detail {

using ordered_json = nlohmann::ordered_json;

// Rounds to 9 significant digits so emitted numbers are stable across runs
// and readable in reports.
inline double round9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return std::strtod(buf, nullptr);
}

ordered_json to_ordered_json(const Theorem1Report& r);
ordered_json to_ordered_json(const Theorem2Verdict& v);
ordered_json to_ordered_json(const LeakageReport& r);

} // namespace qftlab::detail
