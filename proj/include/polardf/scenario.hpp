// scenario.hpp - experiment configuration loaded from JSON. Angles cross
// the file boundary in degrees (keys carry an explicit _deg suffix) and are
// stored in radians.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "polardf/channel.hpp"
#include "polardf/geometry.hpp"
#include "polardf/jones.hpp"

namespace polardf {

/// Which estimator(s) a run exercises.
enum class MethodSelection { amplitude, phase, both };

MethodSelection method_selection_from_string(const std::string& name);
std::string to_string(MethodSelection m);

/// One experiment: geometry (one base, or several for multi-base work), the
/// separator orientation, the bearing grid, and optional channel noise.
struct Scenario {
    std::vector<BeaconGeometry> geometries;
    BasisAngle theta{0.0};
    MethodSelection method = MethodSelection::phase;
    double alpha_start = 0.0;  ///< radians
    double alpha_stop = 0.0;   ///< radians
    double alpha_step = 0.0;   ///< radians, > 0
    int trials = 1;
    std::optional<NoiseSpec> noise;
    AmbiguitySpec ambiguity;

    /// Grid points alpha_start, alpha_start + step, ... <= alpha_stop.
    std::vector<double> alpha_grid() const;

    /// First (or only) geometry; single-base operations use this.
    const BeaconGeometry& primary_geometry() const { return geometries.front(); }
};

/// Parses and validates a scenario from JSON text. Throws ConfigError with
/// the offending field named.
Scenario parse_scenario(const std::string& json_text);

/// Reads the file and parses it. Throws IoError / ConfigError.
Scenario load_scenario(const std::filesystem::path& path);

}  // namespace polardf
