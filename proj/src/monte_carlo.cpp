#include "polardf/monte_carlo.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "polardf/channel.hpp"
#include "polardf/errors.hpp"
#include "polardf/estimators.hpp"
#include "polardf/rng.hpp"

namespace polardf {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct MethodSetup {
    Method method;
    BasisAngle theta;     // operating separator orientation
    double zone_half;     // unambiguous half-width for the outlier test
};

MonteCarloRow run_point(const Scenario& s, const BeaconGeometry& g,
                        const MethodSetup& m, std::size_t grid_index,
                        double alpha_true) {
    const double delta_phi = phase_difference(g, Bearing(alpha_true));
    const ChannelOutputs clean = lps_outputs(delta_phi, m.theta);
    const double target =
        m.method == Method::amplitude ? std::abs(alpha_true) : alpha_true;
    const double half_spacing = 0.5 / g.ratio();  // branch spacing in sin(alpha)

    long valid = 0;
    long outliers = 0;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int t = 0; t < s.trials; ++t) {
        NoiseSpec trial = *s.noise;
        trial.seed = derive_trial_seed(s.noise->seed, grid_index,
                                       static_cast<std::uint64_t>(t));
        const ChannelOutputs noisy = add_noise(clean, trial);

        double est;
        try {
            if (m.method == Method::amplitude) {
                est = bearing_amplitude(g, noisy.a1, noisy.a2, s.ambiguity).principal;
            } else {
                est = bearing_phase(g, phase_diff_output(noisy), s.ambiguity).principal;
            }
        } catch (const NumericalError&) {
            ++outliers;
            continue;
        }
        if (std::abs(est) > m.zone_half + 1e-12 ||
            std::abs(std::sin(est) - std::sin(target)) >= half_spacing) {
            ++outliers;
            continue;
        }
        const double err = est - target;
        sum += err;
        sum_sq += err * err;
        ++valid;
    }

    MonteCarloRow row{};
    row.alpha_true = alpha_true;
    row.method = m.method;
    row.trials = static_cast<int>(valid);
    row.mean_error = valid > 0 ? sum / static_cast<double>(valid) : kNaN;
    row.std_error = valid > 0 ? std::sqrt(sum_sq / static_cast<double>(valid)) : kNaN;
    row.outlier_rate = static_cast<double>(outliers) / static_cast<double>(s.trials);
    return row;
}

}  // namespace

MonteCarloReport run_monte_carlo(const Scenario& s) {
    if (s.geometries.size() != 1)
        throw ConfigError("montecarlo: exactly one geometry required (got " +
                          std::to_string(s.geometries.size()) + ")");
    if (!s.noise) throw ConfigError("montecarlo: noise is required");
    if (s.trials < 100)
        throw ConfigError("montecarlo: trials must be >= 100 (got " +
                          std::to_string(s.trials) + ")");

    const BeaconGeometry& g = s.primary_geometry();
    std::vector<MethodSetup> setups;
    if (s.method != MethodSelection::phase)
        setups.push_back({Method::amplitude, BasisAngle(std::numbers::pi / 4),
                          unambiguity_zone(g).half_width});
    if (s.method != MethodSelection::amplitude)
        setups.push_back({Method::phase, BasisAngle(0.0),
                          unambiguous_sector(g, s.ambiguity.phi0).half_width});

    const std::vector<double> grid = s.alpha_grid();
    MonteCarloReport report;
    report.reserve(setups.size() * grid.size());
    for (const MethodSetup& m : setups)
        for (std::size_t gi = 0; gi < grid.size(); ++gi)
            report.push_back(run_point(s, g, m, gi, grid[gi]));
    return report;
}

}  // namespace polardf
