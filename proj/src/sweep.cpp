#include "polardf/sweep.hpp"

#include <cmath>
#include <limits>

#include "polardf/channel.hpp"
#include "polardf/errors.hpp"
#include "polardf/estimators.hpp"
#include "polardf/rng.hpp"

namespace polardf {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

std::vector<SweepRow> run_sweep(const Scenario& s) {
    if (s.geometries.size() != 1)
        throw ConfigError("sweep: exactly one geometry required (got " +
                          std::to_string(s.geometries.size()) + ")");
    if (s.noise && s.trials != 1)
        throw ConfigError("sweep: noise requires trials = 1");

    const BeaconGeometry& g = s.primary_geometry();
    const bool want_amplitude = s.method != MethodSelection::phase;
    const bool want_phase = s.method != MethodSelection::amplitude;

    const std::vector<double> grid = s.alpha_grid();
    std::vector<SweepRow> rows;
    rows.reserve(grid.size());

    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
        const double alpha = grid[gi];
        SweepRow row{};
        row.alpha_true = alpha;
        row.delta_phi = phase_difference(g, Bearing(alpha));

        ChannelOutputs out = lps_outputs(row.delta_phi, s.theta);
        if (s.noise) {
            NoiseSpec trial = *s.noise;
            trial.seed = derive_trial_seed(s.noise->seed, gi, 0);
            out = add_noise(out, trial);
        }
        row.a1 = out.a1;
        row.a2 = out.a2;
        row.ratio = out.a2 > 0.0 ? out.a1 / out.a2 : kNaN;
        row.psi1 = out.psi1;
        row.psi2 = out.psi2;
        try {
            row.delta_psi = phase_diff_output(out);
            row.u_pd = std::sin(row.delta_psi);
        } catch (const DegeneratePhaseError&) {
            row.delta_psi = kNaN;
            row.u_pd = kNaN;
        }

        // Polarization state of the incoming resultant wave (noise-free by
        // construction: it is a property of the wave, not of the receiver).
        const PolarizationState ps = ellipse_params(resultant_wave(row.delta_phi));
        row.beta = ps.beta;
        row.r_mod = ps.r_mod;

        row.alpha_est_amplitude = kNaN;
        if (want_amplitude) {
            try {
                row.alpha_est_amplitude =
                    bearing_amplitude(g, out.a1, out.a2, s.ambiguity).principal;
            } catch (const NumericalError&) {
            }
        }
        row.alpha_est_phase = kNaN;
        if (want_phase && std::isfinite(row.delta_psi)) {
            try {
                row.alpha_est_phase =
                    bearing_phase(g, row.delta_psi, s.ambiguity).principal;
            } catch (const NumericalError&) {
            }
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace polardf
