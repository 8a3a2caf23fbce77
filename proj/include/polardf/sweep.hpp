// sweep.hpp - tabulates the receiver observables and both direction-finding
// characteristics over a bearing grid.

#pragma once

#include <vector>

#include "polardf/scenario.hpp"

namespace polardf {

/// One grid point of a characteristic sweep. All angles radians, all
/// amplitudes dimensionless. Entries that are degenerate at the operating
/// point (dark arm, a2 = 0) or not selected by the scenario method are NaN.
struct SweepRow {
    double alpha_true;           ///< grid bearing
    double delta_phi;            ///< inter-wave phase difference at alpha_true
    double a1;                   ///< detected arm-1 amplitude
    double a2;                   ///< detected arm-2 amplitude
    double ratio;                ///< a1 / a2 where a2 > 0
    double psi1;                 ///< detected arm-1 phase
    double psi2;                 ///< detected arm-2 phase
    double delta_psi;            ///< inter-arm phase difference
    double u_pd;                 ///< phase-detector voltage, sin(delta_psi)
    double beta;                 ///< resultant-wave ellipse orientation
    double r_mod;                ///< resultant-wave |axis ratio|
    double alpha_est_amplitude;  ///< amplitude-method principal bearing
    double alpha_est_phase;      ///< phase-method principal bearing
};

/// Evaluates the receiver at scenario.theta on every grid bearing and runs
/// the selected estimator(s) on the (optionally noisy) outputs. Requires a
/// single-base scenario; noise is only accepted with trials = 1, in which
/// case each grid point gets one noisy draw with a seed derived from
/// (scenario seed, grid index, 0).
std::vector<SweepRow> run_sweep(const Scenario& s);

}  // namespace polardf
