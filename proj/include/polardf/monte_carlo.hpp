// monte_carlo.hpp - bearing-error statistics under channel noise.

#pragma once

#include <string>
#include <vector>

#include "polardf/scenario.hpp"

namespace polardf {

/// Error statistics for one (grid bearing, method) pair.
///
/// Errors are measured against the true bearing: the amplitude method is
/// compared against |alpha_true| (its sign is intrinsically unresolved),
/// the phase method against alpha_true itself. std_error is the RMS error
/// about the truth, so estimator bias is part of it — near broadside the
/// amplitude method's folded noise shows up here, not only in mean_error.
struct MonteCarloRow {
    double alpha_true;   ///< grid bearing, radians (signed)
    Method method;
    int trials;          ///< valid trials entering the moments
    double mean_error;   ///< radians
    double std_error;    ///< RMS about the true bearing, radians
    double outlier_rate; ///< failed / out-of-zone / wrong-branch fraction
};

using MonteCarloReport = std::vector<MonteCarloRow>;

/// Runs `scenario.trials` noisy trials per grid bearing and per selected
/// method. Each method operates at its own separator orientation (pi/4 for
/// the amplitude method, 0 for the phase method) regardless of
/// scenario.theta. Trial t at grid index gi draws noise with the seed
/// derive_trial_seed(scenario seed, gi, t), so runs are reproducible and
/// both methods see identical noise streams.
///
/// A trial is an outlier - excluded from the moments, counted in
/// outlier_rate - when estimation fails, when the estimate leaves the
/// method's unambiguous region, or when it is nearer to a neighboring
/// phase branch than to the true one (off by >= half the branch spacing
/// lambda/d in sin(alpha)).
///
/// Requires noise, trials >= 100, and a single-base scenario.
MonteCarloReport run_monte_carlo(const Scenario& s);

}  // namespace polardf
