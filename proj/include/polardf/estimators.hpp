// estimators.hpp - bearing estimation from measured channel outputs.
//
// Two methods, each tied to a separator orientation:
//   amplitude method, theta = pi/4: bearing from the arm amplitude ratio;
//     the ratio is even in the phase difference, so the bearing sign is
//     genuinely unresolved.
//   phase method, theta = 0: bearing from the measured inter-arm phase
//     difference, sign included.
// Estimators consume measured quantities only; they never see the true
// phase difference.

#pragma once

#include <utility>
#include <vector>

#include "polardf/errors.hpp"
#include "polardf/geometry.hpp"

namespace polardf {

/// Phase-detector constants. The voltage scale u0 is what the normalized
/// discriminator characteristic uses; the raw gain k is kept as metadata
/// (AGC/limiting holds the detector input amplitude constant).
struct PhaseDetector {
    double u0 = 1.0;
    double k = 1.0;

    PhaseDetector() = default;
    PhaseDetector(double u0_volts, double k_volts);
};

/// No candidate of a finer base fell inside the selection window of the
/// running multi-base estimate. Carries every base's candidate set, coarse
/// to fine, for diagnosis.
class ResolutionConflictError : public NumericalError {
public:
    ResolutionConflictError(const std::string& what,
                            std::vector<std::vector<BearingCandidate>> sets)
        : NumericalError(what), candidate_sets(std::move(sets)) {}

    std::vector<std::vector<BearingCandidate>> candidate_sets;
};

/// Amplitude-method inversion. Recovers |delta_phi| = 2 atan2(a1, a2)
/// (covering the full [0, pi] range, a2 = 0 included) and enumerates
/// bearing candidates for both phase signs. sign_resolved is false: the
/// amplitude ratio cannot tell +alpha from -alpha. Throws
/// DegenerateInputError when both amplitudes are zero.
BearingEstimate bearing_amplitude(const BeaconGeometry& g, double a1, double a2,
                                  const AmbiguitySpec& spec);

/// Amplitude-method direction-finding characteristic
/// |tan((pi d / lambda) sin alpha)|, the noise-free arm ratio A1/A2 at
/// theta = pi/4. Returns +infinity at the singular bearings where the
/// second arm nulls.
double amplitude_df_characteristic(const BeaconGeometry& g, double alpha);

/// Slope of the amplitude-method characteristic at broadside: pi d / lambda
/// per radian.
double amplitude_steepness(const BeaconGeometry& g);

/// Phase-method inversion of a measured inter-arm phase difference
/// (theta = 0, where it equals the inter-wave phase difference). Candidate
/// enumeration as bearing_from_phase; the sign carries through, so
/// sign_resolved is true and the principal value is the branch-0 solution
/// inside the phase meter's unambiguous sector.
BearingEstimate bearing_phase(const BeaconGeometry& g, double delta_psi,
                              const AmbiguitySpec& spec);

/// Phase-detector output u0 * sin((2 pi d / lambda) sin alpha). Odd in
/// alpha, zero at broadside.
double phase_detector_voltage(const PhaseDetector& pd, const BeaconGeometry& g,
                              double alpha);

/// Normalized phase-method direction-finding characteristic: the exact
/// sin((2 pi d / lambda) sin alpha) next to its small-angle linearization
/// (2 pi d / lambda) alpha.
struct DfCharacteristic {
    double exact;
    double linear;
    double discrepancy;  ///< linear - exact
};

/// Both forms of the phase-method characteristic; the linear form is
/// meaningful for |(2 pi d / lambda) sin alpha| ~< 0.3.
DfCharacteristic phase_df_characteristic(const BeaconGeometry& g, double alpha);

/// Slope of the phase-method characteristic at broadside: 2 pi d / lambda
/// per radian, exactly twice the amplitude-method steepness.
double phase_steepness(const BeaconGeometry& g);

/// Coarse-to-fine ambiguity resolution over several baselines. Estimates
/// are ordered by d/lambda internally; the coarsest base's principal value
/// seeds a running bearing, and each finer base contributes its candidate
/// nearest to it (distance measured in sin(alpha), where branch candidates
/// are evenly spaced lambda/d apart). For sign-resolved estimates only the
/// positive-sign candidates are measurement-consistent and considered.
/// Throws ResolutionConflictError when the nearest candidate of some base
/// is half a branch spacing or farther from the running estimate.
Bearing resolve_multibase(
    const std::vector<std::pair<BeaconGeometry, BearingEstimate>>& estimates);

}  // namespace polardf
