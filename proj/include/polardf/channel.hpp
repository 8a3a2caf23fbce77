// channel.hpp - the onboard two-channel receiver behind the linear
// polarization separator: complex arm signals, detected amplitudes and
// phases, the inter-arm phase difference, and additive channel noise.
//
// The receiver is ideal: linear amplitude characteristic, linear detector,
// quadrant-correct phase extraction. Amplitude = |e|, phase = arg(e).

#pragma once

#include <complex>
#include <cstdint>
#include <utility>

#include "polardf/jones.hpp"

namespace polardf {

/// Arm signals and their detected amplitudes/phases.
struct ChannelOutputs {
    std::complex<double> e1;  ///< vertical-polarization arm
    std::complex<double> e2;  ///< horizontal-polarization arm
    double a1 = 0.0;          ///< |e1|
    double a2 = 0.0;          ///< |e2|
    double psi1 = 0.0;        ///< arg(e1), (-pi, pi]
    double psi2 = 0.0;        ///< arg(e2), (-pi, pi]
};

/// Additive-noise channel: per-arm SNR in dB referenced to the mean per-arm
/// signal intensity, and the seed of the deterministic noise stream.
struct NoiseSpec {
    double snr_db = 0.0;
    std::uint64_t seed = 0;
};

/// Fills amplitudes/phases from the complex arm signals.
ChannelOutputs make_channel_outputs(std::complex<double> e1,
                                    std::complex<double> e2);

/// Arm signals for a unit-intensity resultant wave with inter-wave phase
/// difference delta_phi, received through a separator oriented at theta:
///   e1 = (1/sqrt 2) (-sin theta + cos theta e^{j delta_phi})
///   e2 = (1/sqrt 2) ( cos theta + sin theta e^{j delta_phi})
/// Identical to project_arm1/2(rotate(resultant_wave(delta_phi), theta)).
ChannelOutputs lps_outputs(double delta_phi, BasisAngle theta);

/// Closed-form detected amplitudes:
///   A1 = sqrt(1 - sin(2 theta) cos(delta_phi)) / sqrt 2
///   A2 = sqrt(1 + sin(2 theta) cos(delta_phi)) / sqrt 2
/// Always satisfies A1^2 + A2^2 = 1.
std::pair<double, double> amplitudes(double delta_phi, BasisAngle theta);

/// Inter-arm phase difference arg(e1 * conj(e2)), wrapped to (-pi, pi].
/// Throws DegeneratePhaseError (with the arm identified) when either arm is
/// numerically dark: |e| below 1e-12 relative to the brighter arm.
double phase_diff_output(const ChannelOutputs& c);

/// Convenience overload evaluating the noise-free receiver first.
double phase_diff_output(double delta_phi, BasisAngle theta);

/// Adds independent circular complex Gaussian noise to both arms and
/// re-detects. The per-arm noise variance is
///   sigma^2 = (intensity(e1) + intensity(e2)) / 2 / 10^(snr_db/10),
/// i.e. snr_db is measured against the mean per-arm signal intensity; both
/// arms get the same sigma. Deterministic for a given spec.seed.
ChannelOutputs add_noise(const ChannelOutputs& c, const NoiseSpec& spec);

}  // namespace polardf
