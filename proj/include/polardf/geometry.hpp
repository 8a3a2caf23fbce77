// geometry.hpp - beacon baseline geometry: bearing <-> inter-wave phase
// difference, branch/sign candidate enumeration, and the ambiguity zones
// a given baseline-to-wavelength ratio allows.

#pragma once

#include <vector>

namespace polardf {

/// Two emission points horizontally spaced by d, radiating at wavelength
/// lambda. Both lengths in meters, both strictly positive.
struct BeaconGeometry {
    double d;
    double lambda;

    BeaconGeometry(double d_meters, double lambda_meters);

    double ratio() const { return d / lambda; }
};

/// Angle between the baseline-center perpendicular and the direction to the
/// moving object, restricted to the front half-plane [-pi/2, pi/2].
struct Bearing {
    double alpha;

    explicit Bearing(double alpha_radians);
};

/// Branch enumeration limit and the phase-meter unambiguous half-interval.
struct AmbiguitySpec {
    int n_max = 0;
    double phi0 = 0.0;  // set by constructor; radians, in (0, pi]

    AmbiguitySpec();
    AmbiguitySpec(int n_max_branches, double phi0_radians);
};

/// Which estimation method produced an estimate.
enum class Method { amplitude, phase };

/// One admissible bearing: alpha = arcsin((lambda/2 pi d) * (sign*dphi + 2 pi branch_n)).
struct BearingCandidate {
    double alpha;  ///< radians, in [-pi/2, pi/2]
    int branch_n;  ///< signed 2-pi branch index
    int sign;      ///< +1 or -1, the sign applied to the measured phase
};

/// Candidate set plus the selected principal value.
struct BearingEstimate {
    double principal = 0.0;
    std::vector<BearingCandidate> candidates;
    Method method = Method::phase;
    /// False when the measurement is even in the phase difference and the
    /// bearing sign is genuinely unknown (amplitude method).
    bool sign_resolved = true;
};

/// Half-width of an angular interval around broadside. covers_hemisphere is
/// set when the baseline does not limit the interval and the full +-pi/2
/// front sector applies.
struct AngularZone {
    double half_width;
    bool covers_hemisphere;
};

/// Phase difference between the two orthogonally polarized waves at the
/// receiving point: dphi = (2 pi d / lambda) * sin(alpha). Odd in alpha.
double phase_difference(const BeaconGeometry& g, Bearing b);

/// Inverts the phase difference to every bearing in [-pi/2, pi/2] that is
/// consistent with delta_phi up to sign and up to 2-pi branches with
/// |branch| <= spec.n_max. delta_phi is used as given (not wrapped); wrapped
/// inputs are covered by the branch enumeration. The principal value is the
/// branch-0, positive-sign solution when it exists, otherwise the candidate
/// with the smallest |branch| (positive sign, then smaller |alpha|, as
/// tie-breaks). Throws NoSolutionError when no branch lands inside the
/// arcsine domain.
BearingEstimate bearing_from_phase(const BeaconGeometry& g, double delta_phi,
                                   const AmbiguitySpec& spec);

/// Unambiguous bearing interval of the amplitude method: arcsin(lambda/2d).
/// For lambda/2d > 1 the whole front hemisphere is unambiguous and the
/// result is flagged.
AngularZone unambiguity_zone(const BeaconGeometry& g);

/// Unambiguous sector of a phase meter whose output is univocal within
/// +-phi0: arcsin(phi0 * lambda / (2 pi d)), flagged when unbounded.
AngularZone unambiguous_sector(const BeaconGeometry& g, double phi0);

}  // namespace polardf
