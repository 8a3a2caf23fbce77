// jones.hpp - complex 2-vector (Jones) calculus for the beacon's resultant
// wave: construction, basis rotation, polarization separation into two
// orthogonal linear arms, and polarization-ellipse parameters.
//
// Conventions: linear polarization basis (horizontal ort = ex, vertical
// ort = ey), time dependence omitted, double-precision Cartesian complex
// throughout. All functions are pure and thread-safe.

#pragma once

#include <complex>

namespace polardf {

/// Orientation of the polarization-separator orts relative to the
/// measurement plane, in radians.
///
/// The raw angle is kept as given: rotations compose additively, so eager
/// folding would break rotate(rotate(v, a), b) == rotate(v, a + b).
/// Physically, theta and theta + pi denote the same basis (the arm signals
/// flip by a global sign); use normalized() when comparing bases.
struct BasisAngle {
    double theta = 0.0;

    constexpr BasisAngle() = default;
    constexpr explicit BasisAngle(double radians) : theta(radians) {}

    /// Angle folded into [0, pi).
    double normalized() const;
};

/// Transverse field of a fully polarized plane wave in the linear basis.
struct JonesVector {
    std::complex<double> ex;  ///< horizontal-ort component
    std::complex<double> ey;  ///< vertical-ort component
};

/// Polarization-ellipse parameters of a fully polarized wave.
struct PolarizationState {
    /// Ellipse orientation in [0, pi). When the wave is circular the
    /// orientation is undefined; pi/4 is reported with the flag set.
    double beta = 0.0;
    /// Ellipticity-coefficient modulus (minor/major axis ratio) in [0, 1]:
    /// 0 linear, 1 circular.
    double r_mod = 0.0;
    /// True when beta is meaningless (circular polarization).
    bool orientation_degenerate = false;
};

/// Resultant wave of two equal-amplitude orthogonal linearly polarized
/// emissions arriving with phase difference delta_phi:
/// (1/sqrt(2)) * (1, e^{j delta_phi}). Unit intensity for every delta_phi.
JonesVector resultant_wave(double delta_phi);

/// Counterclockwise basis rotation by theta:
/// R = [[cos, sin], [-sin, cos]]. Preserves intensity.
JonesVector rotate(const JonesVector& v, BasisAngle theta);

/// First separator arm: keeps the vertical component, (0, ey).
JonesVector project_arm1(const JonesVector& v);

/// Second separator arm: keeps the horizontal component, (ex, 0).
JonesVector project_arm2(const JonesVector& v);

/// Total intensity |ex|^2 + |ey|^2.
double intensity(const JonesVector& v);

/// Ellipse orientation and ellipticity modulus from the Stokes parameters
/// of v. Throws DegenerateInputError on zero intensity.
PolarizationState ellipse_params(const JonesVector& v);

}  // namespace polardf
