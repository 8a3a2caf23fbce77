#include "polardf/jones.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "polardf/errors.hpp"

namespace polardf {

namespace {
constexpr double kPi = std::numbers::pi;

// Relative threshold below which the linear Stokes part counts as zero
// (circular wave, orientation undefined).
constexpr double kLinearPartEps = 1e-12;
}  // namespace

double BasisAngle::normalized() const {
    double t = std::fmod(theta, kPi);
    if (t < 0.0) t += kPi;
    return t;
}

JonesVector resultant_wave(double delta_phi) {
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    return {std::complex<double>(inv_sqrt2, 0.0),
            inv_sqrt2 * std::polar(1.0, delta_phi)};
}

JonesVector rotate(const JonesVector& v, BasisAngle theta) {
    const double c = std::cos(theta.theta);
    const double s = std::sin(theta.theta);
    return {c * v.ex + s * v.ey, -s * v.ex + c * v.ey};
}

JonesVector project_arm1(const JonesVector& v) {
    return {std::complex<double>(0.0, 0.0), v.ey};
}

JonesVector project_arm2(const JonesVector& v) {
    return {v.ex, std::complex<double>(0.0, 0.0)};
}

double intensity(const JonesVector& v) {
    return std::norm(v.ex) + std::norm(v.ey);
}

PolarizationState ellipse_params(const JonesVector& v) {
    const double s0 = intensity(v);
    if (s0 <= 0.0) {
        throw DegenerateInputError(
            "ellipse_params: zero-intensity Jones vector has no polarization state");
    }

    // Stokes parameters in the linear basis.
    const std::complex<double> cross = std::conj(v.ex) * v.ey;
    const double s1 = std::norm(v.ex) - std::norm(v.ey);
    const double s2 = 2.0 * cross.real();
    const double s3 = 2.0 * cross.imag();

    PolarizationState state;

    const double linear_part = std::hypot(s1, s2);
    if (linear_part <= kLinearPartEps * s0) {
        // Circular: no preferred orientation. Report pi/4, the limit the
        // equal-amplitude resultant wave approaches from below.
        state.beta = kPi / 4.0;
        state.orientation_degenerate = true;
    } else {
        double beta = 0.5 * std::atan2(s2, s1);
        if (beta < 0.0) beta += kPi;
        state.beta = beta;
    }

    const double sin_2chi = std::clamp(s3 / s0, -1.0, 1.0);
    state.r_mod = std::abs(std::tan(0.5 * std::asin(sin_2chi)));
    return state;
}

}  // namespace polardf
