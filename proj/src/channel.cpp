#include "polardf/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "polardf/errors.hpp"
#include "polardf/rng.hpp"

namespace polardf {

namespace {
// An arm this much dimmer than the brighter one carries no usable phase.
constexpr double kDarkArmEps = 1e-12;
}  // namespace

ChannelOutputs make_channel_outputs(std::complex<double> e1,
                                    std::complex<double> e2) {
    ChannelOutputs c;
    c.e1 = e1;
    c.e2 = e2;
    c.a1 = std::abs(e1);
    c.a2 = std::abs(e2);
    c.psi1 = std::arg(e1);
    c.psi2 = std::arg(e2);
    return c;
}

ChannelOutputs lps_outputs(double delta_phi, BasisAngle theta) {
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    const double c = std::cos(theta.theta);
    const double s = std::sin(theta.theta);
    const std::complex<double> w = std::polar(1.0, delta_phi);
    return make_channel_outputs(inv_sqrt2 * (-s + c * w),
                                inv_sqrt2 * (c + s * w));
}

std::pair<double, double> amplitudes(double delta_phi, BasisAngle theta) {
    // Half-angle form of (1 -+ sin(2 theta) cos(delta_phi)) / 2: every term
    // is nonnegative, so nothing cancels where an arm goes dark (the naive
    // 1 - |m| form loses ~8 digits of the dim arm near |m| = 1).
    const double s = std::sin(2.0 * theta.theta);
    const double base = 1.0 - std::abs(s);
    const double sh = std::sin(delta_phi * 0.5);
    const double ch = std::cos(delta_phi * 0.5);
    const double dim = 2.0 * std::abs(s) * sh * sh;     // carries 1 - cos
    const double bright = 2.0 * std::abs(s) * ch * ch;  // carries 1 + cos
    const double q1 = base + (s >= 0.0 ? dim : bright);
    const double q2 = base + (s >= 0.0 ? bright : dim);
    return {std::sqrt(q1 * 0.5), std::sqrt(q2 * 0.5)};
}

double phase_diff_output(const ChannelOutputs& c) {
    const double bright = std::max(c.a1, c.a2);
    if (c.a1 <= kDarkArmEps * bright || bright == 0.0) {
        std::ostringstream msg;
        msg << "phase_diff_output: arm 1 amplitude " << c.a1
            << " is numerically zero; its phase is undefined";
        throw DegeneratePhaseError(msg.str(), 1);
    }
    if (c.a2 <= kDarkArmEps * bright) {
        std::ostringstream msg;
        msg << "phase_diff_output: arm 2 amplitude " << c.a2
            << " is numerically zero; its phase is undefined";
        throw DegeneratePhaseError(msg.str(), 2);
    }
    return std::arg(c.e1 * std::conj(c.e2));
}

double phase_diff_output(double delta_phi, BasisAngle theta) {
    return phase_diff_output(lps_outputs(delta_phi, theta));
}

ChannelOutputs add_noise(const ChannelOutputs& c, const NoiseSpec& spec) {
    if (!std::isfinite(spec.snr_db))
        throw std::invalid_argument("add_noise: snr_db must be finite");

    const double signal_per_arm = 0.5 * (std::norm(c.e1) + std::norm(c.e2));
    const double sigma2 = signal_per_arm / std::pow(10.0, spec.snr_db / 10.0);
    // Circular complex noise: each quadrature carries half the variance.
    const double sigma_q = std::sqrt(0.5 * sigma2);

    std::mt19937_64 rng(spec.seed);
    const auto [n1r, n1i] = normal_pair(rng);
    const auto [n2r, n2i] = normal_pair(rng);

    return make_channel_outputs(
        c.e1 + sigma_q * std::complex<double>(n1r, n1i),
        c.e2 + sigma_q * std::complex<double>(n2r, n2i));
}

}  // namespace polardf
