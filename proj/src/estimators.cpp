#include "polardf/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace polardf {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// A nearest candidate at (or numerically indistinguishable from) half the
// branch spacing is a conflict, not a resolution.
constexpr double kWindowGuard = 1.0 - 1e-6;
}  // namespace

PhaseDetector::PhaseDetector(double u0_volts, double k_volts)
    : u0(u0_volts), k(k_volts) {
    if (!(u0 > 0.0))
        throw std::invalid_argument("PhaseDetector: u0 must be > 0");
}

BearingEstimate bearing_amplitude(const BeaconGeometry& g, double a1, double a2,
                                  const AmbiguitySpec& spec) {
    if (!(a1 >= 0.0) || !(a2 >= 0.0))
        throw std::invalid_argument(
            "bearing_amplitude: amplitudes must be non-negative");
    if (a1 == 0.0 && a2 == 0.0)
        throw DegenerateInputError(
            "bearing_amplitude: both arm amplitudes are zero; the ratio "
            "carries no bearing information");

    // atan2 covers the whole [0, pi] range; a2 = 0 lands on pi exactly.
    const double abs_delta_phi = 2.0 * std::atan2(a1, a2);

    BearingEstimate est = bearing_from_phase(g, abs_delta_phi, spec);
    est.method = Method::amplitude;
    est.sign_resolved = false;
    return est;
}

double amplitude_df_characteristic(const BeaconGeometry& g, double alpha) {
    const double u = kPi * g.ratio() * std::sin(alpha);
    // Null of the second arm: u at an odd multiple of pi/2.
    const double to_singularity = std::remainder(u - kPi / 2.0, kPi);
    if (std::abs(to_singularity) <= 1e-12 * std::max(1.0, std::abs(u)))
        return std::numeric_limits<double>::infinity();
    return std::abs(std::tan(u));
}

double amplitude_steepness(const BeaconGeometry& g) {
    return kPi * g.d / g.lambda;
}

BearingEstimate bearing_phase(const BeaconGeometry& g, double delta_psi,
                              const AmbiguitySpec& spec) {
    BearingEstimate est = bearing_from_phase(g, delta_psi, spec);
    est.method = Method::phase;
    est.sign_resolved = true;
    return est;
}

double phase_detector_voltage(const PhaseDetector& pd, const BeaconGeometry& g,
                              double alpha) {
    return pd.u0 * std::sin(kTwoPi * g.ratio() * std::sin(alpha));
}

DfCharacteristic phase_df_characteristic(const BeaconGeometry& g, double alpha) {
    DfCharacteristic dc;
    dc.exact = std::sin(kTwoPi * g.ratio() * std::sin(alpha));
    dc.linear = kTwoPi * g.ratio() * alpha;
    dc.discrepancy = dc.linear - dc.exact;
    return dc;
}

double phase_steepness(const BeaconGeometry& g) {
    return 2.0 * kPi * g.d / g.lambda;
}

namespace {

// Candidates consistent with the measurement: positive phase sign only when
// the estimate's sign is trusted, everything otherwise.
std::vector<const BearingCandidate*> usable_candidates(const BearingEstimate& est) {
    std::vector<const BearingCandidate*> out;
    for (const auto& c : est.candidates) {
        if (!est.sign_resolved || c.sign > 0) out.push_back(&c);
    }
    return out;
}

}  // namespace

Bearing resolve_multibase(
    const std::vector<std::pair<BeaconGeometry, BearingEstimate>>& estimates) {
    if (estimates.empty())
        throw std::invalid_argument("resolve_multibase: empty estimate list");

    std::vector<const std::pair<BeaconGeometry, BearingEstimate>*> ordered;
    ordered.reserve(estimates.size());
    for (const auto& e : estimates) ordered.push_back(&e);
    std::sort(ordered.begin(), ordered.end(),
              [](const auto* a, const auto* b) {
                  return a->first.ratio() < b->first.ratio();
              });

    double selected = ordered.front()->second.principal;
    double running_sin = std::sin(selected);

    for (std::size_t i = 1; i < ordered.size(); ++i) {
        const BeaconGeometry& g = ordered[i]->first;
        const BearingEstimate& est = ordered[i]->second;
        const auto usable = usable_candidates(est);

        const BearingCandidate* best = nullptr;
        double best_dist = std::numeric_limits<double>::infinity();
        for (const auto* c : usable) {
            const double dist = std::abs(std::sin(c->alpha) - running_sin);
            if (dist < best_dist) {
                best_dist = dist;
                best = c;
            }
        }

        // Branch candidates sit lambda/d apart in sin(alpha); anything at or
        // beyond half that gap is equally attributable to a neighbor.
        const double window = 0.5 * (g.lambda / g.d) * kWindowGuard;
        if (best == nullptr || best_dist >= window) {
            std::ostringstream msg;
            msg << "resolve_multibase: no candidate of base d/lambda=" << g.ratio()
                << " lies within " << window << " (sin-space) of the running "
                << "estimate sin(alpha)=" << running_sin
                << "; nearest is " << best_dist << " away";
            std::vector<std::vector<BearingCandidate>> sets;
            sets.reserve(ordered.size());
            for (const auto* e : ordered) sets.push_back(e->second.candidates);
            throw ResolutionConflictError(msg.str(), std::move(sets));
        }

        selected = best->alpha;
        running_sin = std::sin(selected);
    }

    return Bearing(selected);
}

}  // namespace polardf
