#include "polardf/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "polardf/errors.hpp"

namespace polardf {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Slack for arcsine arguments that land a few ulps outside [-1, 1].
constexpr double kDomainSlack = 1e-12;

// Candidates closer than this (radians) are the same bearing.
constexpr double kDedupeEps = 1e-12;

bool preferred(const BearingCandidate& a, const BearingCandidate& b) {
    if (std::abs(a.branch_n) != std::abs(b.branch_n))
        return std::abs(a.branch_n) < std::abs(b.branch_n);
    if (a.sign != b.sign) return a.sign > b.sign;
    return std::abs(a.alpha) < std::abs(b.alpha);
}
}  // namespace

BeaconGeometry::BeaconGeometry(double d_meters, double lambda_meters)
    : d(d_meters), lambda(lambda_meters) {
    if (!(d > 0.0))
        throw std::invalid_argument("BeaconGeometry: d must be > 0");
    if (!(lambda > 0.0))
        throw std::invalid_argument("BeaconGeometry: lambda must be > 0");
}

Bearing::Bearing(double alpha_radians) : alpha(alpha_radians) {
    if (!(std::abs(alpha) <= kPi / 2.0 + 1e-12))
        throw std::invalid_argument(
            "Bearing: alpha must lie in the front half-plane [-pi/2, pi/2]");
}

AmbiguitySpec::AmbiguitySpec() : n_max(0), phi0(kPi) {}

AmbiguitySpec::AmbiguitySpec(int n_max_branches, double phi0_radians)
    : n_max(n_max_branches), phi0(phi0_radians) {
    if (n_max < 0)
        throw std::invalid_argument("AmbiguitySpec: n_max must be >= 0");
    if (!(phi0 > 0.0 && phi0 <= kPi + 1e-12))
        throw std::invalid_argument("AmbiguitySpec: phi0 must lie in (0, pi]");
}

double phase_difference(const BeaconGeometry& g, Bearing b) {
    return kTwoPi * g.ratio() * std::sin(b.alpha);
}

BearingEstimate bearing_from_phase(const BeaconGeometry& g, double delta_phi,
                                   const AmbiguitySpec& spec) {
    const double scale = g.lambda / (kTwoPi * g.d);

    std::vector<BearingCandidate> found;
    for (int n = 0; n <= spec.n_max; ++n) {
        for (int sign : {+1, -1}) {
            for (int branch_sign : {+1, -1}) {
                if (n == 0 && branch_sign < 0) continue;
                const int branch = branch_sign * n;
                const double phi = sign * delta_phi + kTwoPi * branch;
                double x = phi * scale;
                if (std::abs(x) > 1.0 + kDomainSlack) continue;
                x = std::clamp(x, -1.0, 1.0);
                found.push_back({std::asin(x), branch, sign});
            }
        }
    }

    if (found.empty()) {
        std::ostringstream msg;
        msg << "bearing_from_phase: no bearing in [-pi/2, pi/2] is consistent with "
            << "delta_phi=" << delta_phi << " at d/lambda=" << g.ratio()
            << " within " << spec.n_max << " branches";
        throw NoSolutionError(msg.str());
    }

    // Collapse duplicates (e.g. both signs of a zero phase), keeping the
    // candidate with the smaller branch index.
    std::sort(found.begin(), found.end(),
              [](const BearingCandidate& a, const BearingCandidate& b) {
                  if (a.alpha != b.alpha) return a.alpha < b.alpha;
                  return preferred(a, b);
              });
    std::vector<BearingCandidate> candidates;
    for (const auto& c : found) {
        if (!candidates.empty() &&
            std::abs(c.alpha - candidates.back().alpha) <= kDedupeEps) {
            if (preferred(c, candidates.back())) candidates.back() = c;
        } else {
            candidates.push_back(c);
        }
    }

    const auto principal = std::min_element(candidates.begin(), candidates.end(),
                                            [](const BearingCandidate& a,
                                               const BearingCandidate& b) {
                                                return preferred(a, b);
                                            });

    BearingEstimate est;
    est.principal = principal->alpha;
    est.candidates = std::move(candidates);
    est.method = Method::phase;
    est.sign_resolved = true;
    return est;
}

AngularZone unambiguity_zone(const BeaconGeometry& g) {
    const double x = g.lambda / (2.0 * g.d);
    if (x > 1.0) return {kPi / 2.0, true};
    return {std::asin(x), false};
}

AngularZone unambiguous_sector(const BeaconGeometry& g, double phi0) {
    if (!(phi0 > 0.0))
        throw std::invalid_argument("unambiguous_sector: phi0 must be > 0");
    const double x = phi0 * g.lambda / (kTwoPi * g.d);
    if (x > 1.0) return {kPi / 2.0, true};
    return {std::asin(x), false};
}

}  // namespace polardf
