// polardf - polarization direction-finding experiments at the command line.
//
// Subcommands:
//   sweep <scenario.json> --out <csv>       tabulate characteristics over a grid
//   montecarlo <scenario.json> --out <csv>  bearing-error statistics under noise
//   estimate ...                            invert one measurement, JSON to stdout
//   zones --d --lambda [--phi0-rad]         unambiguous regions, JSON to stdout
//
// Exit codes: 0 success, 1 usage/config/IO error, 2 numerical failure
// (degenerate measurement or no consistent bearing).

#include <cmath>
#include <iostream>
#include <numbers>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "polardf/csv.hpp"
#include "polardf/errors.hpp"
#include "polardf/estimators.hpp"
#include "polardf/monte_carlo.hpp"
#include "polardf/scenario.hpp"
#include "polardf/sweep.hpp"

namespace {

using nlohmann::json;

constexpr double kDegToRad = std::numbers::pi / 180.0;

struct EstimateArgs {
    double d = 0.0;
    double lambda = 0.0;
    double theta_deg = 0.0;
    std::string method;
    double a1 = 0.0;
    double a2 = 0.0;
    double delta_psi = 0.0;
    bool have_a1 = false, have_a2 = false, have_psi = false;
    int n_max = 0;
    double phi0 = std::numbers::pi;
};

json candidate_json(const polardf::BearingCandidate& c) {
    return json{{"alpha_rad", c.alpha}, {"branch_n", c.branch_n}, {"sign", c.sign}};
}

int run_estimate(const EstimateArgs& a) {
    const polardf::BeaconGeometry g(a.d, a.lambda);
    const polardf::AmbiguitySpec spec(a.n_max, a.phi0);

    polardf::BearingEstimate est;
    if (a.method == "amplitude") {
        if (!(a.have_a1 && a.have_a2) || a.have_psi) {
            std::cerr << "estimate: the amplitude method takes --a1 and --a2\n";
            return 1;
        }
        if (std::abs(a.theta_deg - 45.0) > 1e-9) {
            std::cerr << "estimate: the amplitude method operates at "
                         "--theta-deg 45 (got " << a.theta_deg << ")\n";
            return 1;
        }
        est = polardf::bearing_amplitude(g, a.a1, a.a2, spec);
    } else if (a.method == "phase") {
        if (!a.have_psi || a.have_a1 || a.have_a2) {
            std::cerr << "estimate: the phase method takes --delta-psi-rad\n";
            return 1;
        }
        if (std::abs(a.theta_deg) > 1e-9) {
            std::cerr << "estimate: the phase method operates at --theta-deg 0 "
                         "(got " << a.theta_deg << ")\n";
            return 1;
        }
        est = polardf::bearing_phase(g, a.delta_psi, spec);
    } else {
        std::cerr << "estimate: --method must be amplitude or phase\n";
        return 1;
    }

    json out{{"method", a.method},
             {"principal_alpha_rad", est.principal},
             {"sign_resolved", est.sign_resolved},
             {"candidates", json::array()}};
    for (const auto& c : est.candidates) out["candidates"].push_back(candidate_json(c));
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_zones(double d, double lambda, double phi0) {
    const polardf::BeaconGeometry g(d, lambda);
    const polardf::AngularZone amp = polardf::unambiguity_zone(g);
    const polardf::AngularZone ph = polardf::unambiguous_sector(g, phi0);
    json out{{"d_over_lambda", g.ratio()},
             {"phi0_rad", phi0},
             {"amplitude",
              {{"unambiguity_zone_half_width_rad", amp.half_width},
               {"covers_hemisphere", amp.covers_hemisphere}}},
             {"phase",
              {{"unambiguous_sector_half_width_rad", ph.half_width},
               {"covers_hemisphere", ph.covers_hemisphere}}}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-channel polarization direction finding: characteristic "
                 "sweeps, Monte Carlo error experiments, single-shot bearing "
                 "estimation, and ambiguity-zone queries."};
    app.require_subcommand(1);

    std::string scenario_path, out_path;

    CLI::App* sweep = app.add_subcommand(
        "sweep", "Tabulate receiver outputs and characteristics over a bearing grid");
    sweep->add_option("scenario", scenario_path, "Scenario JSON file")->required();
    sweep->add_option("--out", out_path, "Output CSV path")->required();

    CLI::App* mc = app.add_subcommand(
        "montecarlo", "Bearing-error statistics under channel noise");
    mc->add_option("scenario", scenario_path, "Scenario JSON file")->required();
    mc->add_option("--out", out_path, "Output CSV path")->required();

    EstimateArgs ea;
    CLI::App* est = app.add_subcommand(
        "estimate", "Invert one measurement into bearing candidates (JSON)");
    est->add_option("--d", ea.d, "Baseline length, meters")->required();
    est->add_option("--lambda", ea.lambda, "Wavelength, meters")->required();
    est->add_option("--theta-deg", ea.theta_deg,
                    "Separator orientation the measurement was taken at, degrees")
        ->required();
    est->add_option("--method", ea.method, "amplitude | phase")->required();
    auto* a1_opt = est->add_option("--a1", ea.a1, "Detected arm-1 amplitude");
    auto* a2_opt = est->add_option("--a2", ea.a2, "Detected arm-2 amplitude");
    auto* psi_opt =
        est->add_option("--delta-psi-rad", ea.delta_psi, "Inter-arm phase, radians");
    est->add_option("--n-max", ea.n_max, "Phase branches to enumerate (default 0)");
    est->add_option("--phi0-rad", ea.phi0,
                    "Phase-meter unambiguous half-interval (default pi)");

    double zd = 0.0, zlambda = 0.0, zphi0 = std::numbers::pi;
    CLI::App* zones = app.add_subcommand(
        "zones", "Unambiguous angular regions of both methods (JSON)");
    zones->add_option("--d", zd, "Baseline length, meters")->required();
    zones->add_option("--lambda", zlambda, "Wavelength, meters")->required();
    zones->add_option("--phi0-rad", zphi0,
                      "Phase-meter unambiguous half-interval (default pi)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (sweep->parsed()) {
            polardf::write_csv(polardf::run_sweep(polardf::load_scenario(scenario_path)),
                               out_path);
            return 0;
        }
        if (mc->parsed()) {
            polardf::write_csv(
                polardf::run_monte_carlo(polardf::load_scenario(scenario_path)),
                out_path);
            return 0;
        }
        if (est->parsed()) {
            ea.have_a1 = a1_opt->count() > 0;
            ea.have_a2 = a2_opt->count() > 0;
            ea.have_psi = psi_opt->count() > 0;
            return run_estimate(ea);
        }
        if (zones->parsed()) return run_zones(zd, zlambda, zphi0);
    } catch (const polardf::NumericalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
