// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. The path of the command-line binary (needed by the
// determinism criterion) arrives as the first program argument.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "polardf/channel.hpp"
#include "polardf/estimators.hpp"
#include "polardf/geometry.hpp"
#include "polardf/jones.hpp"
#include "polardf/monte_carlo.hpp"
#include "polardf/scenario.hpp"

namespace {

namespace fs = std::filesystem;
using namespace polardf;

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool ok = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

// --- criterion 1: separator outputs from explicit operator composition ----
// match the closed-form channel model to 1e-12, fast enough for live use.
Outcome closed_form_equivalence() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> dphi(-kPi, kPi);
    std::uniform_real_distribution<double> th(-kPi, kPi);

    double dev = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double delta_phi = dphi(rng);
        const BasisAngle theta(th(rng));

        const ChannelOutputs c = lps_outputs(delta_phi, theta);
        const JonesVector rotated = rotate(resultant_wave(delta_phi), theta);
        const std::complex<double> e1 = project_arm1(rotated).ey;
        const std::complex<double> e2 = project_arm2(rotated).ex;
        const auto [a1, a2] = amplitudes(delta_phi, theta);

        dev = std::max(dev, std::abs(c.e1 - e1));
        dev = std::max(dev, std::abs(c.e2 - e2));
        dev = std::max(dev, std::abs(c.a1 - a1));
        dev = std::max(dev, std::abs(c.a2 - a2));
        dev = std::max(dev, std::abs(c.a1 - std::abs(e1)));
        dev = std::max(dev, std::abs(c.a2 - std::abs(e2)));
    }
    const double dt = seconds_since(t0);
    return {dev <= 1e-12 && dt < 1.0,
            fmt("max deviation %.2e over 10000 draws, %.3f s", dev, dt)};
}

// --- criterion 2: behavior at the two working orientations ---------------
Outcome degenerate_regimes() {
    double dev45 = 0.0, dev_ratio = 0.0, dev_psi = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const double delta_phi = -kPi + (k + 0.5) * (2.0 * kPi / 1000.0);

        // Orientation pi/4: inter-arm phase difference locks to +-pi/2.
        const double dpsi45 = phase_diff_output(delta_phi, BasisAngle(kPi / 4));
        dev45 = std::max(dev45, std::abs(std::abs(dpsi45) - kPi / 2));

        // Orientation 0: equal arm amplitudes, phase difference passes through.
        const ChannelOutputs c = lps_outputs(delta_phi, BasisAngle(0.0));
        dev_ratio = std::max(dev_ratio, std::abs(c.a1 / c.a2 - 1.0));
        const double dpsi0 = phase_diff_output(c);
        dev_psi = std::max(dev_psi,
                           std::abs(std::remainder(dpsi0 - delta_phi, 2.0 * kPi)));
    }
    const bool ok = dev45 <= 1e-9 && dev_ratio <= 1e-9 && dev_psi <= 1e-9;
    return {ok, fmt("|dpsi|-pi/2 dev %.2e, ratio-1 dev %.2e, dpsi-dphi dev %.2e",
                    dev45, dev_ratio, dev_psi)};
}

// --- criterion 3: noise-free round trips over the unambiguous regions ----
Outcome round_trip_recovery() {
    double worst = 0.0;
    for (double r : {0.4, 0.5, 1.0, 5.0}) {
        const BeaconGeometry g(r, 1.0);
        const AmbiguitySpec spec;

        const double zone_a = unambiguity_zone(g).half_width * (1.0 - 1e-4);
        const double zone_p = unambiguous_sector(g, kPi).half_width * (1.0 - 1e-4);
        for (int k = 0; k <= 80; ++k) {
            const double fa = -1.0 + 2.0 * k / 80.0;

            const double alpha_a = fa * zone_a;
            const ChannelOutputs ca =
                lps_outputs(phase_difference(g, Bearing(alpha_a)), BasisAngle(kPi / 4));
            const BearingEstimate ea = bearing_amplitude(g, ca.a1, ca.a2, spec);
            worst = std::max(worst, std::abs(ea.principal - std::abs(alpha_a)));

            const double alpha_p = fa * zone_p;
            const double dpsi =
                phase_diff_output(phase_difference(g, Bearing(alpha_p)), BasisAngle(0.0));
            const BearingEstimate ep = bearing_phase(g, dpsi, spec);
            worst = std::max(worst, std::abs(ep.principal - alpha_p));
        }
    }
    return {worst <= 1e-9, fmt("worst bearing error %.2e rad", worst)};
}

// --- criterion 4: zone width, steepness values, exact factor two ---------
Outcome quantitative_formulas() {
    const double zone = unambiguity_zone(BeaconGeometry(1.0, 1.0)).half_width;
    const double zone_dev = std::abs(zone - kPi / 6);

    double fd_dev = 0.0;
    bool ratio_exact = true;
    const double h = 1e-6;
    for (auto [d, lambda] : std::vector<std::pair<double, double>>{
             {0.4, 1.0}, {1.0, 1.0}, {0.3, 0.7}, {2.5, 0.3}, {1e-3, 3.0}}) {
        const BeaconGeometry g(d, lambda);

        // Signed amplitude characteristic (odd continuation of the ratio).
        auto amp = [&](double a) {
            return std::copysign(amplitude_df_characteristic(g, a), a);
        };
        const double fd_amp = (amp(h) - amp(-h)) / (2.0 * h);
        fd_dev = std::max(fd_dev,
                          std::abs(fd_amp / amplitude_steepness(g) - 1.0));

        auto ph = [&](double a) { return phase_df_characteristic(g, a).exact; };
        const double fd_ph = (ph(h) - ph(-h)) / (2.0 * h);
        fd_dev = std::max(fd_dev, std::abs(fd_ph / phase_steepness(g) - 1.0));

        ratio_exact =
            ratio_exact && phase_steepness(g) / amplitude_steepness(g) == 2.0;
    }
    const bool ok = zone_dev <= 1e-9 && fd_dev <= 1e-6 && ratio_exact;
    return {ok, fmt("zone(1) dev %.2e, worst FD rel dev %.2e, ratio==2 %s",
                    zone_dev, fd_dev, ratio_exact ? "exact" : "NOT exact")};
}

// --- criterion 5: orientation jump, ellipticity profile, unit intensity --
Outcome polarization_profile() {
    double dev = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const double delta_phi = (k + 0.5) * (kPi / 1000.0);
        const PolarizationState st = ellipse_params(resultant_wave(delta_phi));
        const double beta_ref = delta_phi < kPi / 2 ? kPi / 4 : 3 * kPi / 4;
        const double r_ref = delta_phi <= kPi / 2
                                 ? std::tan(delta_phi / 2)
                                 : std::tan((kPi - delta_phi) / 2);
        dev = std::max(dev, std::abs(st.beta - beta_ref));
        dev = std::max(dev, std::abs(st.r_mod - r_ref));
    }
    // Endpoints: linear at 0 and pi, circular at pi/2.
    dev = std::max(dev, ellipse_params(resultant_wave(0.0)).r_mod);
    dev = std::max(dev, ellipse_params(resultant_wave(kPi)).r_mod);
    dev = std::max(dev,
                   std::abs(ellipse_params(resultant_wave(kPi / 2)).r_mod - 1.0));

    double int_dev = 0.0;
    const BeaconGeometry g(2.0, 0.7);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> alpha(-kPi / 2, kPi / 2);
    for (int i = 0; i < 10000; ++i) {
        const double dphi = phase_difference(g, Bearing(alpha(rng)));
        int_dev = std::max(int_dev,
                           std::abs(intensity(resultant_wave(dphi)) - 1.0));
    }
    const bool ok = dev <= 1e-9 && int_dev <= 1e-12;
    return {ok, fmt("profile dev %.2e, intensity dev %.2e", dev, int_dev)};
}

// --- criterion 6: arm intensity conservation ------------------------------
Outcome conservation() {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dphi(-kPi, kPi);
    std::uniform_real_distribution<double> th(-kPi, kPi);
    double dev = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const ChannelOutputs c = lps_outputs(dphi(rng), BasisAngle(th(rng)));
        dev = std::max(dev, std::abs(c.a1 * c.a1 + c.a2 * c.a2 - 1.0));
    }
    return {dev <= 1e-12, fmt("max |a1^2 + a2^2 - 1| = %.2e", dev)};
}

// --- criterion 7: noise statistics near broadside -------------------------
Outcome monte_carlo_behavior() {
    const auto t0 = std::chrono::steady_clock::now();

    Scenario s;
    s.geometries = {BeaconGeometry(0.5, 1.0)};
    s.method = MethodSelection::both;
    s.alpha_start = -kPi / 180.0;
    s.alpha_stop = kPi / 180.0;
    s.alpha_step = kPi / 180.0;
    s.trials = 10000;

    const std::vector<double> grid = s.alpha_grid();
    const std::vector<double> snrs = {20.0, 40.0, 80.0};

    // stds[snr index][grid index] per method.
    std::vector<std::vector<double>> amp_std(snrs.size()), ph_std(snrs.size());
    for (std::size_t si = 0; si < snrs.size(); ++si) {
        s.noise = NoiseSpec{snrs[si], 20260815};
        const MonteCarloReport rep = run_monte_carlo(s);
        amp_std[si].assign(grid.size(), -1.0);
        ph_std[si].assign(grid.size(), -1.0);
        for (const MonteCarloRow& row : rep) {
            for (std::size_t gi = 0; gi < grid.size(); ++gi) {
                if (std::abs(row.alpha_true - grid[gi]) > 1e-15) continue;
                (row.method == Method::amplitude ? amp_std : ph_std)[si][gi] =
                    row.std_error;
            }
        }
    }

    bool phase_wins = true, monotone = true;
    for (std::size_t si = 0; si < snrs.size(); ++si)
        for (std::size_t gi = 0; gi < grid.size(); ++gi)
            if (amp_std[si][gi] <= 0.0 || ph_std[si][gi] <= 0.0)
                return {false, "missing or degenerate report rows"};
    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
        phase_wins = phase_wins && ph_std[0][gi] < amp_std[0][gi];
        for (std::size_t si = 0; si + 1 < snrs.size(); ++si) {
            monotone = monotone && amp_std[si + 1][gi] < amp_std[si][gi];
            monotone = monotone && ph_std[si + 1][gi] < ph_std[si][gi];
        }
        // Reported, not asserted: the error-variance ratio at the lowest SNR.
        std::printf("        snr 20 dB, alpha %+.1f deg: std amplitude %.4e, "
                    "phase %.4e, variance ratio %.3f\n",
                    grid[gi] * 180.0 / kPi, amp_std[0][gi], ph_std[0][gi],
                    (amp_std[0][gi] * amp_std[0][gi]) /
                        (ph_std[0][gi] * ph_std[0][gi]));
    }

    const double dt = seconds_since(t0);
    const bool ok = phase_wins && monotone && dt < 60.0;
    return {ok, fmt("phase < amplitude at 20 dB: %s, monotone in snr: %s, %.2f s",
                    phase_wins ? "yes" : "NO", monotone ? "yes" : "NO", dt)};
}

// --- criterion 8: two-base ambiguity resolution ---------------------------
Outcome multibase_resolution() {
    const BeaconGeometry coarse(0.5, 1.0), fine(4.0, 1.0);
    const AmbiguitySpec coarse_spec(0, kPi), fine_spec(4, kPi);

    const double hw = unambiguity_zone(coarse).half_width * (1.0 - 1e-4);
    double worst = 0.0;
    int ambiguous = 0;
    for (int k = 0; k <= 180; ++k) {
        const double alpha = -hw + 2.0 * hw * k / 180.0;

        auto measure = [&](const BeaconGeometry& g, const AmbiguitySpec& spec) {
            const double dpsi =
                phase_diff_output(phase_difference(g, Bearing(alpha)), BasisAngle(0.0));
            return bearing_phase(g, dpsi, spec);
        };
        const BearingEstimate ec = measure(coarse, coarse_spec);
        const BearingEstimate ef = measure(fine, fine_spec);
        if (ef.candidates.size() >= 2) ++ambiguous;

        const Bearing b = resolve_multibase({{coarse, ec}, {fine, ef}});
        worst = std::max(worst, std::abs(b.alpha - alpha));
    }
    const bool ok = worst <= 1e-9 && ambiguous >= 1;
    return {ok, fmt("worst resolved error %.2e rad, fine base ambiguous for "
                    "%d/181 bearings",
                    worst, ambiguous)};
}

// --- criterion 9: byte-identical statistics CSV from the CLI --------------
std::string g_cli;

Outcome cli_determinism() {
    const fs::path dir = fs::temp_directory_path();
    const fs::path scen = dir / "polardf_accept_scenario.json";
    const fs::path out1 = dir / "polardf_accept_run1.csv";
    const fs::path out2 = dir / "polardf_accept_run2.csv";
    std::ofstream(scen, std::ios::binary) << R"({
      "geometry": {"d": 0.5, "lambda": 1.0},
      "theta_deg": 0,
      "method": "both",
      "alpha_grid_deg": [-2, 2, 2],
      "trials": 200,
      "noise": {"snr_db": 30, "seed": 99}
    })";

    auto run = [&](const fs::path& out) {
        const std::string cmd = g_cli + " montecarlo " + scen.string() +
                                " --out " + out.string() + " >/dev/null 2>&1";
        const int raw = std::system(cmd.c_str());
        return raw != -1 && WIFEXITED(raw) && WEXITSTATUS(raw) == 0;
    };
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    };

    const bool ran = run(out1) && run(out2);
    const std::string t1 = slurp(out1), t2 = slurp(out2);
    fs::remove(scen);
    fs::remove(out1);
    fs::remove(out2);

    const bool ok = ran && !t1.empty() && t1 == t2;
    return {ok, fmt("two runs, %zu bytes each, %s", t1.size(),
                    t1 == t2 ? "identical" : "DIFFER")};
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_acceptance <path-to-cli-binary>\n");
        return 64;
    }
    g_cli = argv[1];

    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"closed-form equivalence of the channel model", closed_form_equivalence},
        {"working-orientation regimes", degenerate_regimes},
        {"round-trip bearing recovery", round_trip_recovery},
        {"zone width, steepness, exact factor two", quantitative_formulas},
        {"polarization-state profile", polarization_profile},
        {"arm intensity conservation", conservation},
        {"noise error statistics", monte_carlo_behavior},
        {"multi-base ambiguity resolution", multibase_resolution},
        {"CLI determinism", cli_determinism},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, fmt("exception: %s", e.what())};
        }
        if (!o.ok) ++failures;
        std::printf("[%s] criterion %zu: %s (%s)\n", o.ok ? "PASS" : "FAIL",
                    i + 1, criteria[i].first, o.detail.c_str());
    }
    return failures;
}
