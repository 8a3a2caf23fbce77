#include "polardf/csv.hpp"

#include <charconv>
#include <fstream>
#include <string>

#include "polardf/errors.hpp"

namespace polardf {

namespace {

// std::to_chars is locale-independent; 9 significant digits round-trip the
// report values and keep files diffable.
std::string fmt(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::general, 9);
    return std::string(buf, end);
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + path.string());
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw IoError("error writing output file: " + path.string());
}

const char* method_name(Method m) {
    return m == Method::amplitude ? "amplitude" : "phase";
}

}  // namespace

void write_csv(const std::vector<SweepRow>& rows,
               const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    out << "alpha_true,delta_phi,a1,a2,ratio,psi1,psi2,delta_psi,u_pd,beta,"
           "r_mod,alpha_est_amplitude,alpha_est_phase\n";
    for (const SweepRow& r : rows) {
        out << fmt(r.alpha_true) << ',' << fmt(r.delta_phi) << ',' << fmt(r.a1)
            << ',' << fmt(r.a2) << ',' << fmt(r.ratio) << ',' << fmt(r.psi1)
            << ',' << fmt(r.psi2) << ',' << fmt(r.delta_psi) << ','
            << fmt(r.u_pd) << ',' << fmt(r.beta) << ',' << fmt(r.r_mod) << ','
            << fmt(r.alpha_est_amplitude) << ',' << fmt(r.alpha_est_phase)
            << '\n';
    }
    finish(out, path);
}

void write_csv(const MonteCarloReport& report,
               const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    out << "alpha_true,method,trials,mean_error,std_error,outlier_rate\n";
    for (const MonteCarloRow& r : report) {
        out << fmt(r.alpha_true) << ',' << method_name(r.method) << ','
            << r.trials << ',' << fmt(r.mean_error) << ',' << fmt(r.std_error)
            << ',' << fmt(r.outlier_rate) << '\n';
    }
    finish(out, path);
}

}  // namespace polardf
