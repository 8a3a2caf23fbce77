// csv.hpp - CSV reports: header row, "\n" line endings, 9-significant-digit
// locale-independent number formatting.

#pragma once

#include <filesystem>
#include <vector>

#include "polardf/monte_carlo.hpp"
#include "polardf/sweep.hpp"

namespace polardf {

/// Writes one line per sweep row under the header
/// alpha_true,delta_phi,a1,a2,ratio,psi1,psi2,delta_psi,u_pd,beta,r_mod,alpha_est_amplitude,alpha_est_phase
/// Throws IoError (with the path in the message) on any write failure.
void write_csv(const std::vector<SweepRow>& rows,
               const std::filesystem::path& path);

/// Writes one line per report row under the header
/// alpha_true,method,trials,mean_error,std_error,outlier_rate
void write_csv(const MonteCarloReport& report,
               const std::filesystem::path& path);

}  // namespace polardf
