#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bapp {

struct ExperimentReport;
struct SweepReport;

/// %.9g in the "C" locale; the single numeric format of every output file.
std::string format_number(double value);

/// Columns: trial,d,strategy,agent_class,alpha_used,theta,entropy_bits,cum_losses
void write_deployments_csv(std::ostream& out, const std::vector<const ExperimentReport*>& reports);

/// Columns: trial,d,strategy,sector,base,triggered,failure_step,cells (space separated)
void write_trajectories_csv(std::ostream& out, const std::vector<const ExperimentReport*>& reports);

/// Per-strategy means and standard deviations, pretty-printed JSON.
void write_summary_json(std::ostream& out, const std::vector<const ExperimentReport*>& reports);

/// Columns: alpha,p,lambda,gamma,delta_i,delta_h_obs
void write_theory_csv(std::ostream& out, const SweepReport& report);
/// Columns: alpha,p,mean_delta_i,mean_delta_h_obs
void write_theory_average_csv(std::ostream& out, const SweepReport& report);
/// Columns: p,alpha
void write_theory_contour_csv(std::ostream& out, const SweepReport& report);

}  // namespace bapp
