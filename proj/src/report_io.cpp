#include "bapp/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

#include "bapp/experiment.hpp"
#include "bapp/theory_sweep.hpp"
#include "json.hpp"

namespace bapp {
namespace {

using nlohmann::ordered_json;

// Numbers in JSON go through the same 9-digit rounding as the CSVs.
ordered_json number(double v) {
  if (!std::isfinite(v)) {
    return nullptr;
  }
  return std::strtod(format_number(v).c_str(), nullptr);
}

ordered_json mean_std_json(const MeanStd& m) { return {{"mean", number(m.mean)}, {"std", number(m.std)}}; }

}  // namespace

std::string format_number(double value) {
  if (value == 0.0) {
    return "0";  // also folds -0
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

void write_deployments_csv(std::ostream& out, const std::vector<const ExperimentReport*>& reports) {
  out << "trial,d,strategy,agent_class,alpha_used,theta,entropy_bits,cum_losses\n";
  for (const auto* report : reports) {
    const auto strategy = to_string(report->config.strategy);
    for (const auto& trial : report->trials) {
      for (const auto& rec : trial.records) {
        out << rec.trial << ',' << rec.d << ',' << strategy << ',' << to_string(rec.agent) << ','
            << format_number(rec.alpha_used) << ',' << static_cast<int>(rec.outcome) << ','
            << format_number(rec.entropy_bits) << ',' << rec.cum_losses << '\n';
      }
    }
  }
}

void write_trajectories_csv(std::ostream& out, const std::vector<const ExperimentReport*>& reports) {
  out << "trial,d,strategy,sector,base,triggered,failure_step,cells\n";
  for (const auto* report : reports) {
    const auto strategy = to_string(report->config.strategy);
    for (const auto& trial : report->trials) {
      for (const auto& rec : trial.records) {
        out << rec.trial << ',' << rec.d << ',' << strategy << ',' << rec.sector << ',' << rec.trajectory.start
            << ',' << (rec.triggered ? 1 : 0) << ',';
        if (rec.failure_step) {
          out << *rec.failure_step;
        }
        out << ',';
        for (std::size_t k = 0; k < rec.trajectory.cells.size(); ++k) {
          out << (k ? " " : "") << rec.trajectory.cells[k];
        }
        out << '\n';
      }
    }
  }
}

void write_summary_json(std::ostream& out, const std::vector<const ExperimentReport*>& reports) {
  ordered_json root = ordered_json::object();
  for (const auto* report : reports) {
    ordered_json s;
    s["scenario"] = report->config.name;
    s["trials"] = report->trials.size();
    s["final_entropy_bits"] = mean_std_json(report->final_entropy);
    s["final_losses"] = mean_std_json(report->final_losses);
    ordered_json half;
    half["threshold_bits"] = number(kHalfEntropy);
    half["reached"] = report->reached_half;
    half["not_reached"] = static_cast<int>(report->trials.size()) - report->reached_half;
    if (report->rounds_to_half) {
      half["mean"] = number(report->rounds_to_half->mean);
      half["std"] = number(report->rounds_to_half->std);
    } else {
      half["mean"] = nullptr;
      half["std"] = nullptr;
    }
    s["deployments_to_half_entropy"] = half;
    ordered_json em = ordered_json::array();
    ordered_json es = ordered_json::array();
    ordered_json lm = ordered_json::array();
    ordered_json ls = ordered_json::array();
    for (std::size_t d = 0; d < report->entropy_by_round.size(); ++d) {
      em.push_back(number(report->entropy_by_round[d].mean));
      es.push_back(number(report->entropy_by_round[d].std));
      lm.push_back(number(report->losses_by_round[d].mean));
      ls.push_back(number(report->losses_by_round[d].std));
    }
    s["entropy_mean"] = em;
    s["entropy_std"] = es;
    s["losses_mean"] = lm;
    s["losses_std"] = ls;
    root[std::string(to_string(report->config.strategy))] = s;
  }
  out << root.dump(2) << '\n';
}

void write_theory_csv(std::ostream& out, const SweepReport& report) {
  out << "alpha,p,lambda,gamma,delta_i,delta_h_obs\n";
  for (const auto& r : report.rows) {
    out << format_number(r.alpha) << ',' << format_number(r.prior) << ',' << format_number(r.lambda) << ','
        << format_number(r.gamma) << ',' << format_number(r.delta_i) << ',' << format_number(r.delta_h_obs) << '\n';
  }
}

void write_theory_average_csv(std::ostream& out, const SweepReport& report) {
  out << "alpha,p,mean_delta_i,mean_delta_h_obs\n";
  for (const auto& r : report.averaged) {
    out << format_number(r.alpha) << ',' << format_number(r.prior) << ',' << format_number(r.delta_i) << ','
        << format_number(r.delta_h_obs) << '\n';
  }
}

void write_theory_contour_csv(std::ostream& out, const SweepReport& report) {
  out << "p,alpha\n";
  for (const auto& c : report.contour) {
    out << format_number(c.prior) << ',' << format_number(c.alpha) << '\n';
  }
}

}  // namespace bapp
