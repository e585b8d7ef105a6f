#include "bapp/theory_sweep.hpp"

#include <algorithm>
#include <limits>

#include "bapp/errors.hpp"
#include "bapp/info_measures.hpp"
#include "bapp/parallel.hpp"

namespace bapp {

SweepGrid SweepGrid::defaults() {
  SweepGrid g;
  g.alphas = linspace_step(0.1, 5.0, 0.05);
  g.priors = linspace_step(0.05, 0.95, 0.05);
  g.lambdas = {0.7, 0.8, 0.9};
  g.gammas = {0.1, 0.2};
  g.avg_lambdas = linspace_step(0.70, 0.99, 0.01);
  g.avg_gammas = linspace_step(0.01, 0.30, 0.01);
  return g;
}

void SweepGrid::validate() const {
  if (alphas.empty() || priors.empty() || lambdas.empty() || gammas.empty() || avg_lambdas.empty() ||
      avg_gammas.empty()) {
    throw InvalidParameter("theory sweep grids must be non-empty");
  }
}

SweepReport theory_sweep(const SweepGrid& grid, unsigned workers) {
  grid.validate();
  const std::size_t na = grid.alphas.size();
  const std::size_t np = grid.priors.size();
  const std::size_t per_alpha_rows = np * grid.lambdas.size() * grid.gammas.size();

  SweepReport report;
  report.rows.resize(na * per_alpha_rows);
  report.averaged.resize(na * np);

  parallel_for(na, workers, [&](std::size_t ia) {
    const double alpha = grid.alphas[ia];
    std::size_t k = ia * per_alpha_rows;
    for (double p : grid.priors) {
      for (double lam : grid.lambdas) {
        for (double gam : grid.gammas) {
          const auto d = delta_mi(p, BinaryChannel(lam, gam), alpha);
          report.rows[k++] = SweepRow{alpha, p, lam, gam, d.total, d.delta_h_obs};
        }
      }
    }
    for (std::size_t ip = 0; ip < np; ++ip) {
      const double p = grid.priors[ip];
      double sum_i = 0.0;
      double sum_h = 0.0;
      for (double lam : grid.avg_lambdas) {
        for (double gam : grid.avg_gammas) {
          const auto d = delta_mi(p, BinaryChannel(lam, gam), alpha);
          sum_i += d.total;
          sum_h += d.delta_h_obs;
        }
      }
      const double count = static_cast<double>(grid.avg_lambdas.size() * grid.avg_gammas.size());
      report.averaged[ia * np + ip] = AveragedRow{alpha, p, sum_i / count, sum_h / count};
    }
  });

  for (std::size_t ip = 0; ip < np; ++ip) {
    for (std::size_t ia = 0; ia + 1 < na; ++ia) {
      const auto& a = report.averaged[ia * np + ip];
      const auto& b = report.averaged[(ia + 1) * np + ip];
      if (a.delta_i == 0.0) {
        report.contour.push_back({a.prior, a.alpha});
      } else if ((a.delta_i < 0.0) != (b.delta_i < 0.0) && b.delta_i != 0.0) {
        const double t = a.delta_i / (a.delta_i - b.delta_i);
        report.contour.push_back({a.prior, a.alpha + t * (b.alpha - a.alpha)});
      }
    }
    const auto& last = report.averaged[(na - 1) * np + ip];
    if (last.delta_i == 0.0) {
      report.contour.push_back({last.prior, last.alpha});
    }
  }

  // Existence check over the per-configuration rows.
  const std::size_t nl = grid.lambdas.size();
  const std::size_t ng = grid.gammas.size();
  for (std::size_t ip = 0; ip < np; ++ip) {
    for (std::size_t il = 0; il < nl; ++il) {
      for (std::size_t ig = 0; ig < ng; ++ig) {
        if (!(grid.gammas[ig] < grid.lambdas[il])) {
          continue;
        }
        double best = -std::numeric_limits<double>::infinity();
        for (std::size_t ia = 0; ia < na; ++ia) {
          best = std::max(best, report.rows[ia * per_alpha_rows + (ip * nl + il) * ng + ig].delta_i);
        }
        ++report.configurations_checked;
        if (best >= 0.0) {
          ++report.configurations_non_negative;
        }
      }
    }
  }
  return report;
}

}  // namespace bapp
