#pragma once

#include <vector>

namespace bapp {

struct SweepGrid {
  std::vector<double> alphas;
  std::vector<double> priors;
  std::vector<double> lambdas;  // per-configuration rows
  std::vector<double> gammas;
  std::vector<double> avg_lambdas;  // averaged surface
  std::vector<double> avg_gammas;

  /// alpha 0.1..5.0 step 0.05, p 0.05..0.95 step 0.05, rows for
  /// lambda in {0.7, 0.8, 0.9} x gamma in {0.1, 0.2}, and the averaged
  /// surface over [0.70, 0.99] x [0.01, 0.30] at step 0.01.
  static SweepGrid defaults();
  void validate() const;
};

struct SweepRow {
  double alpha, prior, lambda, gamma, delta_i, delta_h_obs;
};

struct AveragedRow {
  double alpha, prior, delta_i, delta_h_obs;
};

/// Linear-interpolated alpha where the averaged delta_i changes sign.
struct ContourPoint {
  double prior, alpha;
};

struct SweepReport {
  std::vector<SweepRow> rows;          // alpha-major, then p, lambda, gamma
  std::vector<AveragedRow> averaged;   // alpha-major, then p
  std::vector<ContourPoint> contour;   // sorted by p, then alpha
  int configurations_checked = 0;      // (p, lambda, gamma) with gamma < lambda
  int configurations_non_negative = 0;  // of those, max_alpha delta_i >= 0
};

SweepReport theory_sweep(const SweepGrid& grid, unsigned workers = 1);

}  // namespace bapp
