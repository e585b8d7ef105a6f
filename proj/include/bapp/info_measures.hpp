#pragma once

// Prelec weighting, Shannon and behavioral entropy, and mutual information
// for the binary hazard / survivability-observation model. All quantities
// are in nats.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace bapp {

/// A finite distribution over M >= 2 outcomes.
class ProbabilityDistribution {
 public:
  explicit ProbabilityDistribution(std::vector<double> probs);
  static ProbabilityDistribution binary(double p) { return ProbabilityDistribution({p, 1.0 - p}); }

  [[nodiscard]] std::span<const double> probs() const { return probs_; }
  [[nodiscard]] std::size_t size() const { return probs_.size(); }

 private:
  std::vector<double> probs_;
};

/// Prelec shape parameters. beta is derived from alpha and the support size
/// so that 1/M is a fixed point of the weighting.
class BehaviorParams {
 public:
  BehaviorParams(double alpha, std::size_t support_size);

  [[nodiscard]] double alpha() const { return alpha_; }
  [[nodiscard]] std::size_t support_size() const { return support_size_; }
  [[nodiscard]] double beta() const { return beta_; }

 private:
  double alpha_;
  std::size_t support_size_;
  double beta_;
};

/// Survivability observation model: P(Z=1|X=1) = tpr (lethality),
/// P(Z=1|X=0) = fpr (malfunction rate).
struct BinaryChannel {
  double tpr;
  double fpr;

  BinaryChannel(double tpr, double fpr);

  /// 0 < fpr < tpr < 1, the regime where an informative alpha is guaranteed.
  [[nodiscard]] bool informative() const { return 0.0 < fpr && fpr < tpr && tpr < 1.0; }
};

enum class MiForm {
  Posterior,  // H^B(X) - E_z[H^B(X | Z=z)] with exact Bayesian posteriors
  Channel,    // H^B of the perceived observation marginal minus channel noise
};

double prelec_weight(double p, const BehaviorParams& params);

double shannon_entropy(const ProbabilityDistribution& dist);
double behavioral_entropy(const ProbabilityDistribution& dist, double alpha);

/// Shannon entropy of Bernoulli(p), nats. Accepts p in [0, 1].
double binary_entropy(double p);
/// Behavioral entropy of Bernoulli(p) with M = 2.
double binary_behavioral_entropy(double p, double alpha);

double mi_bgs(double prior, const BinaryChannel& channel);
/// The same quantity through H(Z) - H(Z|X); kept for cross-checking.
double mi_bgs_observation_side(double prior, const BinaryChannel& channel);

double mi_behavioral(double prior, const BinaryChannel& channel, double alpha,
                     MiForm form = MiForm::Posterior);

/// I_B(ChannelForm) - I_BGS split into its two summands.
struct MiDifference {
  double total = 0.0;
  double channel_term = 0.0;  // (H(fpr) - H(tpr)) * (w(p) - p)
  double delta_h_obs = 0.0;   // H^B(perceived Z) - H(Z)
};

MiDifference delta_mi(double prior, const BinaryChannel& channel, double alpha);

struct InformativeAlpha {
  double alpha = 1.0;
  double delta_i = 0.0;
  bool non_negative = true;
};

/// Grid alpha maximizing delta_mi; ties resolve to the earlier grid entry.
InformativeAlpha find_informative_alpha(double prior, const BinaryChannel& channel,
                                        std::span<const double> alpha_grid);

/// Inclusive arithmetic grid lo, lo+step, ..., hi (hi included when it lands
/// on the grid within rounding).
std::vector<double> linspace_step(double lo, double hi, double step);

}  // namespace bapp
