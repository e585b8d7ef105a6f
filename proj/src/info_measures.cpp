#include "bapp/info_measures.hpp"

#include <cmath>
#include <string>

#include "bapp/errors.hpp"

namespace bapp {
namespace {

constexpr double kSumTolerance = 1e-9;

void require_probability(double p, const char* what) {
  if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
    throw InvalidParameter(std::string(what) + " must be a finite probability in [0, 1]");
  }
}

void require_alpha(double alpha) {
  if (!std::isfinite(alpha) || alpha <= 0.0) {
    throw InvalidParameter("alpha must be finite and > 0");
  }
}

// x ln x extended by continuity at 0.
double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

}  // namespace

ProbabilityDistribution::ProbabilityDistribution(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.size() < 2) {
    throw InvalidParameter("distribution needs at least two outcomes");
  }
  double total = 0.0;
  for (double p : probs_) {
    require_probability(p, "distribution entry");
    total += p;
  }
  if (std::abs(total - 1.0) > kSumTolerance) {
    throw InvalidParameter("distribution entries must sum to 1");
  }
}

BehaviorParams::BehaviorParams(double alpha, std::size_t support_size)
    : alpha_(alpha), support_size_(support_size), beta_(1.0) {
  require_alpha(alpha);
  if (support_size < 2) {
    throw InvalidParameter("support size must be >= 2");
  }
  beta_ = std::exp((1.0 - alpha) * std::log(std::log(static_cast<double>(support_size))));
}

BinaryChannel::BinaryChannel(double tpr_, double fpr_) : tpr(tpr_), fpr(fpr_) {
  require_probability(tpr, "channel true-positive rate");
  require_probability(fpr, "channel false-positive rate");
}

double prelec_weight(double p, const BehaviorParams& params) {
  require_probability(p, "p");
  if (p == 0.0) {
    return 0.0;
  }
  if (p == 1.0 || params.alpha() == 1.0) {
    return p;
  }
  return std::exp(-params.beta() * std::pow(-std::log(p), params.alpha()));
}

double shannon_entropy(const ProbabilityDistribution& dist) {
  double h = 0.0;
  for (double p : dist.probs()) {
    h -= xlogx(p);
  }
  return h;
}

double behavioral_entropy(const ProbabilityDistribution& dist, double alpha) {
  const BehaviorParams params(alpha, dist.size());
  double h = 0.0;
  for (double p : dist.probs()) {
    h -= xlogx(prelec_weight(p, params));
  }
  return h;
}

double binary_entropy(double p) {
  require_probability(p, "p");
  return -xlogx(p) - xlogx(1.0 - p);
}

double binary_behavioral_entropy(double p, double alpha) {
  require_probability(p, "p");
  const BehaviorParams params(alpha, 2);
  return -xlogx(prelec_weight(p, params)) - xlogx(prelec_weight(1.0 - p, params));
}

double mi_bgs(double prior, const BinaryChannel& channel) {
  require_probability(prior, "prior");
  const double px[2] = {1.0 - prior, prior};
  const double pz_given_x[2][2] = {{1.0 - channel.fpr, channel.fpr}, {1.0 - channel.tpr, channel.tpr}};
  double pz[2] = {0.0, 0.0};
  for (int x = 0; x < 2; ++x) {
    for (int z = 0; z < 2; ++z) {
      pz[z] += px[x] * pz_given_x[x][z];
    }
  }
  double mi = 0.0;
  for (int x = 0; x < 2; ++x) {
    for (int z = 0; z < 2; ++z) {
      const double joint = px[x] * pz_given_x[x][z];
      if (joint > 0.0) {
        mi += joint * std::log(joint / (px[x] * pz[z]));
      }
    }
  }
  // Rounding can leave tiny negatives for uninformative channels.
  return mi > 0.0 ? mi : 0.0;
}

double mi_bgs_observation_side(double prior, const BinaryChannel& channel) {
  require_probability(prior, "prior");
  const double pz1 = prior * channel.tpr + (1.0 - prior) * channel.fpr;
  return binary_entropy(pz1) - (prior * binary_entropy(channel.tpr) + (1.0 - prior) * binary_entropy(channel.fpr));
}

double mi_behavioral(double prior, const BinaryChannel& channel, double alpha, MiForm form) {
  require_probability(prior, "prior");
  require_alpha(alpha);
  if (form == MiForm::Channel) {
    const double wp = prelec_weight(prior, BehaviorParams(alpha, 2));
    const double perceived = wp * channel.tpr + (1.0 - wp) * channel.fpr;
    return binary_behavioral_entropy(perceived, alpha) -
           (wp * binary_entropy(channel.tpr) + (1.0 - wp) * binary_entropy(channel.fpr));
  }

  const double pz1 = prior * channel.tpr + (1.0 - prior) * channel.fpr;
  const double pz0 = 1.0 - pz1;
  double conditional = 0.0;
  if (pz1 > 0.0) {
    conditional += pz1 * binary_behavioral_entropy(prior * channel.tpr / pz1, alpha);
  }
  if (pz0 > 0.0) {
    conditional += pz0 * binary_behavioral_entropy(prior * (1.0 - channel.tpr) / pz0, alpha);
  }
  return binary_behavioral_entropy(prior, alpha) - conditional;
}

MiDifference delta_mi(double prior, const BinaryChannel& channel, double alpha) {
  require_probability(prior, "prior");
  require_alpha(alpha);
  const double wp = prelec_weight(prior, BehaviorParams(alpha, 2));
  const double pz1 = prior * channel.tpr + (1.0 - prior) * channel.fpr;
  const double perceived = wp * channel.tpr + (1.0 - wp) * channel.fpr;

  MiDifference d;
  d.channel_term = (binary_entropy(channel.fpr) - binary_entropy(channel.tpr)) * (wp - prior);
  d.delta_h_obs = binary_behavioral_entropy(perceived, alpha) - binary_entropy(pz1);
  // Same value as mi_behavioral(Channel) - mi_bgs, summed so that alpha = 1
  // gives exactly zero.
  d.total = d.channel_term + d.delta_h_obs;
  return d;
}

InformativeAlpha find_informative_alpha(double prior, const BinaryChannel& channel,
                                        std::span<const double> alpha_grid) {
  if (alpha_grid.empty()) {
    throw InvalidParameter("alpha grid is empty");
  }
  InformativeAlpha best;
  bool first = true;
  for (double a : alpha_grid) {
    const double di = delta_mi(prior, channel, a).total;
    if (first || di > best.delta_i) {
      best.alpha = a;
      best.delta_i = di;
      first = false;
    }
  }
  best.non_negative = best.delta_i >= 0.0;
  return best;
}

std::vector<double> linspace_step(double lo, double hi, double step) {
  if (!(step > 0.0) || hi < lo) {
    throw InvalidParameter("grid needs step > 0 and hi >= lo");
  }
  const auto n = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) {
    // Round to 12 decimals so 0.1 + k*0.05 lands on 1.0 exactly.
    out.push_back(std::round((lo + static_cast<double>(k) * step) * 1e12) / 1e12);
  }
  return out;
}

}  // namespace bapp
