#include <cmath>
#include <vector>

#include "bapp/errors.hpp"
#include "bapp/info_measures.hpp"
#include "bapp/oracles.hpp"
#include "bapp/rng.hpp"
#include "doctest.h"

using namespace bapp;

namespace {

// Reference values evaluated with 30-digit arithmetic.
constexpr double kW02 = 0.347771733559770939;
constexpr double kW08 = 0.674837908467590478;
constexpr double kHb0208 = 0.632721728571304619;
constexpr double kH0208 = 0.500402423538187852;
constexpr double kMiBgs05 = 0.368064207168497101;
constexpr double kMiBgs02 = 0.247973943739972217;
constexpr double kChannel02 = 0.359436340009289493;
constexpr double kPosterior02 = 0.128819545836721252;
constexpr double kHb4 = 1.32931261870788091;  // (0.1, 0.2, 0.3, 0.4), alpha 0.7

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

}  // namespace

TEST_CASE("prelec weight examples") {
  CHECK(prelec_weight(0.5, BehaviorParams(1.0, 2)) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(prelec_weight(0.5, BehaviorParams(0.5, 2)) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(std::abs(prelec_weight(0.2, BehaviorParams(0.5, 2)) - kW02) < 1e-12);
  CHECK(std::abs(prelec_weight(0.8, BehaviorParams(0.5, 2)) - kW08) < 1e-12);
  // quoted to five places as 0.34775
  CHECK(std::abs(prelec_weight(0.2, BehaviorParams(0.5, 2)) - 0.34775) < 5e-5);
}

TEST_CASE("prelec weight boundaries and monotonicity") {
  for (double a : {0.1, 0.5, 1.0, 2.0, 5.0}) {
    const BehaviorParams params(a, 2);
    CHECK(prelec_weight(0.0, params) == 0.0);
    CHECK(prelec_weight(1.0, params) == 1.0);
    double prev = 0.0;
    for (int k = 1; k < 100; ++k) {
      const double w = prelec_weight(k / 100.0, params);
      // large alpha underflows to 0 for small p
      CHECK((w > prev || (w == 0.0 && prev == 0.0)));
      CHECK(w < 1.0);
      prev = w;
    }
  }
}

TEST_CASE("prelec fixed point at 1/M") {
  for (double a = 0.1; a <= 5.0 + 1e-9; a += 0.1) {
    for (std::size_t m : {2u, 3u, 4u, 10u, 16u, 256u, 1024u}) {
      const double u = 1.0 / static_cast<double>(m);
      CHECK(std::abs(prelec_weight(u, BehaviorParams(a, m)) - u) < 1e-12);
    }
  }
}

TEST_CASE("beta makes beta * (ln M)^alpha equal ln M") {
  for (double a : {0.3, 0.7, 1.5, 4.0}) {
    const BehaviorParams params(a, 8);
    CHECK(params.beta() * std::pow(std::log(8.0), a) ==
          doctest::Approx(std::log(8.0)).epsilon(1e-13));
  }
}

TEST_CASE("shannon entropy examples") {
  CHECK(shannon_entropy(ProbabilityDistribution({0.5, 0.5})) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(shannon_entropy(ProbabilityDistribution({1.0, 0.0})) == 0.0);
  CHECK(std::abs(shannon_entropy(ProbabilityDistribution({0.2, 0.8})) - kH0208) < 1e-14);
}

TEST_CASE("behavioral entropy examples") {
  CHECK(std::abs(behavioral_entropy(ProbabilityDistribution({0.2, 0.8}), 1.0) - kH0208) < 1e-14);
  CHECK(std::abs(behavioral_entropy(ProbabilityDistribution({0.2, 0.8}), 0.5) - kHb0208) < 1e-12);
  CHECK(std::abs(behavioral_entropy(ProbabilityDistribution({0.1, 0.2, 0.3, 0.4}), 0.7) - kHb4) < 1e-12);
  // w values computed independently, then -sum w ln w
  CHECK(std::abs(kHb0208 + xlogx(kW02) + xlogx(kW08)) < 1e-15);
}

TEST_CASE("behavioral entropy of a uniform distribution is ln M for every alpha") {
  for (std::size_t m : {2u, 5u, 64u}) {
    const ProbabilityDistribution uniform(std::vector<double>(m, 1.0 / static_cast<double>(m)));
    for (double a : {0.1, 0.6, 1.0, 2.5, 5.0}) {
      CHECK(behavioral_entropy(uniform, a) == doctest::Approx(std::log(static_cast<double>(m))).epsilon(1e-12));
    }
  }
}

TEST_CASE("shannon entropy stays within [0, ln M]") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 2 + rng.below(9);
    std::vector<double> p(m);
    double total = 0.0;
    for (auto& x : p) {
      x = rng.uniform();
      total += x;
    }
    for (auto& x : p) {
      x /= total;
    }
    const double h = shannon_entropy(ProbabilityDistribution(p));
    CHECK(h >= 0.0);
    CHECK(h <= std::log(static_cast<double>(m)) + 1e-12);
  }
}

TEST_CASE("mutual information examples") {
  CHECK(std::abs(mi_bgs(0.5, BinaryChannel(0.9, 0.1)) - kMiBgs05) < 1e-14);
  CHECK(std::abs(mi_bgs(0.2, BinaryChannel(0.9, 0.1)) - kMiBgs02) < 1e-14);
  CHECK(mi_bgs(0.5, BinaryChannel(0.3, 0.3)) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(mi_bgs(0.0, BinaryChannel(0.9, 0.1)) == 0.0);
  CHECK(mi_bgs(1.0, BinaryChannel(0.9, 0.1)) == 0.0);
}

TEST_CASE("mi_bgs agrees with the joint-table oracle and the observation-side form") {
  Rng rng(7);
  for (int k = 0; k < 1000; ++k) {
    const double p = rng.uniform();
    const BinaryChannel ch(rng.uniform(), rng.uniform());
    const double a = mi_bgs(p, ch);
    CHECK(std::abs(a - oracle::mutual_information_joint(p, ch)) < 1e-12);
    CHECK(std::abs(a - mi_bgs_observation_side(p, ch)) < 1e-12);
    CHECK(a >= -1e-15);
  }
}

TEST_CASE("mi_behavioral examples") {
  const BinaryChannel ch(0.9, 0.1);
  CHECK(std::abs(mi_behavioral(0.5, ch, 1.0, MiForm::Posterior) - kMiBgs05) < 1e-14);
  CHECK(std::abs(mi_behavioral(0.5, ch, 1.0, MiForm::Channel) - kMiBgs05) < 1e-14);
  CHECK(std::abs(mi_behavioral(0.2, ch, 0.5, MiForm::Channel) - kChannel02) < 1e-12);
  CHECK(std::abs(mi_behavioral(0.5, ch, 0.5, MiForm::Channel) - kMiBgs05) < 1e-12);
  CHECK(std::abs(mi_behavioral(0.2, ch, 0.5, MiForm::Posterior) - kPosterior02) < 1e-12);
}

TEST_CASE("alpha = 1 recovers the Shannon quantities") {
  Rng rng(2024);
  for (int k = 0; k < 1000; ++k) {
    const double p = 0.001 + 0.998 * rng.uniform();
    const BinaryChannel ch(rng.uniform(), rng.uniform());
    const auto dist = ProbabilityDistribution::binary(p);
    CHECK(std::abs(behavioral_entropy(dist, 1.0) - shannon_entropy(dist)) < 1e-9);
    CHECK(std::abs(mi_behavioral(p, ch, 1.0, MiForm::Posterior) - mi_bgs(p, ch)) < 1e-9);
    CHECK(std::abs(mi_behavioral(p, ch, 1.0, MiForm::Channel) - mi_bgs(p, ch)) < 1e-9);
  }
}

TEST_CASE("delta_mi examples and decomposition") {
  const BinaryChannel ch(0.9, 0.1);
  CHECK(std::abs(delta_mi(0.2, ch, 0.5).total - (kChannel02 - kMiBgs02)) < 1e-12);
  CHECK(std::abs(delta_mi(0.5, ch, 0.5).total) < 1e-12);
  Rng rng(5);
  for (int k = 0; k < 300; ++k) {
    const double p = 0.01 + 0.98 * rng.uniform();
    const BinaryChannel c(0.5 + 0.49 * rng.uniform(), 0.3 * rng.uniform());
    const double a = 0.1 + 4.9 * rng.uniform();
    const auto d = delta_mi(p, c, a);
    CHECK(d.total == doctest::Approx(d.channel_term + d.delta_h_obs).epsilon(1e-15));
    CHECK(std::abs(d.total - (mi_behavioral(p, c, a, MiForm::Channel) - mi_bgs(p, c))) < 1e-12);
    CHECK(delta_mi(p, c, 1.0).total == 0.0);
  }
}

TEST_CASE("delta_mi varies continuously in alpha") {
  const BinaryChannel ch(0.8, 0.15);
  for (double p : {0.1, 0.4, 0.85}) {
    double prev = delta_mi(p, ch, 0.2).total;
    for (double a = 0.2 + 1e-3; a <= 5.0; a += 1e-3) {
      const double cur = delta_mi(p, ch, a).total;
      CHECK(std::abs(cur - prev) < 5e-3);
      prev = cur;
    }
  }
}

TEST_CASE("find_informative_alpha") {
  const BinaryChannel ch(0.9, 0.1);
  const std::vector<double> small{0.25, 0.5, 1.0, 2.0};
  const auto r = find_informative_alpha(0.2, ch, small);
  CHECK(r.alpha < 1.0);
  CHECK(r.delta_i > 0.0);
  CHECK(r.non_negative);

  const auto grid = linspace_step(0.1, 5.0, 0.05);
  CHECK(grid.size() == 99);
  CHECK(grid.back() == doctest::Approx(5.0));
  const auto hi = find_informative_alpha(0.95, BinaryChannel(0.7, 0.3), grid);
  CHECK(hi.non_negative);
  CHECK(hi.delta_i >= 0.0);

  // ties go to the earlier grid entry
  const std::vector<double> ones{1.0, 1.0};
  CHECK(find_informative_alpha(0.5, ch, ones).alpha == 1.0);
}

TEST_CASE("informative channel flag") {
  CHECK(BinaryChannel(0.9, 0.1).informative());
  CHECK_FALSE(BinaryChannel(0.1, 0.9).informative());
  CHECK_FALSE(BinaryChannel(0.3, 0.3).informative());
  CHECK_FALSE(BinaryChannel(1.0, 0.1).informative());
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(BehaviorParams(0.0, 2), InvalidParameter);
  CHECK_THROWS_AS(BehaviorParams(-1.0, 2), InvalidParameter);
  CHECK_THROWS_AS(BehaviorParams(1.0, 1), InvalidParameter);
  CHECK_THROWS_AS(prelec_weight(std::nan(""), BehaviorParams(0.5, 2)), InvalidParameter);
  CHECK_THROWS_AS(prelec_weight(1.5, BehaviorParams(0.5, 2)), InvalidParameter);
  CHECK_THROWS_AS(ProbabilityDistribution({0.5, 0.6}), InvalidParameter);
  CHECK_THROWS_AS(ProbabilityDistribution({1.0}), InvalidParameter);
  CHECK_THROWS_AS(ProbabilityDistribution({-0.1, 1.1}), InvalidParameter);
  CHECK_THROWS_AS(behavioral_entropy(ProbabilityDistribution({0.5, 0.5}), 0.0), InvalidParameter);
  CHECK_THROWS_AS(BinaryChannel(1.2, 0.1), InvalidParameter);
  CHECK_THROWS_AS(BinaryChannel(0.9, -0.1), InvalidParameter);
  CHECK_THROWS_AS(mi_behavioral(0.5, BinaryChannel(0.9, 0.1), 0.0), InvalidParameter);
  CHECK_THROWS_AS(mi_bgs(1.5, BinaryChannel(0.9, 0.1)), InvalidParameter);
  CHECK_THROWS_AS(find_informative_alpha(0.5, BinaryChannel(0.9, 0.1), std::vector<double>{}), InvalidParameter);
}
