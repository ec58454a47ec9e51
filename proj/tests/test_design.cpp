#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "bael/design.hpp"
#include "bael/rng.hpp"

using bael::BatchWeights;
using bael::crt_weights;
using bael::DesignSpec;
using bael::Instance;
using bael::make_batch_weights;
using bael::successive_rejects_weights;
using bael::two_batch_weights;
using bael::TwoBatchDesign;

TEST_CASE("Instance derives best arm and gaps") {
  const Instance inst({2.0, 1.0, 0.0}, 1.0);
  CHECK(inst.num_arms() == 3);
  CHECK(inst.best_arm() == 0);
  CHECK(inst.delta_min() == 1.0);
  CHECK(inst.delta_max() == 2.0);

  const Instance other({0.0, 3.0, 1.5}, 0.5);
  CHECK(other.best_arm() == 1);
  CHECK(other.delta_min() == 1.5);
  CHECK(other.delta_max() == 3.0);
}

TEST_CASE("Instance rejects degenerate inputs") {
  CHECK_THROWS_AS(Instance({1.0}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Instance({1.0, 1.0}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Instance({1.0, 0.0}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(Instance({1.0, 0.0}, -2.0), std::invalid_argument);
  CHECK_THROWS_AS(Instance({1.0, std::nan("")}, 1.0), std::invalid_argument);
}

TEST_CASE("BatchWeights validates shape, sign, and simplex sum") {
  CHECK_NOTHROW(BatchWeights(3, {0.5, 0.5}));
  CHECK_THROWS_AS(BatchWeights(3, {0.5, 0.6}), std::invalid_argument);
  CHECK_THROWS_AS(BatchWeights(3, {1.5, -0.5}), std::invalid_argument);
  CHECK_THROWS_AS(BatchWeights(3, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(BatchWeights(1, {}), std::invalid_argument);

  const BatchWeights w(4, {0.7, 0.3, 0.0});
  CHECK(w.batch_share(4) == 0.7);
  CHECK(w.batch_share(3) == 0.3);
  CHECK(w.batch_share(2) == 0.0);
  CHECK_THROWS_AS(w.batch_share(1), std::invalid_argument);
  CHECK_THROWS_AS(w.batch_share(5), std::invalid_argument);
}

TEST_CASE("make_batch_weights normalizes and preserves ratios") {
  const BatchWeights half = make_batch_weights(3, {1.0, 1.0});
  CHECK(half.values()[0] == 0.5);
  CHECK(half.values()[1] == 0.5);

  const BatchWeights thirds = make_batch_weights(4, {2.0, 1.0, 0.0});
  CHECK(thirds.values()[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(thirds.values()[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(thirds.values()[2] == 0.0);

  CHECK_THROWS_AS(make_batch_weights(3, {1.0, -1.0}), std::invalid_argument);
  CHECK_THROWS_AS(make_batch_weights(3, {0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(make_batch_weights(4, {1.0, 1.0}), std::invalid_argument);

  bael::RandomStream rng(7, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 2 + static_cast<int>(rng.uniform() * 9);
    std::vector<double> raw(k - 1);
    for (double& v : raw) v = rng.uniform() * 5.0;
    raw[static_cast<std::size_t>(rng.uniform() * (k - 1))] += 0.1;
    const BatchWeights w = make_batch_weights(k, raw);
    double sum = 0.0;
    for (double v : w.values()) sum += v;
    CHECK(std::fabs(sum - 1.0) <= 1e-12);
    for (int i = 0; i < k - 1; ++i) {
      for (int j = 0; j < k - 1; ++j) {
        CHECK(w.values()[i] * raw[j] ==
              doctest::Approx(w.values()[j] * raw[i]).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("crt_weights is the single-batch schedule") {
  const BatchWeights two = crt_weights(2);
  CHECK(two.values() == std::vector<double>{1.0});
  const BatchWeights four = crt_weights(4);
  CHECK(four.values() == std::vector<double>{1.0, 0.0, 0.0});
  CHECK_THROWS_AS(crt_weights(1), std::invalid_argument);
}

TEST_CASE("successive rejects weights match the closed form") {
  CHECK(successive_rejects_weights(2).values() == std::vector<double>{1.0});

  // lbar(3) = 4/3 gives (3/4, 1/4).
  const BatchWeights k3 = successive_rejects_weights(3);
  CHECK(k3.values()[0] == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(k3.values()[1] == doctest::Approx(0.25).epsilon(1e-15));

  // lbar(4) = 19/12 gives (12/19, 3/19, 4/19).
  const BatchWeights k4 = successive_rejects_weights(4);
  CHECK(k4.values()[0] == doctest::Approx(12.0 / 19.0).epsilon(1e-15));
  CHECK(k4.values()[1] == doctest::Approx(3.0 / 19.0).epsilon(1e-15));
  CHECK(k4.values()[2] == doctest::Approx(4.0 / 19.0).epsilon(1e-15));

  CHECK_THROWS_AS(successive_rejects_weights(1), std::invalid_argument);
}

TEST_CASE("successive rejects weight profile across k") {
  // beta_k = 1/lbar dominates, beta_{k-1}..beta_3 = (1/k..1/4)/lbar rise,
  // and the beta_2 remainder lands exactly on (1/3)/lbar.
  for (int k = 3; k <= 12; ++k) {
    const BatchWeights w = successive_rejects_weights(k);
    double lbar = 0.5;
    for (int i = 2; i <= k; ++i) lbar += 1.0 / i;
    double sum = 0.0;
    for (double v : w.values()) {
      CHECK(v > 0.0);
      sum += v;
    }
    CHECK(std::fabs(sum - 1.0) <= 1e-12);
    CHECK(w.batch_share(k) == doctest::Approx(1.0 / lbar).epsilon(1e-14));
    for (int n = 3; n < k; ++n) {
      CHECK(w.batch_share(n) ==
            doctest::Approx(1.0 / ((n + 1) * lbar)).epsilon(1e-14));
      CHECK(w.batch_share(k) > w.batch_share(n));
      if (n + 1 < k) CHECK(w.batch_share(n) > w.batch_share(n + 1));
    }
    CHECK(w.batch_share(2) ==
          doctest::Approx(1.0 / (3.0 * lbar)).epsilon(1e-12));
    if (k >= 4) CHECK(w.batch_share(2) >= w.batch_share(3));
  }
}

TEST_CASE("two-batch designs place weight on exactly two stages") {
  // The complement is the rounded value of 1 - beta, not the decimal ideal:
  // 1.0 - 0.7 != 0.3 in doubles.
  const TwoBatchDesign a = two_batch_weights(4, 1, 0.7);
  CHECK(a.weights.values() == std::vector<double>{0.7, 1.0 - 0.7, 0.0});
  CHECK(a.dominance_threshold == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(a.exceeds_threshold);

  const TwoBatchDesign b = two_batch_weights(4, 2, 0.8);
  CHECK(b.weights.values() == std::vector<double>{0.8, 0.0, 1.0 - 0.8});
  CHECK(b.dominance_threshold == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(b.exceeds_threshold);

  const TwoBatchDesign c = two_batch_weights(4, 1, 0.6);
  CHECK_FALSE(c.exceeds_threshold);

  const TwoBatchDesign d = two_batch_weights(5, 2, 0.75);
  CHECK(d.weights.values() == std::vector<double>{0.75, 0.0, 0.25, 0.0});
  CHECK(d.dominance_threshold == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(d.exceeds_threshold);
}

TEST_CASE("two-batch designs reject out-of-range parameters") {
  CHECK_THROWS_AS(two_batch_weights(2, 1, 0.7), std::invalid_argument);
  CHECK_THROWS_AS(two_batch_weights(4, 0, 0.7), std::invalid_argument);
  CHECK_THROWS_AS(two_batch_weights(4, 3, 0.7), std::invalid_argument);
  CHECK_THROWS_AS(two_batch_weights(4, 1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(two_batch_weights(4, 1, 1.0), std::invalid_argument);
}

TEST_CASE("DesignSpec factories carry names and weights") {
  const DesignSpec crt = DesignSpec::crt(4);
  CHECK(crt.name == "crt-k4");
  CHECK(crt.weights.values() == std::vector<double>{1.0, 0.0, 0.0});

  const DesignSpec sr = DesignSpec::successive_rejects(3);
  CHECK(sr.name == "sr-k3");
  CHECK(sr.weights.values()[0] == doctest::Approx(0.75));

  const DesignSpec tb = DesignSpec::two_batch(4, 1, 0.7);
  CHECK(tb.weights.values() == std::vector<double>{0.7, 1.0 - 0.7, 0.0});
  CHECK(tb.name.find("two-batch") == 0);
}
