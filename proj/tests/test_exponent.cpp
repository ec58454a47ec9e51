#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "bael/design.hpp"
#include "bael/exponent.hpp"
#include "bael/rng.hpp"

using bael::allocation_share;
using bael::BatchWeights;
using bael::crt_exponent;
using bael::crt_weights;
using bael::dominance_condition;
using bael::DominanceVerdict;
using bael::elimination_rate;
using bael::exponent_lower_bound;
using bael::ExponentReport;
using bael::gap_vector;
using bael::Instance;
using bael::psi_brute_force;
using bael::psi_closed_form;

namespace {

// Sorted-descending mean vectors with a strict top gap, n in [2, max_n].
std::vector<double> random_sorted_means(bael::RandomStream& rng, int max_n) {
  const int n = 2 + static_cast<int>(rng.uniform() * (max_n - 1));
  std::vector<double> mu(n);
  for (double& v : mu) v = -3.0 + 6.0 * rng.uniform();
  std::sort(mu.begin(), mu.end(), std::greater<double>());
  if (!(mu[0] > mu[1])) mu[0] += 0.5;
  return mu;
}

Instance random_instance(bael::RandomStream& rng, int max_k) {
  const int k = 2 + static_cast<int>(rng.uniform() * (max_k - 1));
  std::vector<double> means(k);
  for (double& v : means) v = -2.0 + 4.0 * rng.uniform();
  // Force a unique best arm with a visible gap.
  const auto best = std::max_element(means.begin(), means.end());
  *best += 0.05 + rng.uniform();
  return Instance(means, 0.5 + 1.5 * rng.uniform());
}

}  // namespace

TEST_CASE("gap_vector validates ordering") {
  CHECK(gap_vector({1.0, 0.0}) == std::vector<double>{0.0, 1.0});
  CHECK(gap_vector({2.0, 1.0, 1.0}) == std::vector<double>{0.0, 1.0, 1.0});
  CHECK_THROWS_AS(gap_vector({1.0}), std::invalid_argument);
  CHECK_THROWS_AS(gap_vector({0.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(gap_vector({1.0, 1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(gap_vector({1.0, 0.5, 0.7}), std::invalid_argument);
}

TEST_CASE("psi closed form on worked examples") {
  CHECK(psi_closed_form({1.0, 0.0}) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(psi_closed_form({1.0, 0.0, 0.0}) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(psi_closed_form({2.0, 1.0, 0.0}) == doctest::Approx(2.0).epsilon(1e-15));
  // Equal gaps pool everything: (n-1)/n * delta^2.
  CHECK(psi_closed_form({1.0, 0.5, 0.5, 0.5}) ==
        doctest::Approx(0.1875).epsilon(1e-15));
}

TEST_CASE("psi brute force agrees on the worked examples") {
  CHECK(psi_brute_force({1.0, 0.0}) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(psi_brute_force({1.0, 0.0, 0.0}) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(psi_brute_force({2.0, 1.0, 0.0}) == doctest::Approx(2.0).epsilon(1e-15));
  std::vector<double> big(13, 0.0);
  big[0] = 1.0;
  CHECK_THROWS_AS(psi_brute_force(big), std::invalid_argument);
}

TEST_CASE("psi closed form matches the brute-force oracle on random inputs") {
  bael::RandomStream rng(314, 0);
  for (int trial = 0; trial < 500; ++trial) {
    const std::vector<double> mu = random_sorted_means(rng, 8);
    CHECK(std::fabs(psi_closed_form(mu) - psi_brute_force(mu)) <= 1e-9);
  }
}

TEST_CASE("psi respects its lower and upper bounds") {
  bael::RandomStream rng(2718, 0);
  for (int trial = 0; trial < 300; ++trial) {
    const std::vector<double> mu = random_sorted_means(rng, 8);
    const int n = static_cast<int>(mu.size());
    const double delta2 = mu[0] - mu[1];
    double upper = 0.0;
    for (int i = 1; i < n; ++i) {
      upper += (mu[0] - mu[i]) * (mu[0] - mu[i]);
    }
    const double psi = psi_closed_form(mu);
    CHECK(psi >= (n - 1.0) / n * delta2 * delta2 - 1e-12);
    CHECK(psi <= upper + 1e-12);
  }
}

TEST_CASE("elimination_rate on worked examples") {
  const Instance four({1.0, 0.0, 0.0, 0.0}, 1.0);
  CHECK(elimination_rate(four, 3) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  const Instance three({2.0, 1.0, 0.0}, 1.0);
  CHECK(elimination_rate(three, 2) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(elimination_rate(three, 3) == doctest::Approx(1.0).epsilon(1e-15));

  CHECK_THROWS_AS(elimination_rate(three, 1), std::invalid_argument);
  CHECK_THROWS_AS(elimination_rate(three, 4), std::invalid_argument);
  const Instance big(std::vector<double>{21.0, 19, 18, 17, 16, 15, 14, 13, 12,
                                         11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0},
                     1.0);
  CHECK_THROWS_AS(elimination_rate(big, 5), std::invalid_argument);
}

TEST_CASE("elimination_rate equals the subset brute force") {
  bael::RandomStream rng(5050, 0);
  for (int trial = 0; trial < 60; ++trial) {
    const Instance inst = random_instance(rng, 7);
    const int k = inst.num_arms();
    const int best = inst.best_arm();
    for (int n = 2; n <= k; ++n) {
      double reference = std::numeric_limits<double>::infinity();
      for (unsigned mask = 0; mask < (1u << k); ++mask) {
        if (!(mask & (1u << best))) continue;
        if (std::popcount(mask) != n) continue;
        std::vector<double> mu{inst.means()[best]};
        for (int i = 0; i < k; ++i) {
          if (i != best && (mask & (1u << i))) mu.push_back(inst.means()[i]);
        }
        std::sort(mu.begin() + 1, mu.end(), std::greater<double>());
        reference = std::min(reference, psi_brute_force(mu));
      }
      reference /= 2.0 * inst.sigma() * inst.sigma();
      CHECK(std::fabs(elimination_rate(inst, n) - reference) <= 1e-9);
    }
  }
}

TEST_CASE("elimination_rate scaling and invariance") {
  bael::RandomStream rng(60, 0);
  for (int trial = 0; trial < 40; ++trial) {
    const Instance inst = random_instance(rng, 6);
    const int n = 2 + static_cast<int>(rng.uniform() * (inst.num_arms() - 1));
    const double base = elimination_rate(inst, n);

    std::vector<double> shifted = inst.means();
    for (double& v : shifted) v += 3.25;
    CHECK(elimination_rate(Instance(shifted, inst.sigma()), n) ==
          doctest::Approx(base).epsilon(1e-12));

    CHECK(elimination_rate(Instance(inst.means(), 2.0 * inst.sigma()), n) ==
          doctest::Approx(base / 4.0).epsilon(1e-12));

    const double dmin = inst.delta_min();
    const double lemma =
        (n - 1.0) / n * dmin * dmin / (2.0 * inst.sigma() * inst.sigma());
    CHECK(base >= lemma - 1e-12);
  }
}

TEST_CASE("allocation_share accumulates batch shares per survivor") {
  const BatchWeights crt5 = crt_weights(5);
  for (int n = 2; n <= 5; ++n) {
    CHECK(allocation_share(crt5, n) == doctest::Approx(0.2).epsilon(1e-15));
  }

  const BatchWeights tb(4, {0.7, 0.3, 0.0});
  CHECK(allocation_share(tb, 4) == doctest::Approx(0.175).epsilon(1e-15));
  CHECK(allocation_share(tb, 3) == doctest::Approx(0.275).epsilon(1e-14));
  CHECK(allocation_share(tb, 2) == doctest::Approx(0.275).epsilon(1e-14));
  CHECK_THROWS_AS(allocation_share(tb, 5), std::invalid_argument);
}

TEST_CASE("allocation shares are monotone and exhaust the budget") {
  bael::RandomStream rng(777, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 2 + static_cast<int>(rng.uniform() * 9);
    std::vector<double> raw(k - 1);
    for (double& v : raw) v = rng.uniform();
    raw[0] += 0.01;
    const BatchWeights w = bael::make_batch_weights(k, raw);
    double total = allocation_share(w, 2);  // the survivor's final share
    for (int n = 2; n < k; ++n) {
      CHECK(allocation_share(w, n) >= allocation_share(w, n + 1) - 1e-15);
    }
    for (int n = 2; n <= k; ++n) total += allocation_share(w, n);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("crt_exponent closed form") {
  CHECK(crt_exponent(Instance({1.0, 0.0, 0.0, 0.0}, 1.0)) ==
        doctest::Approx(0.0625).epsilon(1e-15));
  CHECK(crt_exponent(Instance({1.0, 0.0}, 1.0)) ==
        doctest::Approx(0.125).epsilon(1e-15));
  CHECK(crt_exponent(Instance({2.0, 1.0, 0.0}, 2.0)) ==
        doctest::Approx(1.0 / 48.0).epsilon(1e-15));
}

TEST_CASE("dominance_condition on the reference designs") {
  const DominanceVerdict tb = dominance_condition(BatchWeights(4, {0.7, 0.3, 0.0}));
  CHECK(std::fabs(tb.margin - 0.00625) <= 1e-12);
  CHECK(tb.dominates);

  const DominanceVerdict sr = dominance_condition(bael::successive_rejects_weights(3));
  CHECK(std::fabs(sr.margin) <= 1e-12);
  CHECK_FALSE(sr.dominates);

  for (int k : {2, 3, 4, 7}) {
    const DominanceVerdict crt = dominance_condition(crt_weights(k));
    CHECK(std::fabs(crt.margin) <= 1e-15);
    CHECK_FALSE(crt.dominates);
  }
}

TEST_CASE("exponent_lower_bound on the two-batch fixture") {
  const Instance inst({1.0, 0.0, 0.0, 0.0}, 1.0);
  const ExponentReport report =
      exponent_lower_bound(inst, BatchWeights(4, {0.7, 0.3, 0.0}));

  REQUIRE(report.stages.size() == 3);
  CHECK(report.stages[0].candidates == 4);
  CHECK(report.stages[1].candidates == 3);
  CHECK(report.stages[2].candidates == 2);
  CHECK(std::fabs(report.stages[0].product - 0.065625) <= 1e-12);
  CHECK(std::fabs(report.stages[1].product - 0.275 / 3.0) <= 1e-12);
  CHECK(std::fabs(report.stages[2].product - 0.06875) <= 1e-12);
  CHECK(std::fabs(report.bae_lower_bound - 0.065625) <= 1e-12);
  CHECK(std::fabs(report.crt_exponent - 0.0625) <= 1e-12);
  CHECK(std::fabs(report.dominance_margin - 0.00625) <= 1e-12);
  CHECK(report.dominates);
}

TEST_CASE("exponent_lower_bound with CRT weights recovers the CRT exponent") {
  bael::RandomStream rng(404, 0);
  for (int trial = 0; trial < 60; ++trial) {
    const Instance inst = random_instance(rng, 7);
    const ExponentReport report =
        exponent_lower_bound(inst, crt_weights(inst.num_arms()));
    CHECK(std::fabs(report.bae_lower_bound - crt_exponent(inst)) <= 1e-12);
    CHECK_FALSE(report.dominates);
  }
}

TEST_CASE("exponent_lower_bound rejects mismatched k") {
  const Instance inst({1.0, 0.0, 0.0}, 1.0);
  CHECK_THROWS_AS(exponent_lower_bound(inst, crt_weights(4)),
                  std::invalid_argument);
}
