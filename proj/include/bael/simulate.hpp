#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bael/design.hpp"
#include "bael/rng.hpp"

namespace bael {

struct ZilnArm {
  double p_zero;   // probability of a structural zero
  double meanlog;  // log-scale mean of the positive part
  double sdlog;    // log-scale sd of the positive part
};

// Outcome distributions the engine can sample: homoscedastic Gaussian arms,
// zero-inflated lognormal arms, or bootstrap resampling from stored per-arm
// outcomes. True means must identify a unique best arm.
class OutcomeModel {
 public:
  static OutcomeModel gaussian(std::vector<double> means, double sigma);
  static OutcomeModel zero_inflated_lognormal(std::vector<ZilnArm> arms);
  static OutcomeModel empirical(std::vector<std::vector<double>> samples);

  int num_arms() const { return static_cast<int>(true_means_.size()); }
  const std::vector<double>& true_means() const { return true_means_; }
  int best_arm() const { return best_arm_; }
  const std::string& label() const { return label_; }

  double sample(int arm, RandomStream& stream) const;

  // Only meaningful for the respective kinds; used for serialization.
  bool is_gaussian() const { return kind_ == Kind::gauss; }
  bool is_ziln() const { return kind_ == Kind::ziln; }
  double gaussian_sigma() const { return sigma_; }
  const std::vector<ZilnArm>& ziln_arms() const { return ziln_; }

 private:
  enum class Kind { gauss, ziln, empirical };

  OutcomeModel(Kind kind, std::vector<double> true_means, std::string label);

  Kind kind_;
  std::vector<double> true_means_;
  int best_arm_ = 0;
  std::string label_;
  double sigma_ = 0.0;                        // gauss
  std::vector<ZilnArm> ziln_;                 // ziln
  std::vector<std::vector<double>> samples_;  // empirical
};

struct Elimination {
  int candidates;                // survivors just before this removal
  int arm;                       // removed arm
  long long time;                // samples consumed when the removal fired
  std::vector<long long> pulls;  // per-arm pull counts at that moment
};

struct TrialRecord {
  int chosen_arm = -1;
  std::vector<long long> pull_counts;
  std::vector<Elimination> eliminations;  // k-1 entries, in removal order
};

// One pass of batched arm elimination over a horizon of T samples.
// Checkpoints sit at round(cumulative weight * T), the last one is forced
// to T, and coincident checkpoints fire consecutive eliminations.
TrialRecord run_trial(const DesignSpec& design, const OutcomeModel& model,
                      long long horizon, RandomStream& stream);

struct SimReport {
  std::string design;
  std::string model;
  long long horizon = 0;
  long long replications = 0;
  std::uint64_t seed = 0;
  double error_rate = 0.0;
  double error_se = 0.0;  // binomial
  double regret = 0.0;
  double regret_se = 0.0;  // sample SE over replications
  std::vector<double> mean_pulls;
};

// Replications run on independent streams keyed by (seed, replication) and
// aggregate into integer counts, so the result is byte-identical for any
// thread count. threads <= 0 picks the hardware concurrency.
SimReport monte_carlo(const DesignSpec& design, const OutcomeModel& model,
                      long long horizon, long long replications,
                      std::uint64_t seed, int threads = 0);

// Closed-form error probability of the two-arm single-batch design:
// Phi(-delta * sqrt(T) / (2 sigma)). Requires delta > 0, sigma > 0 and an
// even horizon T >= 2.
double exact_crt_error_two_arms(double delta, double sigma, long long horizon);

struct ExponentFit {
  double slope;
  double se;
};

// Least-squares slope of -log(error_rate) against T. Needs at least three
// points, distinct horizons, and every rate strictly inside (0,1).
ExponentFit empirical_exponent(
    const std::vector<std::pair<long long, double>>& points);

}  // namespace bael
