#pragma once

#include <string>
#include <vector>

namespace bael {

// A Gaussian best-arm problem: arm means plus a common outcome standard
// deviation. Arms are indexed from 0; the best arm must be unique.
class Instance {
 public:
  Instance(std::vector<double> means, double sigma);

  int num_arms() const { return static_cast<int>(means_.size()); }
  const std::vector<double>& means() const { return means_; }
  double sigma() const { return sigma_; }
  int best_arm() const { return best_arm_; }
  // Gap from the best mean to the closest / farthest suboptimal mean.
  double delta_min() const { return delta_min_; }
  double delta_max() const { return delta_max_; }

 private:
  std::vector<double> means_;
  double sigma_;
  int best_arm_;
  double delta_min_;
  double delta_max_;
};

// Batch weights for a k-arm elimination schedule, stored in elimination
// order (beta_k, ..., beta_2): entry j is the share of the budget spent
// while k-j candidates remain. Entries are nonnegative and sum to 1
// within 1e-12.
class BatchWeights {
 public:
  BatchWeights(int k, std::vector<double> weights);

  int num_arms() const { return k_; }
  const std::vector<double>& values() const { return weights_; }
  // Weight of the batch run while n candidates remain, 2 <= n <= k.
  double batch_share(int n) const;

 private:
  int k_;
  std::vector<double> weights_;
};

// Normalizes a raw nonnegative vector onto the simplex and validates it.
// Throws std::invalid_argument on length mismatch, a negative entry, or an
// all-zero vector.
BatchWeights make_batch_weights(int k, const std::vector<double>& raw);

// CRT: the single-batch schedule (1, 0, ..., 0). All arms are sampled in
// round robin to the end and every elimination happens at time T.
BatchWeights crt_weights(int k);

// Successive-rejects schedule: (beta_k,...,beta_3) = (1, 1/k, ..., 1/4)
// scaled by 1/lbar(k) with lbar(k) = 1/2 + sum_{i=2}^k 1/i, and beta_2 the
// remainder. For k = 2 this is the single batch (1).
BatchWeights successive_rejects_weights(int k);

struct TwoBatchDesign {
  BatchWeights weights;
  // First-batch share above which the two-batch schedule strictly improves
  // on the CRT exponent: 1/2 + 1/(2(k-s)).
  double dominance_threshold;
  bool exceeds_threshold;
};

// Two batches only: weight beta_first while all k arms remain, then the
// rest while k-s remain; s arms are dropped at the first checkpoint and
// the remaining k-s-1 at time T. Requires k >= 3, 1 <= s <= k-2 and
// 0 < beta_first < 1.
TwoBatchDesign two_batch_weights(int k, int s, double beta_first);

// A named elimination design. CRT is represented as the weights
// (1, 0, ..., 0); the engine sees nothing but the weights.
struct DesignSpec {
  BatchWeights weights;
  std::string name;

  static DesignSpec from_weights(BatchWeights w, std::string name);
  static DesignSpec crt(int k);
  static DesignSpec successive_rejects(int k);
  static DesignSpec two_batch(int k, int s, double beta_first);
};

}  // namespace bael
