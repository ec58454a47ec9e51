#include "bael/design.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace bael {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

Instance::Instance(std::vector<double> means, double sigma)
    : means_(std::move(means)), sigma_(sigma) {
  if (means_.size() < 2) {
    throw std::invalid_argument("Instance: need at least 2 arms");
  }
  if (!(sigma_ > 0.0) || !std::isfinite(sigma_)) {
    throw std::invalid_argument("Instance: sigma must be positive and finite");
  }
  for (double m : means_) {
    if (!std::isfinite(m)) {
      throw std::invalid_argument("Instance: means must be finite");
    }
  }
  best_arm_ = static_cast<int>(
      std::max_element(means_.begin(), means_.end()) - means_.begin());
  const double top = means_[best_arm_];
  delta_min_ = std::numeric_limits<double>::infinity();
  delta_max_ = 0.0;
  for (int i = 0; i < num_arms(); ++i) {
    if (i == best_arm_) continue;
    const double gap = top - means_[i];
    if (gap == 0.0) {
      throw std::invalid_argument("Instance: best arm must be unique");
    }
    delta_min_ = std::min(delta_min_, gap);
    delta_max_ = std::max(delta_max_, gap);
  }
}

BatchWeights::BatchWeights(int k, std::vector<double> weights)
    : k_(k), weights_(std::move(weights)) {
  if (k_ < 2) {
    throw std::invalid_argument("BatchWeights: k must be at least 2");
  }
  if (static_cast<int>(weights_.size()) != k_ - 1) {
    throw std::invalid_argument("BatchWeights: expected k-1 entries, got " +
                                std::to_string(weights_.size()));
  }
  double sum = 0.0;
  for (double w : weights_) {
    if (!std::isfinite(w) || w < 0.0) {
      throw std::invalid_argument("BatchWeights: entries must be nonnegative");
    }
    sum += w;
  }
  if (std::fabs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("BatchWeights: entries must sum to 1, got " +
                                format_double(sum));
  }
}

double BatchWeights::batch_share(int n) const {
  if (n < 2 || n > k_) {
    throw std::invalid_argument("BatchWeights: batch index out of range");
  }
  return weights_[k_ - n];
}

BatchWeights make_batch_weights(int k, const std::vector<double>& raw) {
  if (k < 2) {
    throw std::invalid_argument("make_batch_weights: k must be at least 2");
  }
  if (static_cast<int>(raw.size()) != k - 1) {
    throw std::invalid_argument(
        "make_batch_weights: expected k-1 entries, got " +
        std::to_string(raw.size()));
  }
  double sum = 0.0;
  for (double w : raw) {
    if (!std::isfinite(w) || w < 0.0) {
      throw std::invalid_argument(
          "make_batch_weights: entries must be nonnegative");
    }
    sum += w;
  }
  if (sum <= 0.0) {
    throw std::invalid_argument(
        "make_batch_weights: entries must not all be zero");
  }
  std::vector<double> scaled(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) scaled[i] = raw[i] / sum;
  // Absorb residual rounding into the largest entry so the sum-to-1
  // invariant holds exactly; zeros stay exactly zero.
  double check = 0.0;
  for (double w : scaled) check += w;
  *std::max_element(scaled.begin(), scaled.end()) += 1.0 - check;
  return BatchWeights(k, std::move(scaled));
}

BatchWeights crt_weights(int k) {
  if (k < 2) {
    throw std::invalid_argument("crt_weights: k must be at least 2");
  }
  std::vector<double> w(k - 1, 0.0);
  w[0] = 1.0;
  return BatchWeights(k, std::move(w));
}

BatchWeights successive_rejects_weights(int k) {
  if (k < 2) {
    throw std::invalid_argument(
        "successive_rejects_weights: k must be at least 2");
  }
  if (k == 2) {
    return BatchWeights(2, {1.0});
  }
  double lbar = 0.5;
  for (int i = 2; i <= k; ++i) lbar += 1.0 / i;
  std::vector<double> w(k - 1, 0.0);
  w[0] = 1.0 / lbar;  // beta_k
  double used = w[0];
  for (int n = k - 1; n >= 3; --n) {
    w[k - n] = 1.0 / ((n + 1) * lbar);  // beta_n
    used += w[k - n];
  }
  w[k - 2] = 1.0 - used;  // beta_2 takes the remainder
  return BatchWeights(k, std::move(w));
}

TwoBatchDesign two_batch_weights(int k, int s, double beta_first) {
  if (k < 3) {
    throw std::invalid_argument("two_batch_weights: k must be at least 3");
  }
  if (s < 1 || s > k - 2) {
    throw std::invalid_argument(
        "two_batch_weights: s must lie in [1, k-2], got " + std::to_string(s));
  }
  if (!(beta_first > 0.0 && beta_first < 1.0)) {
    throw std::invalid_argument(
        "two_batch_weights: beta_first must lie strictly in (0,1)");
  }
  std::vector<double> w(k - 1, 0.0);
  w[0] = beta_first;       // beta_k
  w[s] = 1.0 - beta_first; // beta_{k-s}
  const double threshold = 0.5 + 1.0 / (2.0 * (k - s));
  return TwoBatchDesign{BatchWeights(k, std::move(w)), threshold,
                        beta_first > threshold};
}

DesignSpec DesignSpec::from_weights(BatchWeights w, std::string name) {
  return DesignSpec{std::move(w), std::move(name)};
}

DesignSpec DesignSpec::crt(int k) {
  return DesignSpec{crt_weights(k), "crt-k" + std::to_string(k)};
}

DesignSpec DesignSpec::successive_rejects(int k) {
  return DesignSpec{successive_rejects_weights(k), "sr-k" + std::to_string(k)};
}

DesignSpec DesignSpec::two_batch(int k, int s, double beta_first) {
  TwoBatchDesign d = two_batch_weights(k, s, beta_first);
  return DesignSpec{std::move(d.weights),
                    "two-batch-k" + std::to_string(k) + "-s" +
                        std::to_string(s) + "-b" + format_double(beta_first)};
}

}  // namespace bael
