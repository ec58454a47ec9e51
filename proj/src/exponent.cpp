#include "bael/exponent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace bael {

std::vector<double> gap_vector(const std::vector<double>& sorted_means) {
  const int n = static_cast<int>(sorted_means.size());
  if (n < 2) {
    throw std::invalid_argument("gap_vector: need at least 2 means");
  }
  for (double m : sorted_means) {
    if (!std::isfinite(m)) {
      throw std::invalid_argument("gap_vector: means must be finite");
    }
  }
  for (int i = 1; i < n; ++i) {
    if (sorted_means[i] > sorted_means[i - 1]) {
      throw std::invalid_argument("gap_vector: means must be sorted descending");
    }
  }
  if (!(sorted_means[0] > sorted_means[1])) {
    throw std::invalid_argument("gap_vector: top mean must be strictly largest");
  }
  std::vector<double> deltas(n);
  for (int i = 0; i < n; ++i) deltas[i] = sorted_means[0] - sorted_means[i];
  return deltas;
}

double psi_closed_form(const std::vector<double>& sorted_means) {
  const std::vector<double> d = gap_vector(sorted_means);
  const int n = static_cast<int>(d.size());
  double sum = 0.0;
  double sumsq = 0.0;
  // Pool the top mean with the m largest gaps; stop at the first m whose
  // pooled average no longer undercuts the next gap outside the pool.
  for (int m = 1; m < n; ++m) {
    const double dm = d[n - m];
    sum += dm;
    sumsq += dm * dm;
    if (d[n - m - 1] <= sum / (m + 1)) {
      return sumsq - sum * sum / (m + 1);
    }
  }
  // m = n-1 always satisfies the stopping rule because d[0] = 0.
  throw std::logic_error("psi_closed_form: no pooling level accepted");
}

double psi_brute_force(const std::vector<double>& sorted_means) {
  gap_vector(sorted_means);  // shares validation with the closed form
  const int n = static_cast<int>(sorted_means.size());
  if (n > 12) {
    throw std::invalid_argument("psi_brute_force: n must be at most 12");
  }
  const int others = n - 1;
  double best = std::numeric_limits<double>::infinity();
  for (unsigned mask = 0; mask < (1u << others); ++mask) {
    double pooled = sorted_means[0];
    int count = 1;
    for (int j = 0; j < others; ++j) {
      if (mask & (1u << j)) {
        pooled += sorted_means[j + 1];
        ++count;
      }
    }
    const double avg = pooled / count;
    bool feasible = true;
    for (int j = 0; j < others && feasible; ++j) {
      if (!(mask & (1u << j)) && avg > sorted_means[j + 1]) feasible = false;
    }
    if (!feasible) continue;
    double cost = (avg - sorted_means[0]) * (avg - sorted_means[0]);
    for (int j = 0; j < others; ++j) {
      if (mask & (1u << j)) {
        cost += (avg - sorted_means[j + 1]) * (avg - sorted_means[j + 1]);
      }
    }
    best = std::min(best, cost);
  }
  return best;
}

double elimination_rate(const Instance& inst, int n) {
  const int k = inst.num_arms();
  if (k > 20) {
    throw std::invalid_argument("elimination_rate: k must be at most 20");
  }
  if (n < 2 || n > k) {
    throw std::invalid_argument("elimination_rate: n must lie in [2, k]");
  }
  std::vector<double> others;
  others.reserve(k - 1);
  for (int i = 0; i < k; ++i) {
    if (i != inst.best_arm()) others.push_back(inst.means()[i]);
  }
  std::sort(others.begin(), others.end(), std::greater<double>());

  // Subsets of size n-1 drawn from the descending-sorted rivals; index
  // order keeps each candidate vector sorted without re-sorting.
  const int m = n - 1;
  const int pool = k - 1;
  std::vector<int> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<double> mu(n);
  mu[0] = inst.means()[inst.best_arm()];
  double best_psi = std::numeric_limits<double>::infinity();
  for (;;) {
    for (int j = 0; j < m; ++j) mu[j + 1] = others[idx[j]];
    best_psi = std::min(best_psi, psi_closed_form(mu));
    int j = m - 1;
    while (j >= 0 && idx[j] == pool - m + j) --j;
    if (j < 0) break;
    ++idx[j];
    for (int l = j + 1; l < m; ++l) idx[l] = idx[l - 1] + 1;
  }
  return best_psi / (2.0 * inst.sigma() * inst.sigma());
}

double allocation_share(const BatchWeights& weights, int n) {
  const int k = weights.num_arms();
  if (n < 2 || n > k) {
    throw std::invalid_argument("allocation_share: n must lie in [2, k]");
  }
  double share = 0.0;
  for (int r = n; r <= k; ++r) share += weights.batch_share(r) / r;
  return share;
}

double crt_exponent(const Instance& inst) {
  const double d = inst.delta_min();
  return d * d / (4.0 * inst.num_arms() * inst.sigma() * inst.sigma());
}

DominanceVerdict dominance_condition(const BatchWeights& weights) {
  const int k = weights.num_arms();
  double lowest = std::numeric_limits<double>::infinity();
  for (int n = 2; n <= k; ++n) {
    lowest = std::min(lowest, allocation_share(weights, n) * (n - 1) / n);
  }
  const double margin = lowest - 1.0 / (2.0 * k);
  return DominanceVerdict{margin, margin > 0.0};
}

ExponentReport exponent_lower_bound(const Instance& inst,
                                    const BatchWeights& weights) {
  if (weights.num_arms() != inst.num_arms()) {
    throw std::invalid_argument(
        "exponent_lower_bound: weights and instance disagree on k");
  }
  const int k = inst.num_arms();
  ExponentReport report;
  report.stages.reserve(k - 1);
  double bound = std::numeric_limits<double>::infinity();
  for (int n = k; n >= 2; --n) {
    StageExponent stage;
    stage.candidates = n;
    stage.share = allocation_share(weights, n);
    stage.rate = elimination_rate(inst, n);
    stage.product = stage.share * stage.rate;
    bound = std::min(bound, stage.product);
    report.stages.push_back(stage);
  }
  report.bae_lower_bound = bound;
  report.crt_exponent = crt_exponent(inst);
  const DominanceVerdict verdict = dominance_condition(weights);
  report.dominance_margin = verdict.margin;
  report.dominates = verdict.dominates;
  return report;
}

}  // namespace bael
