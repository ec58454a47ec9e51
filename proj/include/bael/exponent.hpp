#pragma once

#include <vector>

#include "bael/design.hpp"

namespace bael {

// Gaps (0 = delta_1 <= delta_2 <= ...) from means sorted descending with a
// strict gap between the top two. Throws std::invalid_argument otherwise.
std::vector<double> gap_vector(const std::vector<double>& sorted_means);

// Squared-distance cost of dragging the leading mean to the bottom of the
// pack: min ||lambda - mu||^2 over lambda with lambda_1 <= min_j lambda_j.
// Pools the leader with the m largest-gap arms at their joint average, for
// the first m in 1..n-1 whose pooled average clears the next gap.
double psi_closed_form(const std::vector<double>& sorted_means);

// Oracle for psi_closed_form: enumerates every pooling subset, keeps the
// feasible ones (pooled average at or below every unpooled mean) and takes
// the cheapest. Exponential in n; requires n <= 12.
double psi_brute_force(const std::vector<double>& sorted_means);

// Smallest large-deviation rate at which the best arm gets eliminated
// while n candidates survive: minimum of psi over all n-subsets containing
// the best arm, scaled by 1/(2 sigma^2). Requires 2 <= n <= k <= 20.
double elimination_rate(const Instance& inst, int n);

// Fraction of the horizon each stage-n survivor has received by the
// stage-n checkpoint: w_n = sum_{r=n}^{k} beta_r / r.
double allocation_share(const BatchWeights& weights, int n);

// Efficiency exponent of the single-batch design: delta_min^2/(4 k sigma^2).
double crt_exponent(const Instance& inst);

struct StageExponent {
  int candidates;  // n
  double share;    // w_n
  double rate;     // elimination rate while n candidates survive
  double product;  // share * rate
};

struct ExponentReport {
  std::vector<StageExponent> stages;  // n = k down to 2
  double bae_lower_bound;             // min over stages of product
  double crt_exponent;
  double dominance_margin;
  bool dominates;
};

// Instance-independent certificate: margin = min_n w_n (n-1)/n - 1/(2k).
// A strictly positive margin means the design's exponent lower bound beats
// the single-batch exponent on every instance.
struct DominanceVerdict {
  double margin;
  bool dominates;
};

DominanceVerdict dominance_condition(const BatchWeights& weights);

// Stage-by-stage exponent table plus the dominance certificate for one
// design on one instance.
ExponentReport exponent_lower_bound(const Instance& inst,
                                    const BatchWeights& weights);

}  // namespace bael
