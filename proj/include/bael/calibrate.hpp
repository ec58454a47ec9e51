#pragma once

#include <map>
#include <string>
#include <vector>

#include "bael/simulate.hpp"

namespace bael {

struct ArmSamples {
  std::string label;
  std::vector<double> outcomes;  // nonnegative
};

// Reads a two-column CSV with header "arm,outcome". Outcomes must parse as
// nonnegative finite numbers; violations are reported with their line
// number. The map key is the arm label, so arms come back label-sorted.
std::map<std::string, ArmSamples> load_arm_samples(const std::string& path);

// Zero-inflated lognormal fit: p_zero is the zero fraction, meanlog/sdlog
// are the sample mean and sd of log(positive outcomes). Needs at least two
// positive outcomes; sdlog is floored at 1e-6 so degenerate samples stay
// usable.
ZilnArm fit_zero_inflated_lognormal(const ArmSamples& samples);

// Conditional-positive summary of one arm: zero share plus the mean and sd
// of the positive part.
struct SummaryArm {
  double p_zero;
  double mean;  // conditional on being positive
  double sd;    // conditional on being positive
};

// Moment-matches each summary to lognormal parameters
// (sdlog^2 = log(1 + sd^2/mean^2), meanlog = log(mean) - sdlog^2/2) and
// assembles the zero-inflated model; the true mean of arm i comes out as
// (1 - p_zero) * mean.
OutcomeModel model_from_summary(const std::vector<SummaryArm>& arms);

}  // namespace bael
