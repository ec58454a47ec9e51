#include "bael/calibrate.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bael {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

std::map<std::string, ArmSamples> load_arm_samples(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("load_arm_samples: cannot open " + path);
  }
  std::string line;
  long line_no = 0;
  if (!std::getline(in, line)) {
    throw std::invalid_argument("load_arm_samples: " + path + " is empty");
  }
  ++line_no;
  if (trim(line) != "arm,outcome") {
    throw std::invalid_argument(
        "load_arm_samples: expected header 'arm,outcome' on line 1 of " +
        path);
  }
  std::map<std::string, ArmSamples> arms;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument("load_arm_samples: line " +
                                  std::to_string(line_no) +
                                  ": expected 'arm,outcome'");
    }
    const std::string label = trim(line.substr(0, comma));
    const std::string value = trim(line.substr(comma + 1));
    if (label.empty()) {
      throw std::invalid_argument("load_arm_samples: line " +
                                  std::to_string(line_no) + ": empty arm label");
    }
    double outcome = 0.0;
    std::size_t used = 0;
    try {
      outcome = std::stod(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != value.size() || value.empty() || !std::isfinite(outcome)) {
      throw std::invalid_argument("load_arm_samples: line " +
                                  std::to_string(line_no) +
                                  ": outcome is not a finite number: '" +
                                  value + "'");
    }
    if (outcome < 0.0) {
      throw std::invalid_argument("load_arm_samples: line " +
                                  std::to_string(line_no) +
                                  ": outcome must be nonnegative");
    }
    auto [it, inserted] = arms.try_emplace(label, ArmSamples{label, {}});
    it->second.outcomes.push_back(outcome);
  }
  if (arms.empty()) {
    throw std::invalid_argument("load_arm_samples: " + path +
                                " contains no data rows");
  }
  return arms;
}

ZilnArm fit_zero_inflated_lognormal(const ArmSamples& samples) {
  if (samples.outcomes.empty()) {
    throw std::invalid_argument("fit_zero_inflated_lognormal: arm '" +
                                samples.label + "' has no outcomes");
  }
  std::vector<double> logs;
  long long zeros = 0;
  for (double v : samples.outcomes) {
    if (v < 0.0) {
      throw std::invalid_argument("fit_zero_inflated_lognormal: arm '" +
                                  samples.label + "' has a negative outcome");
    }
    if (v == 0.0) {
      ++zeros;
    } else {
      logs.push_back(std::log(v));
    }
  }
  if (logs.size() < 2) {
    throw std::invalid_argument(
        "fit_zero_inflated_lognormal: arm '" + samples.label +
        "' needs at least 2 positive outcomes, got " +
        std::to_string(logs.size()));
  }
  double mean = 0.0;
  for (double v : logs) mean += v;
  mean /= static_cast<double>(logs.size());
  double ss = 0.0;
  for (double v : logs) ss += (v - mean) * (v - mean);
  const double sd =
      std::sqrt(ss / static_cast<double>(logs.size() - 1));
  return ZilnArm{
      static_cast<double>(zeros) / static_cast<double>(samples.outcomes.size()),
      mean, std::max(sd, 1e-6)};
}

OutcomeModel model_from_summary(const std::vector<SummaryArm>& arms) {
  std::vector<ZilnArm> fitted;
  fitted.reserve(arms.size());
  for (std::size_t i = 0; i < arms.size(); ++i) {
    const SummaryArm& a = arms[i];
    if (!(a.p_zero >= 0.0 && a.p_zero < 1.0)) {
      throw std::invalid_argument("model_from_summary: arm " +
                                  std::to_string(i) +
                                  ": p_zero must lie in [0,1)");
    }
    if (!(a.mean > 0.0) || !(a.sd > 0.0) || !std::isfinite(a.mean) ||
        !std::isfinite(a.sd)) {
      throw std::invalid_argument(
          "model_from_summary: arm " + std::to_string(i) +
          ": conditional mean and sd must be positive");
    }
    const double sdlog_sq = std::log1p(a.sd * a.sd / (a.mean * a.mean));
    fitted.push_back(ZilnArm{a.p_zero, std::log(a.mean) - 0.5 * sdlog_sq,
                             std::sqrt(sdlog_sq)});
  }
  return OutcomeModel::zero_inflated_lognormal(std::move(fitted));
}

}  // namespace bael
