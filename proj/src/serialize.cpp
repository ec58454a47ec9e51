#include "bael/serialize.hpp"

#include <charconv>
#include <stdexcept>

namespace bael {

using nlohmann::json;

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

json design_to_json(const DesignSpec& design) {
  return json{{"k", design.weights.num_arms()},
              {"weights", design.weights.values()},
              {"name", design.name}};
}

DesignSpec design_from_json(const json& j) {
  if (!j.is_object()) {
    throw std::invalid_argument("design: expected a JSON object");
  }
  if (!j.contains("k") || !j["k"].is_number_integer()) {
    throw std::invalid_argument("design.k: expected an integer");
  }
  if (!j.contains("weights") || !j["weights"].is_array()) {
    throw std::invalid_argument("design.weights: expected an array");
  }
  const int k = j["k"].get<int>();
  std::vector<double> weights;
  for (const auto& w : j["weights"]) {
    if (!w.is_number()) {
      throw std::invalid_argument("design.weights: entries must be numbers");
    }
    weights.push_back(w.get<double>());
  }
  std::string name = "design";
  if (j.contains("name")) {
    if (!j["name"].is_string()) {
      throw std::invalid_argument("design.name: expected a string");
    }
    name = j["name"].get<std::string>();
  }
  return DesignSpec::from_weights(BatchWeights(k, std::move(weights)),
                                  std::move(name));
}

json exponent_report_to_json(const ExponentReport& report) {
  json stages = json::array();
  for (const StageExponent& s : report.stages) {
    stages.push_back(json{{"n", s.candidates},
                          {"w", s.share},
                          {"gamma", s.rate},
                          {"product", s.product}});
  }
  return json{{"stages", std::move(stages)},
              {"bae_lower_bound", report.bae_lower_bound},
              {"crt_exponent", report.crt_exponent},
              {"dominance_margin", report.dominance_margin},
              {"dominates", report.dominates}};
}

std::string exponent_report_to_csv(const ExponentReport& report) {
  std::string out = "n,w,gamma,product\n";
  for (const StageExponent& s : report.stages) {
    out += std::to_string(s.candidates);
    out += ',';
    out += format_double(s.share);
    out += ',';
    out += format_double(s.rate);
    out += ',';
    out += format_double(s.product);
    out += '\n';
  }
  out += "# bae_lower_bound," + format_double(report.bae_lower_bound) + "\n";
  out += "# crt_exponent," + format_double(report.crt_exponent) + "\n";
  out += "# dominance_margin," + format_double(report.dominance_margin) + "\n";
  out += std::string("# dominates,") + (report.dominates ? "true" : "false") +
         "\n";
  return out;
}

json sim_report_to_json(const SimReport& report) {
  return json{{"design", report.design},
              {"model", report.model},
              {"T", report.horizon},
              {"reps", report.replications},
              {"seed", report.seed},
              {"error_rate", report.error_rate},
              {"error_se", report.error_se},
              {"regret", report.regret},
              {"regret_se", report.regret_se},
              {"pulls", report.mean_pulls}};
}

std::string sim_csv_header(int k) {
  std::string out = "design,model,T,reps,seed,error_rate,error_se,regret,regret_se";
  for (int i = 1; i <= k; ++i) out += ",pulls_arm" + std::to_string(i);
  out += '\n';
  return out;
}

std::string sim_csv_row(const SimReport& report) {
  std::string out = report.design;
  out += ',';
  out += report.model;
  out += ',';
  out += std::to_string(report.horizon);
  out += ',';
  out += std::to_string(report.replications);
  out += ',';
  out += std::to_string(report.seed);
  out += ',';
  out += format_double(report.error_rate);
  out += ',';
  out += format_double(report.error_se);
  out += ',';
  out += format_double(report.regret);
  out += ',';
  out += format_double(report.regret_se);
  for (double p : report.mean_pulls) {
    out += ',';
    out += format_double(p);
  }
  out += '\n';
  return out;
}

json ziln_fits_to_json(const std::map<std::string, ZilnArm>& fits) {
  json out = json::object();
  for (const auto& [label, fit] : fits) {
    out[label] = json{
        {"p_zero", fit.p_zero}, {"meanlog", fit.meanlog}, {"sdlog", fit.sdlog}};
  }
  return out;
}

}  // namespace bael
