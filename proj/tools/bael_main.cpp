// bael: batched arm elimination laboratory.
//
// Subcommands:
//   exponent         stage-by-stage exponent table for a design on an instance
//   check-dominance  instance-independent dominance certificate for a design
//   simulate         Monte Carlo error/regret estimates over a horizon grid
//   sweep            simulate plus a fitted -log(error) slope per design
//   calibrate        fit zero-inflated lognormal arms from an outcome CSV
//
// Exit codes: 0 success (and "dominates" for check-dominance), 1 negative
// domain answer, 2 invalid input, 3 runtime failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bael/calibrate.hpp"
#include "bael/design.hpp"
#include "bael/exponent.hpp"
#include "bael/serialize.hpp"
#include "bael/simulate.hpp"

namespace {

using nlohmann::json;

struct Common {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
  std::optional<std::string> out;
  std::optional<std::string> format;
};

void add_common_flags(CLI::App* sub, Common& c) {
  sub->add_option("--config", c.config_path, "JSON config file");
  sub->add_option("--seed", c.seed, "master seed (overrides config)");
  sub->add_option("--threads", c.threads,
                  "worker threads; results do not depend on this");
  sub->add_option("--out", c.out, "output file (default: stdout)");
  sub->add_option("--format", c.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
}

json load_config(const std::string& path) {
  if (path.empty()) return json::object();
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("config: cannot open " + path);
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("config: " + std::string(e.what()));
  }
}

// ---- checked config access -------------------------------------------------

double as_number(const json& v, const std::string& path) {
  if (!v.is_number()) {
    throw std::invalid_argument(path + ": expected a number");
  }
  return v.get<double>();
}

long long as_integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) {
    throw std::invalid_argument(path + ": expected an integer");
  }
  return v.get<long long>();
}

std::string as_string(const json& v, const std::string& path) {
  if (!v.is_string()) {
    throw std::invalid_argument(path + ": expected a string");
  }
  return v.get<std::string>();
}

std::vector<double> as_number_array(const json& v, const std::string& path) {
  if (!v.is_array() || v.empty()) {
    throw std::invalid_argument(path + ": expected a nonempty array");
  }
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(as_number(x, path + "[]"));
  return out;
}

const json& need(const json& j, const char* key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(path + "." + key + ": missing");
  }
  return j.at(key);
}

// ---- entity resolution -----------------------------------------------------

bael::Instance instance_from_json(const json& j, const std::string& path) {
  return bael::Instance(as_number_array(need(j, "means", path), path + ".means"),
                        as_number(need(j, "sigma", path), path + ".sigma"));
}

int design_k(const json& j, const std::string& path) {
  return static_cast<int>(as_integer(need(j, "k", path), path + ".k"));
}

bael::DesignSpec design_from_config(const json& j, const std::string& path) {
  if (!j.is_object()) {
    throw std::invalid_argument(path + ": expected an object");
  }
  std::string kind = "weights";
  if (j.contains("kind")) kind = as_string(j["kind"], path + ".kind");
  bael::DesignSpec design = [&] {
    if (kind == "crt") {
      return bael::DesignSpec::crt(design_k(j, path));
    }
    if (kind == "successive-rejects" || kind == "sr") {
      return bael::DesignSpec::successive_rejects(design_k(j, path));
    }
    if (kind == "two-batch") {
      return bael::DesignSpec::two_batch(
          design_k(j, path),
          static_cast<int>(as_integer(need(j, "s", path), path + ".s")),
          as_number(need(j, "beta_first", path), path + ".beta_first"));
    }
    if (kind == "weights") {
      // Strict: explicit weights must already sit on the simplex.
      return bael::design_from_json(j);
    }
    throw std::invalid_argument(path + ".kind: unknown design kind '" + kind +
                                "'");
  }();
  if (j.contains("name")) {
    design.name = as_string(j["name"], path + ".name");
  }
  return design;
}

std::vector<bael::DesignSpec> designs_from_config(const json& cfg) {
  std::vector<bael::DesignSpec> designs;
  if (cfg.contains("designs")) {
    if (!cfg["designs"].is_array() || cfg["designs"].empty()) {
      throw std::invalid_argument("designs: expected a nonempty array");
    }
    int i = 0;
    for (const auto& d : cfg["designs"]) {
      designs.push_back(
          design_from_config(d, "designs[" + std::to_string(i++) + "]"));
    }
  } else if (cfg.contains("design")) {
    designs.push_back(design_from_config(cfg["design"], "design"));
  }
  return designs;
}

// Resolves the model, writing the fully-resolved form into echo.
bael::OutcomeModel model_from_config(const json& cfg, json& echo) {
  if (!cfg.contains("model")) {
    if (cfg.contains("instance")) {
      const bael::Instance inst = instance_from_json(cfg["instance"], "instance");
      echo = json{{"kind", "gaussian"},
                  {"means", inst.means()},
                  {"sigma", inst.sigma()}};
      return bael::OutcomeModel::gaussian(inst.means(), inst.sigma());
    }
    throw std::invalid_argument("model: missing (and no instance to fall back on)");
  }
  const json& m = cfg["model"];
  const std::string kind = as_string(need(m, "kind", "model"), "model.kind");
  if (kind == "gaussian") {
    const auto means = as_number_array(need(m, "means", "model"), "model.means");
    const double sigma = as_number(need(m, "sigma", "model"), "model.sigma");
    echo = json{{"kind", "gaussian"}, {"means", means}, {"sigma", sigma}};
    return bael::OutcomeModel::gaussian(means, sigma);
  }
  if (kind == "zero-inflated-lognormal" || kind == "ziln") {
    const json& arms = need(m, "arms", "model");
    if (!arms.is_array() || arms.empty()) {
      throw std::invalid_argument("model.arms: expected a nonempty array");
    }
    std::vector<bael::ZilnArm> parsed;
    int i = 0;
    for (const auto& a : arms) {
      const std::string path = "model.arms[" + std::to_string(i++) + "]";
      parsed.push_back(bael::ZilnArm{
          as_number(need(a, "p_zero", path), path + ".p_zero"),
          as_number(need(a, "meanlog", path), path + ".meanlog"),
          as_number(need(a, "sdlog", path), path + ".sdlog")});
    }
    echo = json{{"kind", "ziln"}, {"arms", json::array()}};
    for (const auto& a : parsed) {
      echo["arms"].push_back(json{
          {"p_zero", a.p_zero}, {"meanlog", a.meanlog}, {"sdlog", a.sdlog}});
    }
    return bael::OutcomeModel::zero_inflated_lognormal(std::move(parsed));
  }
  if (kind == "zero-inflated-summary" || kind == "ziln-summary") {
    const json& arms = need(m, "arms", "model");
    if (!arms.is_array() || arms.empty()) {
      throw std::invalid_argument("model.arms: expected a nonempty array");
    }
    std::vector<bael::SummaryArm> parsed;
    int i = 0;
    for (const auto& a : arms) {
      const std::string path = "model.arms[" + std::to_string(i++) + "]";
      parsed.push_back(bael::SummaryArm{
          as_number(need(a, "p_zero", path), path + ".p_zero"),
          as_number(need(a, "mean", path), path + ".mean"),
          as_number(need(a, "sd", path), path + ".sd")});
    }
    bael::OutcomeModel model = bael::model_from_summary(parsed);
    echo = json{{"kind", "ziln"}, {"arms", json::array()}};
    for (const auto& a : model.ziln_arms()) {
      echo["arms"].push_back(json{
          {"p_zero", a.p_zero}, {"meanlog", a.meanlog}, {"sdlog", a.sdlog}});
    }
    return model;
  }
  if (kind == "empirical") {
    const std::string path =
        as_string(need(m, "path", "model"), "model.path");
    const auto arms = bael::load_arm_samples(path);
    std::vector<std::vector<double>> samples;
    json labels = json::array();
    for (const auto& [label, arm] : arms) {
      samples.push_back(arm.outcomes);
      labels.push_back(label);
    }
    echo = json{{"kind", "empirical"}, {"path", path}, {"arms", labels}};
    return bael::OutcomeModel::empirical(std::move(samples));
  }
  throw std::invalid_argument("model.kind: unknown model kind '" + kind + "'");
}

std::vector<long long> horizons_from_config(const json& cfg) {
  if (!cfg.contains("T")) {
    throw std::invalid_argument("T: missing");
  }
  const json& t = cfg["T"];
  std::vector<long long> horizons;
  if (t.is_array()) {
    if (t.empty()) {
      throw std::invalid_argument("T: expected a nonempty array");
    }
    for (const auto& v : t) horizons.push_back(as_integer(v, "T[]"));
  } else {
    horizons.push_back(as_integer(t, "T"));
  }
  for (long long h : horizons) {
    if (h <= 0) throw std::invalid_argument("T: horizons must be positive");
  }
  return horizons;
}

// ---- output ----------------------------------------------------------------

// Writes in one shot; a file that cannot be written completely is removed.
void write_output(const std::optional<std::string>& out,
                  const std::string& content) {
  if (!out || out->empty()) {
    std::cout << content;
    return;
  }
  std::ofstream file(*out, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw std::runtime_error("cannot open output file: " + *out);
  }
  file << content;
  file.flush();
  if (!file) {
    file.close();
    std::remove(out->c_str());
    throw std::runtime_error("failed while writing: " + *out);
  }
}

std::string resolve_format(const Common& c, const json& cfg,
                           const std::string& fallback) {
  if (c.format) return *c.format;
  if (cfg.contains("format")) {
    const std::string f = as_string(cfg["format"], "format");
    if (f != "csv" && f != "json") {
      throw std::invalid_argument("format: expected 'csv' or 'json'");
    }
    return f;
  }
  return fallback;
}

std::uint64_t resolve_seed(const Common& c, const json& cfg) {
  if (c.seed) return *c.seed;
  if (cfg.contains("seed")) {
    if (!cfg["seed"].is_number_integer()) {
      throw std::invalid_argument("seed: expected an integer");
    }
    return cfg["seed"].get<std::uint64_t>();
  }
  return 0;
}

int resolve_threads(const Common& c, const json& cfg) {
  if (c.threads) return *c.threads;
  if (cfg.contains("threads")) {
    return static_cast<int>(as_integer(cfg["threads"], "threads"));
  }
  return 0;
}

// ---- subcommands -----------------------------------------------------------

int cmd_exponent(const Common& c) {
  const json cfg = load_config(c.config_path);
  if (!cfg.contains("instance")) {
    throw std::invalid_argument("instance: missing");
  }
  const bael::Instance inst = instance_from_json(cfg["instance"], "instance");
  const auto designs = designs_from_config(cfg);
  if (designs.size() != 1) {
    throw std::invalid_argument("design: exponent needs exactly one design");
  }
  const bael::ExponentReport report =
      bael::exponent_lower_bound(inst, designs[0].weights);

  const std::string format = resolve_format(c, cfg, "json");
  const json config_echo{{"instance",
                          json{{"means", inst.means()}, {"sigma", inst.sigma()}}},
                         {"design", bael::design_to_json(designs[0])},
                         {"format", format}};
  if (format == "json") {
    json doc = bael::exponent_report_to_json(report);
    doc["config"] = config_echo;
    write_output(c.out, doc.dump(2) + "\n");
  } else {
    std::string doc = "# config: " + config_echo.dump() + "\n";
    doc += bael::exponent_report_to_csv(report);
    write_output(c.out, doc);
  }
  if (c.out && !c.out->empty()) {
    std::cout << "exponent lower bound " << bael::format_double(report.bae_lower_bound)
              << ", crt exponent " << bael::format_double(report.crt_exponent)
              << ", margin " << bael::format_double(report.dominance_margin)
              << (report.dominates ? " (dominates)" : " (does not dominate)")
              << "; wrote " << *c.out << "\n";
  }
  return 0;
}

struct DominanceFlags {
  std::optional<int> crt_k;
  std::optional<int> sr_k;
  std::vector<std::string> two_batch;  // k s beta_first
  std::string weights_csv;
};

int cmd_check_dominance(const Common& c, const DominanceFlags& f) {
  const json cfg = load_config(c.config_path);
  std::optional<bael::DesignSpec> design;
  std::optional<bael::TwoBatchDesign> two_batch_info;

  const int sources = (f.crt_k ? 1 : 0) + (f.sr_k ? 1 : 0) +
                      (f.two_batch.empty() ? 0 : 1) +
                      (f.weights_csv.empty() ? 0 : 1);
  if (sources > 1) {
    throw std::invalid_argument(
        "check-dominance: give at most one of --crt, --successive-rejects, "
        "--two-batch, --weights");
  }
  if (f.crt_k) {
    design = bael::DesignSpec::crt(*f.crt_k);
  } else if (f.sr_k) {
    design = bael::DesignSpec::successive_rejects(*f.sr_k);
  } else if (!f.two_batch.empty()) {
    if (f.two_batch.size() != 3) {
      throw std::invalid_argument("--two-batch: expected K S BETA_FIRST");
    }
    int k = 0;
    int s = 0;
    double beta = 0.0;
    try {
      k = std::stoi(f.two_batch[0]);
      s = std::stoi(f.two_batch[1]);
      beta = std::stod(f.two_batch[2]);
    } catch (const std::exception&) {
      throw std::invalid_argument("--two-batch: expected K S BETA_FIRST");
    }
    two_batch_info = bael::two_batch_weights(k, s, beta);
    design = bael::DesignSpec::two_batch(k, s, beta);
  } else if (!f.weights_csv.empty()) {
    std::vector<double> w;
    std::stringstream ss(f.weights_csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        w.push_back(std::stod(item));
      } catch (const std::exception&) {
        throw std::invalid_argument("--weights: expected comma-separated numbers");
      }
    }
    // Strict: explicit weights must already sit on the simplex.
    const int k = static_cast<int>(w.size()) + 1;
    design = bael::DesignSpec::from_weights(bael::BatchWeights(k, std::move(w)),
                                            "weights");
  } else if (cfg.contains("design") || cfg.contains("designs")) {
    auto designs = designs_from_config(cfg);
    if (designs.size() != 1) {
      throw std::invalid_argument(
          "design: check-dominance needs exactly one design");
    }
    design = std::move(designs[0]);
  } else {
    throw std::invalid_argument(
        "check-dominance: no design given (flag or config)");
  }

  const bael::DominanceVerdict verdict =
      bael::dominance_condition(design->weights);
  std::cout << design->name << ": margin "
            << bael::format_double(verdict.margin)
            << (verdict.dominates ? " -> dominates" : " -> does not dominate")
            << "\n";
  if (two_batch_info) {
    std::cout << "first-batch share threshold "
              << bael::format_double(two_batch_info->dominance_threshold)
              << (two_batch_info->exceeds_threshold ? " (exceeded)"
                                                    : " (not exceeded)")
              << "\n";
  }
  if (c.out && !c.out->empty()) {
    json doc{{"design", bael::design_to_json(*design)},
             {"margin", verdict.margin},
             {"dominates", verdict.dominates}};
    if (two_batch_info) {
      doc["threshold"] = two_batch_info->dominance_threshold;
      doc["exceeds_threshold"] = two_batch_info->exceeds_threshold;
    }
    write_output(c.out, doc.dump(2) + "\n");
  }
  return verdict.dominates ? 0 : 1;
}

struct SimPlan {
  std::vector<bael::DesignSpec> designs;
  std::optional<bael::OutcomeModel> model;
  std::vector<long long> horizons;
  long long replications = 0;
  std::uint64_t seed = 0;
  int threads = 0;
  std::string format;
  json echo;  // resolved config embedded in reports (threads/out excluded)
};

SimPlan resolve_sim_plan(const Common& c, const json& cfg) {
  SimPlan plan;
  plan.designs = designs_from_config(cfg);
  if (plan.designs.empty()) {
    throw std::invalid_argument("design: missing (need design or designs)");
  }
  json model_echo;
  plan.model = model_from_config(cfg, model_echo);
  plan.horizons = horizons_from_config(cfg);
  if (!cfg.contains("replications")) {
    throw std::invalid_argument("replications: missing");
  }
  plan.replications = as_integer(cfg["replications"], "replications");
  if (plan.replications < 1) {
    throw std::invalid_argument("replications: must be at least 1");
  }
  plan.seed = resolve_seed(c, cfg);
  plan.threads = resolve_threads(c, cfg);
  plan.format = resolve_format(c, cfg, "csv");

  const int k = plan.model->num_arms();
  json design_echo = json::array();
  for (const auto& d : plan.designs) {
    if (d.weights.num_arms() != k) {
      throw std::invalid_argument("design '" + d.name + "': k=" +
                                  std::to_string(d.weights.num_arms()) +
                                  " but the model has k=" + std::to_string(k));
    }
    design_echo.push_back(bael::design_to_json(d));
  }
  for (long long h : plan.horizons) {
    if (h < k) {
      throw std::invalid_argument("T: horizon " + std::to_string(h) +
                                  " is below k=" + std::to_string(k));
    }
  }
  plan.echo = json{{"designs", std::move(design_echo)},
                   {"model", std::move(model_echo)},
                   {"T", plan.horizons},
                   {"replications", plan.replications},
                   {"seed", plan.seed},
                   {"format", plan.format}};
  return plan;
}

std::vector<bael::SimReport> run_plan(const SimPlan& plan) {
  std::vector<bael::SimReport> rows;
  rows.reserve(plan.designs.size() * plan.horizons.size());
  for (const auto& design : plan.designs) {
    for (long long horizon : plan.horizons) {
      rows.push_back(bael::monte_carlo(design, *plan.model, horizon,
                                       plan.replications, plan.seed,
                                       plan.threads));
    }
  }
  return rows;
}

std::string render_rows_csv(const SimPlan& plan,
                            const std::vector<bael::SimReport>& rows) {
  std::string doc = "# config: " + plan.echo.dump() + "\n";
  doc += bael::sim_csv_header(plan.model->num_arms());
  for (const auto& row : rows) doc += bael::sim_csv_row(row);
  return doc;
}

json render_rows_json(const SimPlan& plan,
                      const std::vector<bael::SimReport>& rows) {
  json results = json::array();
  for (const auto& row : rows) results.push_back(bael::sim_report_to_json(row));
  return json{{"config", plan.echo}, {"results", std::move(results)}};
}

int cmd_simulate(const Common& c) {
  const json cfg = load_config(c.config_path);
  const SimPlan plan = resolve_sim_plan(c, cfg);
  const auto rows = run_plan(plan);
  if (plan.format == "csv") {
    write_output(c.out, render_rows_csv(plan, rows));
  } else {
    write_output(c.out, render_rows_json(plan, rows).dump(2) + "\n");
  }
  if (c.out && !c.out->empty()) {
    std::cout << "wrote " << rows.size() << " rows to " << *c.out << "\n";
  }
  return 0;
}

int cmd_sweep(const Common& c) {
  const json cfg = load_config(c.config_path);
  const SimPlan plan = resolve_sim_plan(c, cfg);
  for (std::size_t i = 1; i < plan.horizons.size(); ++i) {
    if (plan.horizons[i] <= plan.horizons[i - 1]) {
      throw std::invalid_argument("T: sweep needs a strictly increasing grid");
    }
  }
  const auto rows = run_plan(plan);

  struct Slope {
    std::string design;
    bael::ExponentFit fit;
  };
  std::vector<Slope> slopes;
  const std::size_t per_design = plan.horizons.size();
  for (std::size_t d = 0; d < plan.designs.size(); ++d) {
    std::vector<std::pair<long long, double>> points;
    for (std::size_t i = 0; i < per_design; ++i) {
      const auto& row = rows[d * per_design + i];
      points.emplace_back(row.horizon, row.error_rate);
    }
    try {
      slopes.push_back(Slope{plan.designs[d].name, bael::empirical_exponent(points)});
    } catch (const std::invalid_argument& e) {
      std::cerr << "warning: slope omitted for " << plan.designs[d].name << ": "
                << e.what() << "\n";
    }
  }

  if (plan.format == "csv") {
    std::string doc = render_rows_csv(plan, rows);
    for (const auto& s : slopes) {
      doc += "# slope," + s.design + "," + bael::format_double(s.fit.slope) +
             "," + bael::format_double(s.fit.se) + "\n";
    }
    write_output(c.out, doc);
  } else {
    json doc = render_rows_json(plan, rows);
    doc["slopes"] = json::array();
    for (const auto& s : slopes) {
      doc["slopes"].push_back(json{
          {"design", s.design}, {"slope", s.fit.slope}, {"se", s.fit.se}});
    }
    write_output(c.out, doc.dump(2) + "\n");
  }
  if (c.out && !c.out->empty()) {
    std::cout << "wrote " << rows.size() << " rows and " << slopes.size()
              << " slopes to " << *c.out << "\n";
  }
  return 0;
}

int cmd_calibrate(const Common& c, const std::string& input_flag) {
  const json cfg = load_config(c.config_path);
  std::string input = input_flag;
  if (input.empty() && cfg.contains("input")) {
    input = as_string(cfg["input"], "input");
  }
  if (input.empty()) {
    throw std::invalid_argument("calibrate: no input file (--input or config)");
  }
  const auto arms = bael::load_arm_samples(input);
  std::map<std::string, bael::ZilnArm> fits;
  for (const auto& [label, samples] : arms) {
    fits.emplace(label, bael::fit_zero_inflated_lognormal(samples));
  }
  const std::string format = resolve_format(c, cfg, "json");
  if (format == "json") {
    write_output(c.out, bael::ziln_fits_to_json(fits).dump(2) + "\n");
  } else {
    std::string doc = "# input: " + input + "\n";
    doc += "arm,p_zero,meanlog,sdlog\n";
    for (const auto& [label, fit] : fits) {
      doc += label + "," + bael::format_double(fit.p_zero) + "," +
             bael::format_double(fit.meanlog) + "," +
             bael::format_double(fit.sdlog) + "\n";
    }
    write_output(c.out, doc);
  }
  if (c.out && !c.out->empty()) {
    std::cout << "fitted " << fits.size() << " arms from " << input << " to "
              << *c.out << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"batched arm elimination laboratory"};
  app.require_subcommand(1);

  Common exp_common;
  CLI::App* exp_cmd =
      app.add_subcommand("exponent", "exponent table for a design on an instance");
  add_common_flags(exp_cmd, exp_common);

  Common dom_common;
  DominanceFlags dom_flags;
  CLI::App* dom_cmd = app.add_subcommand(
      "check-dominance", "dominance certificate for a design (exit 0/1)");
  add_common_flags(dom_cmd, dom_common);
  dom_cmd->add_option("--crt", dom_flags.crt_k, "single-batch design with K arms");
  dom_cmd->add_option("--successive-rejects", dom_flags.sr_k,
                      "successive-rejects design with K arms");
  dom_cmd->add_option("--two-batch", dom_flags.two_batch,
                      "two-batch design: K S BETA_FIRST")
      ->expected(3);
  dom_cmd->add_option("--weights", dom_flags.weights_csv,
                      "explicit weights beta_K,...,beta_2 (must sum to 1)");

  Common sim_common;
  CLI::App* sim_cmd =
      app.add_subcommand("simulate", "Monte Carlo error/regret estimates");
  add_common_flags(sim_cmd, sim_common);

  Common sweep_common;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "simulate over a horizon grid plus fitted error slopes");
  add_common_flags(sweep_cmd, sweep_common);

  Common cal_common;
  std::string cal_input;
  CLI::App* cal_cmd = app.add_subcommand(
      "calibrate", "fit zero-inflated lognormal arms from an outcome CSV");
  add_common_flags(cal_cmd, cal_common);
  cal_cmd->add_option("--input", cal_input, "CSV with header arm,outcome");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (exp_cmd->parsed()) return cmd_exponent(exp_common);
    if (dom_cmd->parsed()) return cmd_check_dominance(dom_common, dom_flags);
    if (sim_cmd->parsed()) return cmd_simulate(sim_common);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_common);
    if (cal_cmd->parsed()) return cmd_calibrate(cal_common, cal_input);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
