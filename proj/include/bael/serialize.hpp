#pragma once

#include <map>
#include <string>

#include "json.hpp"

#include "bael/calibrate.hpp"
#include "bael/design.hpp"
#include "bael/exponent.hpp"
#include "bael/simulate.hpp"

namespace bael {

// Shortest decimal rendering that round-trips the double exactly;
// locale-independent, so emitted files are byte-stable.
std::string format_double(double v);

// Design serialization: {"k": int, "weights": [beta_k ... beta_2],
// "name": string}.
nlohmann::json design_to_json(const DesignSpec& design);
DesignSpec design_from_json(const nlohmann::json& j);

// Report objects carry their own keys; the caller may attach a "config"
// member for provenance before writing.
nlohmann::json exponent_report_to_json(const ExponentReport& report);
// Stage table with columns n,w,gamma,product; the scalar summary rides in
// trailing comment lines.
std::string exponent_report_to_csv(const ExponentReport& report);

nlohmann::json sim_report_to_json(const SimReport& report);
std::string sim_csv_header(int k);
std::string sim_csv_row(const SimReport& report);

// Calibration output: {"<arm>": {"p_zero": ..., "meanlog": ..., "sdlog": ...}}.
nlohmann::json ziln_fits_to_json(const std::map<std::string, ZilnArm>& fits);

}  // namespace bael
