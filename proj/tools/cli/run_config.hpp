#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qei/qei_bounds.hpp"

namespace qei::cli {

struct RunConfig {
  double xi = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  std::string norm = "sr";                 // sr | uc | <float>
  std::string g = "gaussian:sigma=1";      // gaussian:sigma=S[,center=C] | file:PATH
  int nodes = 48;
  double tau0 = 1.0;
  std::string format = "json";             // json | csv
  std::string out;
  std::string suite = "all";

  bool operator==(const RunConfig&) const = default;
};

void to_json(nlohmann::json& j, const RunConfig& c);
// missing keys keep the values already in c
void from_json(const nlohmann::json& j, RunConfig& c);

// InvalidInput on a malformed or non-finite field
void validate(const RunConfig& c);

Normalization parse_norm(std::string_view s);
SmearingFunction parse_smearing(std::string_view s);
// two columns (tau, g), optional header line, uniform spacing to 1e-6 relative
SampledSmearing load_smearing_csv(const std::string& path);

std::optional<std::array<double, 4>> parse_components(std::string_view s);

}  // namespace qei::cli
