#include "run_config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "qei/errors.hpp"

namespace qei::cli {

namespace {

std::optional<double> parse_double(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

}  // namespace

void to_json(nlohmann::json& j, const RunConfig& c) {
  j = nlohmann::json{{"xi", c.xi},       {"alpha", c.alpha}, {"beta", c.beta},   {"norm", c.norm},
                     {"g", c.g},         {"nodes", c.nodes}, {"tau0", c.tau0},   {"format", c.format},
                     {"out", c.out},     {"suite", c.suite}};
}

void from_json(const nlohmann::json& j, RunConfig& c) {
  if (!j.is_object()) bad("config must be a JSON object");
  auto get = [&](const char* key, auto& field) {
    if (j.contains(key)) j.at(key).get_to(field);
  };
  get("xi", c.xi);
  get("alpha", c.alpha);
  get("beta", c.beta);
  get("norm", c.norm);
  get("g", c.g);
  get("nodes", c.nodes);
  get("tau0", c.tau0);
  get("format", c.format);
  get("out", c.out);
  get("suite", c.suite);
}

void validate(const RunConfig& c) {
  for (double v : {c.xi, c.alpha, c.beta, c.tau0})
    if (!std::isfinite(v)) bad("numeric fields must be finite");
  if (c.xi < 0.0) bad("xi must be >= 0");
  if (!(c.tau0 > 0.0)) bad("tau0 must be positive");
  if (c.nodes < 8) bad("nodes must be >= 8");
  if (c.format != "json" && c.format != "csv") bad("format must be json or csv");
  parse_norm(c.norm);
}

Normalization parse_norm(std::string_view s) {
  if (s == "sr") return {NormKind::SR, 1.0};
  if (s == "uc") return {NormKind::UC, 1.0};
  auto v = parse_double(s);
  if (!v || !(*v > 0.0)) bad("norm must be sr, uc or a positive number");
  return {NormKind::Explicit, *v};
}

SmearingFunction parse_smearing(std::string_view s) {
  if (s.starts_with("file:")) return load_smearing_csv(std::string(s.substr(5)));
  if (!s.starts_with("gaussian:")) bad("smearing must be gaussian:sigma=S or file:PATH");
  GaussianSmearing g;
  bool have_sigma = false;
  std::string_view rest = s.substr(9);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) bad("expected key=value in smearing spec");
    const auto key = item.substr(0, eq);
    const auto val = parse_double(item.substr(eq + 1));
    if (!val) bad("bad number in smearing spec");
    if (key == "sigma") {
      g.sigma = *val;
      have_sigma = true;
    } else if (key == "center") {
      g.center = *val;
    } else {
      bad("unknown smearing key");
    }
  }
  if (!have_sigma || !(g.sigma > 0.0)) bad("gaussian smearing needs sigma > 0");
  return g;
}

SampledSmearing load_smearing_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open smearing file " + path);
  std::vector<double> tau, val;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    const auto comma = line.find(',');
    auto t = comma == std::string::npos ? std::nullopt : parse_double(std::string_view(line).substr(0, comma));
    auto g = comma == std::string::npos ? std::nullopt : parse_double(std::string_view(line).substr(comma + 1));
    if (!t || !g) {
      if (lineno == 1 && tau.empty()) continue;  // header
      bad("malformed smearing row at line " + std::to_string(lineno));
    }
    tau.push_back(*t);
    val.push_back(*g);
  }
  if (tau.size() < 3) bad("smearing file needs at least 3 rows");
  const double h = tau[1] - tau[0];
  if (!(h > 0.0)) bad("smearing grid must be increasing");
  for (std::size_t i = 1; i < tau.size(); ++i)
    if (std::abs(tau[i] - tau[i - 1] - h) > 1e-6 * h)
      bad("smearing grid is not uniform");
  return SampledSmearing{tau[0], h, std::move(val)};
}

std::optional<std::array<double, 4>> parse_components(std::string_view s) {
  std::array<double, 4> out{};
  for (int i = 0; i < 4; ++i) {
    const auto comma = s.find(',');
    if ((i < 3) == (comma == std::string_view::npos)) return std::nullopt;
    auto v = parse_double(s.substr(0, comma));
    if (!v) return std::nullopt;
    out[i] = *v;
    s = i < 3 ? s.substr(comma + 1) : std::string_view{};
  }
  return out;
}

}  // namespace qei::cli
