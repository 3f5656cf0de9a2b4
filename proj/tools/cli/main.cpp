#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qei/causal.hpp"
#include "qei/energy_density.hpp"
#include "qei/errors.hpp"
#include "qei/fresnel.hpp"
#include "qei/negative_energy.hpp"
#include "qei/observer_norm.hpp"
#include "qei/qei_bounds.hpp"
#include "qei_verify/suites.hpp"
#include "run_config.hpp"

using nlohmann::ordered_json;
using namespace qei;
using cli::RunConfig;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kDegenerate = 3, kInapplicable = 4 };

struct Report {
  ordered_json result;
  ordered_json csv;  // flat row; falls back to the flattened result
};

template <class M>
ordered_json matrix_json(const M& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json r = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
    rows.push_back(r);
  }
  return rows;
}

template <class V>
ordered_json vector_json(const V& v) {
  ordered_json a = ordered_json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

void flatten(const ordered_json& j, const std::string& prefix, ordered_json& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "_" + std::to_string(i), out);
  } else {
    out[prefix] = j;
  }
}

std::string csv_cell(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void emit(const RunConfig& cfg, const std::string& command, const Report& rep) {
  std::ostringstream os;
  if (cfg.format == "csv") {
    ordered_json row = rep.csv;
    if (row.empty()) flatten(rep.result, "", row);
    bool first = true;
    for (auto it = row.begin(); it != row.end(); ++it, first = false) os << (first ? "" : ",") << it.key();
    os << "\n";
    first = true;
    for (auto it = row.begin(); it != row.end(); ++it, first = false) os << (first ? "" : ",") << csv_cell(it.value());
    os << "\n";
  } else {
    ordered_json doc;
    doc["command"] = command;
    nlohmann::json c = cfg;
    doc["config"] = ordered_json::parse(c.dump());
    doc["result"] = rep.result;
    os << doc.dump(2) << "\n";
  }
  if (cfg.out.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(cfg.out);
    if (!f) throw Error(ErrorCode::InvalidInput, "cannot write " + cfg.out);
    f << os.str();
  }
}

Report cmd_classify(const RunConfig& cfg, const std::string& vec, const std::string& covec) {
  if (vec.empty() == covec.empty()) throw Error(ErrorCode::InvalidInput, "give exactly one of --vector, --covector");
  const auto comps = cli::parse_components(vec.empty() ? covec : vec);
  if (!comps) throw Error(ErrorCode::InvalidInput, "expected four comma-separated components");
  const auto& c = *comps;
  const FresnelContext ctx = uniaxial_context(cfg.xi);
  const BiMetric& b = *ctx.factorization;
  const double tol = 1e-10;
  Report r;
  r.result["target"] = vec.empty() ? "covector" : "vector";
  r.result["components"] = {c[0], c[1], c[2], c[3]};
  if (!vec.empty()) {
    const Vec4 z(c[0], c[1], c[2], c[3]);
    r.result["class"] = std::string(to_string(classify_vector(ctx, z, tol)));
    r.result["quadratic_forms"] = {{"eta", b.eta(z, z)}, {"zeta", b.zeta(z, z)}};
  } else {
    const Covec4 k(c[0], c[1], c[2], c[3]);
    r.result["class"] = std::string(to_string(classify_covector(ctx, k, tol)));
    r.result["quadratic_forms"] = {{"eta", b.eta_inv(k, k)}, {"zeta", b.zeta_inv(k, k)}};
  }
  r.result["tolerance"] = tol;
  return r;
}

Report cmd_fresnel(const RunConfig& cfg, const std::string& covec) {
  const auto comps = cli::parse_components(covec);
  if (!comps) throw Error(ErrorCode::InvalidInput, "--covector expects four comma-separated components");
  const auto& c = *comps;
  const Covec4 k(c[0], c[1], c[2], c[3]);
  const FresnelContext ctx = uniaxial_context(cfg.xi);
  const BiMetric& b = *ctx.factorization;
  const double g = fresnel_eval(ctx, k);
  const double n = b.eta_inv(k, k), z = b.zeta_inv(k, k);
  Report r;
  r.result["covector"] = {c[0], c[1], c[2], c[3]};
  r.result["G"] = g;
  r.result["eta_inv_kk"] = n;
  r.result["zeta_inv_kk"] = z;
  r.result["factorization_residual"] = std::abs(g - n * z);
  r.result["in_hyperbolicity_cone"] = in_hyperbolicity_cone(ctx, k);
  r.result["class"] = std::string(to_string(classify_covector(ctx, k)));
  r.result["second_adjugate"] = matrix_json(second_adjugate_Q(ctx, k));
  return r;
}

Report cmd_swec(const RunConfig& cfg) {
  const SwecVerdict v = swec_check(cfg.xi, cfg.alpha, cfg.beta);
  const EnergyMatrices m = energy_matrices(cfg.xi, cfg.alpha, cfg.beta);
  Report r;
  r.result["holds"] = v.holds;
  r.result["boundary"] = v.boundary;
  r.result["closed_form_holds"] = v.closed_form_holds;
  r.result["sinh_alpha_sin_beta"] = std::sinh(cfg.alpha) * std::sin(cfg.beta);
  r.result["eig_X1"] = vector_json(v.eig_X1);
  r.result["eig_X2"] = vector_json(v.eig_X2);
  r.result["X1"] = matrix_json(m.X1);
  r.result["X2"] = matrix_json(m.X2);
  r.result["tolerance"] = v.tol;
  return r;
}

std::string_view norm_name(NormKind k) {
  switch (k) {
    case NormKind::SR: return "sr";
    case NormKind::UC: return "uc";
    case NormKind::Explicit: return "value";
  }
  return "sr";
}

Report cmd_qei_bound(const RunConfig& cfg) {
  const Normalization norm = cli::parse_norm(cfg.norm);
  const SmearingFunction g = cli::parse_smearing(cfg.g);
  const QEIBoundResult q = qei_bound(cfg.xi, cfg.alpha, cfg.beta, norm, g);
  Report r;
  r.result = {{"xi", q.xi},        {"alpha", q.alpha},  {"beta", q.beta},
              {"aleph", q.aleph},  {"C", q.C},          {"gpp_norm_sq", q.gpp_norm_sq},
              {"bound", q.bound},  {"normalization", std::string(norm_name(q.normalization.kind))}};
  r.csv = {{"xi", q.xi},       {"alpha", q.alpha}, {"beta", q.beta},         {"aleph", q.aleph},
           {"C", q.C},         {"gpp_norm_sq", q.gpp_norm_sq}, {"bound", q.bound}};
  return r;
}

Report cmd_normalization(const RunConfig& cfg) {
  const NormalizationResult num = aleph_uc(cfg.xi, cfg.alpha, cfg.beta, NormMode::Numeric);
  const NormalizationResult ser = aleph_uc(cfg.xi, cfg.alpha, cfg.beta, NormMode::Series);
  Report r;
  r.result["numeric"] = {{"aleph", num.aleph}, {"residual", num.residual}};
  r.result["series"] = {{"aleph", ser.aleph}};
  r.result["difference"] = num.aleph - ser.aleph;
  return r;
}

ordered_json field_json(const CField6& f) {
  static const char* names[] = {"F01", "F02", "F03", "F23", "F31", "F12"};
  ordered_json o;
  for (int i = 0; i < 6; ++i) o[names[i]] = {f(i).real(), f(i).imag()};
  return o;
}

Report cmd_counterexample(const RunConfig& cfg) {
  const WavePacketSpec spec{cfg.tau0, cfg.alpha, cfg.beta, cfg.xi};
  const CField6 fc = field_strength_origin(spec, FieldMethod::ClosedForm);
  const CField6 fq = field_strength_origin(spec, FieldMethod::Quadrature, cfg.nodes);
  const double rho = rho_origin(spec);
  const double s = std::sinh(cfg.alpha) * std::sin(cfg.beta);
  Report r;
  r.result["interluminal"] = cfg.xi * cfg.xi * s * s > 1.0;
  r.result["field_closed_form"] = field_json(fc);
  r.result["field_quadrature"] = field_json(fq);
  r.result["quadrature_rel_error"] = (fq - fc).cwiseAbs().maxCoeff() / fc.cwiseAbs().maxCoeff();
  r.result["rho_origin"] = rho;
  r.result["rho_origin_reference"] = rho_origin_reference(spec);
  r.result["negative"] = rho < 0.0;
  r.result["packet_norm_sq"] = packet_norm_sq(spec, cfg.nodes);
  return r;
}

int cmd_verify(const RunConfig& cfg) {
  if (!verify::is_known_suite(cfg.suite)) throw Error(ErrorCode::InvalidInput, "unknown suite " + cfg.suite);
  verify::Options opts;
  opts.counterexample_nodes = cfg.nodes;
  const auto checks = verify::run_suite(cfg.suite, opts);
  for (const auto& c : checks) std::cout << verify::format_line(c) << "\n";
  const bool ok = verify::all_passed(checks);
  std::cout << (ok ? "verify: all checks passed" : "verify: FAILED") << "\n";
  if (!cfg.out.empty()) {
    ordered_json doc;
    doc["suite"] = cfg.suite;
    doc["passed"] = ok;
    for (const auto& c : checks)
      doc["checks"].push_back({{"criterion", c.criterion}, {"name", c.name},         {"pass", c.pass},
                               {"residual", c.residual},   {"tolerance", c.tolerance}, {"seconds", c.seconds},
                               {"detail", c.detail}});
    std::ofstream(cfg.out) << doc.dump(2) << "\n";
  }
  return ok ? kOk : kVerifyFailed;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return kUsage;
    case ErrorCode::NotSubluminal:
    case ErrorCode::OnExtraordinaryCone: return kInapplicable;
    default: return kDegenerate;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum energy inequalities in premetric electrodynamics"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig flags;
  std::string config_path;
  auto* o_xi = app.add_option("--xi", flags.xi, "crystal parameter xi >= 0");
  auto* o_alpha = app.add_option("--alpha", flags.alpha, "rapidity");
  auto* o_beta = app.add_option("--beta", flags.beta, "angle to the optic axis (radians)");
  auto* o_norm = app.add_option("--norm", flags.norm, "sr | uc | <aleph>");
  auto* o_g = app.add_option("--g", flags.g, "gaussian:sigma=S[,center=C] | file:PATH");
  auto* o_nodes = app.add_option("--nodes", flags.nodes, "quadrature nodes per axis");
  auto* o_tau0 = app.add_option("--tau0", flags.tau0, "wave packet width");
  auto* o_out = app.add_option("--out", flags.out, "output path (default stdout)");
  auto* o_format = app.add_option("--format", flags.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--config", config_path, "JSON config file")->check(CLI::ExistingFile);

  std::string vec, covec;
  auto* classify = app.add_subcommand("classify", "classify a vector or covector");
  classify->add_option("--vector", vec, "a0,a1,a2,a3");
  classify->add_option("--covector", covec, "k0,k1,k2,k3");
  auto* fresnel = app.add_subcommand("fresnel", "Fresnel polynomial at a covector");
  fresnel->add_option("--covector", covec, "k0,k1,k2,k3")->required();
  auto* swec = app.add_subcommand("swec", "strong weak energy condition along (alpha, beta)");
  auto* qb = app.add_subcommand("qei-bound", "closed-form QEI bound");
  auto* norm = app.add_subcommand("normalization", "intrinsic normalization aleph");
  auto* counter = app.add_subcommand("counterexample", "interluminal wave packet diagnostics");
  auto* verify_cmd = app.add_subcommand("verify", "run the acceptance suites");
  auto* o_suite = verify_cmd->add_option("--suite", flags.suite,
                                         "all|fresnel|residues|appendix_a|swec|qei|counterexample|normalization");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    RunConfig cfg;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      cli::from_json(nlohmann::json::parse(in), cfg);
    }
    if (o_xi->count()) cfg.xi = flags.xi;
    if (o_alpha->count()) cfg.alpha = flags.alpha;
    if (o_beta->count()) cfg.beta = flags.beta;
    if (o_norm->count()) cfg.norm = flags.norm;
    if (o_g->count()) cfg.g = flags.g;
    if (o_nodes->count()) cfg.nodes = flags.nodes;
    if (o_tau0->count()) cfg.tau0 = flags.tau0;
    if (o_out->count()) cfg.out = flags.out;
    if (o_format->count()) cfg.format = flags.format;
    if (o_suite->count()) cfg.suite = flags.suite;
    cli::validate(cfg);

    if (*classify) emit(cfg, "classify", cmd_classify(cfg, vec, covec));
    if (*fresnel) emit(cfg, "fresnel", cmd_fresnel(cfg, covec));
    if (*swec) emit(cfg, "swec", cmd_swec(cfg));
    if (*qb) emit(cfg, "qei-bound", cmd_qei_bound(cfg));
    if (*norm) emit(cfg, "normalization", cmd_normalization(cfg));
    if (*counter) emit(cfg, "counterexample", cmd_counterexample(cfg));
    if (*verify_cmd) return cmd_verify(cfg);
    return kOk;
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error [config]: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDegenerate;
  }
}
