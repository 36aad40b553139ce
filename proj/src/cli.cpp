#include "cmm/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cmm/config.hpp"
#include "cmm/errors.hpp"
#include "cmm/pipeline.hpp"
#include "cmm/sweep.hpp"
#include "cmm/validate.hpp"

namespace cmm {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

struct Options {
  std::string config_path;
  std::string preset;
  std::string out_path;
  std::string save_config;
  int workers = -1;
  bool dump_matrices = false;
  bool verbose = false;
  double tolerance_scale = 0;
};

RunConfig resolve_config(const Options& o, bool required) {
  if (!o.config_path.empty() && !o.preset.empty()) {
    throw ConfigError("give either --config or --preset, not both");
  }
  if (!o.config_path.empty()) return load_config(o.config_path);
  if (!o.preset.empty()) return preset_config(o.preset);
  if (required) throw ConfigError("no configuration: pass --config <path> or --preset <name>");
  return RunConfig{};
}

json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}, {"abs", std::abs(z)}}; }

json steady_state_json(const SteadyState& ss, const SystemParams& p) {
  json j;
  j["m_s"] = complex_json(ss.m_s);
  j["c1_s"] = complex_json(ss.c1_s);
  j["c2_s"] = complex_json(ss.c2_s);
  j["q_s"] = ss.q_s;
  j["p_s"] = ss.p_s;
  j["delta_m_eff"] = ss.delta_m_eff;
  j["delta_m0"] = ss.delta_m0;
  j["iterations"] = ss.iterations;
  j["residual"] = ss.residual;
  j["alpha"] = std::sqrt(2.0) * ss.m_s.real();
  j["beta"] = std::sqrt(2.0) * ss.m_s.imag();
  j["G_eff"] = std::sqrt(2.0) * p.G_mb * std::abs(ss.m_s);
  return j;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path.string() + "' for writing");
  f << text;
  if (!f) throw IoError("failed writing '" + path.string() + "'");
}

std::string matrix_csv(const Mat8& A) {
  std::ostringstream os;
  os << "row";
  for (auto l : kQuadratureLabels) os << ',' << l;
  os << '\n';
  for (int i = 0; i < 8; ++i) {
    os << kQuadratureLabels[i];
    for (int j = 0; j < 8; ++j) os << ',' << format_double(A(i, j));
    os << '\n';
  }
  return os.str();
}

void dump_matrices(const Options& o, const DriftDiffusion& dd, std::ostream& out) {
  fs::path drift = "drift.csv";
  fs::path diffusion = "diffusion.csv";
  if (!o.out_path.empty()) {
    const fs::path base(o.out_path);
    const std::string stem = base.stem().string();
    drift = base.parent_path() / (stem + "_drift.csv");
    diffusion = base.parent_path() / (stem + "_diffusion.csv");
  }
  write_text(drift, matrix_csv(dd.M));
  write_text(diffusion, matrix_csv(dd.D));
  if (!o.out_path.empty()) out << "wrote " << drift.string() << " and " << diffusion.string() << '\n';
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty()) out << text;
  else write_text(o.out_path, text);
}

int cmd_steady_state(const Options& o, std::ostream& out) {
  const RunConfig cfg = resolve_config(o, true);
  const PipelineOptions popt = cfg.pipeline_options();
  const SteadyState ss = solve_steady_state(cfg.system, popt.steady_state);
  emit(o, steady_state_json(ss, cfg.system).dump(2) + "\n", out);
  if (o.dump_matrices) {
    dump_matrices(o, build_drift_diffusion(cfg.system, ss, bath_occupancy(cfg.system, popt.constants)), out);
  }
  return kExitOk;
}

int cmd_stability(const Options& o, std::ostream& out) {
  const RunConfig cfg = resolve_config(o, true);
  const PointDetail d = evaluate_detail(cfg.system, cfg.pipeline_options());
  json j;
  j["max_real_eig"] = d.stability.max_real_eig;
  j["max_real_eig_over_omega_b"] = d.stability.max_real_eig / cfg.system.omega_b;
  j["stable"] = d.stability.stable;
  j["marginal"] = d.stability.marginal;
  json ev = json::array();
  for (const Complex& z : d.stability.eigenvalues) ev.push_back({z.real(), z.imag()});
  j["eigenvalues"] = ev;
  j["steady_state"] = steady_state_json(d.steady_state, cfg.system);
  if (d.cm) {
    j["lyapunov_residual"] = lyapunov_residual(d.dd.M, d.dd.D, d.cm->V);
    json pairs = json::array();
    for (const Bipartition& b : cfg.pairs) {
      const PairReport r = analyze_pair(d.cm->V, b);
      const std::string u(mode_name(b.u)), v(mode_name(b.v));
      pairs.push_back({{"pair", bipartition_label(b)},
                       {"E_N", r.E_N},
                       {"nu_minus", r.nu_minus},
                       {"S_" + u + "_to_" + v, r.S_u_to_v},
                       {"S_" + v + "_to_" + u, r.S_v_to_u},
                       {"steering_class", std::string(steering_class_name(r.steering_class))}});
    }
    j["pairs"] = pairs;
  }
  emit(o, j.dump(2) + "\n", out);
  if (o.dump_matrices) dump_matrices(o, d.dd, out);
  return kExitOk;
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  RunConfig cfg = resolve_config(o, true);
  if (o.workers >= 0) cfg.workers = o.workers;
  if (!o.out_path.empty()) cfg.output = o.out_path;
  const SweepSpec spec = cfg.sweep_spec();
  if (!o.save_config.empty()) write_text(o.save_config, dump_config(cfg));

  const SweepResult result = run_sweep(spec, cfg.workers);
  Metadata md = cfg.metadata;
  md.emplace_back("grid", std::to_string(spec.axis1.count) +
                              (spec.axis2 ? " x " + std::to_string(spec.axis2->count) : std::string()));
  md.emplace_back("row order", spec.axis2 ? spec.axis2->name + " major, " + spec.axis1.name + " minor"
                                          : spec.axis1.name);
  md.emplace_back("units", "SI: rad/s for frequencies and rates, K, rad");

  std::ostringstream csv;
  write_csv(csv, result, md);
  std::ostream& summary_stream = cfg.output ? out : err;
  if (cfg.output) write_text(*cfg.output, csv.str());
  else out << csv.str();
  print_summary(summary_stream, summarize(result));
  return kExitOk;
}

int cmd_validate(const Options& o, std::ostream& out) {
  ValidateOptions vo;
  if (!o.config_path.empty() || !o.preset.empty()) {
    vo.tolerance_scale = resolve_config(o, false).tolerances.validate_scale;
  }
  if (o.tolerance_scale > 0) vo.tolerance_scale = o.tolerance_scale;
  const auto results = run_validation(vo);
  bool all = true;
  for (const PropertyResult& r : results) {
    all = all && r.passed;
    out << (r.passed ? "PASS " : "FAIL ") << r.name << "  worst=" << r.worst << " tol=" << r.tolerance;
    if (o.verbose) out << "  time=" << std::fixed << std::setprecision(3) << r.seconds << "s" << std::defaultfloat;
    out << '\n';
  }
  out << (all ? "all properties passed" : "validation FAILED") << '\n';
  return all ? kExitOk : kExitValidation;
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cavity magnomechanics correlations: steady state, stability, entanglement and steering sweeps"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool matrices) {
    sub->add_option("--config", o.config_path, "JSON configuration file");
    sub->add_option("--preset", o.preset, "built-in figure preset (fig2a ... fig7b, listed)");
    sub->add_option("--out", o.out_path, "output file (default: stdout)");
    if (matrices) sub->add_flag("--dump-matrices", o.dump_matrices, "also write drift and diffusion matrices as CSV");
  };
  CLI::App* ss = app.add_subcommand("steady-state", "solve the semiclassical steady state, print JSON");
  add_common(ss, true);
  CLI::App* st = app.add_subcommand("stability", "eigenvalues of the drift matrix and measures at one point");
  add_common(st, true);
  CLI::App* sw = app.add_subcommand("sweep", "evaluate a 1-D or 2-D grid, write CSV");
  add_common(sw, false);
  sw->add_option("--workers", o.workers, "worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
  sw->add_option("--save-config", o.save_config, "write the effective configuration as JSON");
  CLI::App* va = app.add_subcommand("validate", "run the built-in property suite");
  va->add_option("--config", o.config_path, "JSON configuration (tolerances.validate_scale)");
  va->add_flag("--verbose,-v", o.verbose, "per-property timing");
  va->add_option("--tolerance-scale", o.tolerance_scale, "multiply all pass thresholds")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostream& stream = e.get_exit_code() == 0 ? out : err;
    const int code = app.exit(e, stream, stream);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (ss->parsed()) return cmd_steady_state(o, out);
    if (st->parsed()) return cmd_stability(o, out);
    if (sw->parsed()) return cmd_sweep(o, out, err);
    if (va->parsed()) return cmd_validate(o, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DomainError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ConvergenceError& e) {
    err << "convergence error: " << e.what() << '\n';
    return kExitConvergence;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const UnstableError& e) {
    err << "unstable: " << e.what() << '\n';
    return kExitConvergence;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConvergence;
  }
  return kExitUsage;
}

}  // namespace cmm
