#include "cmm/presets.hpp"

#include <numbers>

#include "cmm/errors.hpp"

namespace cmm {

namespace {

constexpr double kOmegaB = kTwoPi * 10e6;

Axis axis(std::string name, double lo, double hi, int count) { return Axis{std::move(name), lo, hi, count}; }

Axis wb_axis(std::string name, double lo, double hi, int count) {
  return axis(std::move(name), lo * kOmegaB, hi * kOmegaB, count);
}

Metadata common_notes() {
  return {
      {"gamma_b", "2pi x 100 Hz (the listed 100 MHz exceeds omega_b and is not used for figures)"},
      {"kappa_m", "2pi x 0.6 MHz (not given; calibrated)"},
      {"G_mb", "2pi x 0.015 Hz (not given; calibrated so that E_c2-b sets in near xi = 0.2 omega_b)"},
      {"eps_m", "Rabi frequency (5/4) gamma_G sqrt(N) H_d of the listed YIG sphere"},
      {"delta_m", "effective magnon detuning held fixed; delta_m0 absorbs the magnomechanical shift"},
      {"T", "10 mK unless swept (base temperature not stated for this figure)"},
  };
}

}  // namespace

MaterialParams default_material() {
  MaterialParams m;
  m.rho_s = 4.22e27;
  m.r_sphere = 250e-6;
  m.n_r = 2.19;
  m.verdet = 418.879;  // 240 deg/cm
  m.gamma_G = kTwoPi * 28e9;
  m.H_d = 1.3e-4;
  m.power = 8.9e-3;
  return m;
}

SystemParams listed_params() {
  SystemParams p;
  p.omega_b = kOmegaB;
  p.omega_c1 = p.omega_c2 = kTwoPi * 10e9;
  p.omega_m = kTwoPi * 10e9;
  p.delta_1 = -kOmegaB;
  p.delta_2 = -kOmegaB;
  p.delta_m0 = kOmegaB;
  p.kappa_1 = p.kappa_2 = kTwoPi * 1e6;
  p.kappa_m = kTwoPi * 0.6e6;
  p.gamma_b = kTwoPi * 100e6;
  p.Gamma = kTwoPi * 3.2e6;
  p.G_mb = 0.0;
  p.xi = 0.0;
  p.phi = 0.0;
  p.T = 0.01;
  const MaterialParams mat = default_material();
  p.eps_m = magnon_drive_amplitude(mat);
  p.eps_c = cavity_drive_amplitude(mat.power, p.kappa_2, p.laser_frequency());
  return p;
}

SystemParams calibrated_params() {
  SystemParams p = listed_params();
  p.gamma_b = kTwoPi * 100.0;
  p.G_mb = kTwoPi * 0.015;
  p.delta_m_pinned = kOmegaB;
  p.xi = 0.3 * kOmegaB;
  return p;
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"fig2a", "fig2d", "fig3a", "fig3d", "fig3e", "fig4",  "fig5",
                                                 "fig6a", "fig6b", "fig6c", "fig7a", "fig7b", "listed"};
  return names;
}

Preset make_preset(const std::string& name) {
  Preset p;
  p.name = name;
  p.base = calibrated_params();
  p.pairs = default_pairs();
  p.notes = common_notes();
  const std::vector<Bipartition> steering_pairs = {{Mode::m, Mode::c2}, {Mode::b, Mode::c2}};

  if (name == "fig2a") {
    p.description = "E_N vs Delta_1 and Delta_m; Delta_2 = -omega_b, xi = 0.3 omega_b, phi = 0";
    p.axis1 = wb_axis("delta_1", -2, 2, 101);
    p.axis2 = wb_axis("delta_m", -2, 2, 101);
  } else if (name == "fig2d") {
    p.description = "E_N vs Delta_1 and Delta_2; Delta_m = omega_b, xi = 0.3 omega_b, phi = 0";
    p.axis1 = wb_axis("delta_1", -2, 2, 101);
    p.axis2 = wb_axis("delta_2", -2, 2, 101);
  } else if (name == "fig3a") {
    p.description = "E_N vs Delta_1 for several xi; Delta_2 = -omega_b, Delta_m = omega_b";
    p.axis1 = wb_axis("delta_1", -2, 2, 201);
    p.axis2 = wb_axis("xi", 0.1, 0.5, 5);
  } else if (name == "fig3d") {
    p.description = "E_N vs xi; Delta_1 = Delta_2 = -omega_b, Delta_m = omega_b, Gamma = 0.32 omega_b";
    p.axis1 = wb_axis("xi", 0, 1, 201);
  } else if (name == "fig3e") {
    p.description = "E_N vs Gamma; Delta_1 = Delta_2 = -omega_b, Delta_m = omega_b, xi = 0.35 omega_b";
    p.base.xi = 0.35 * kOmegaB;
    p.axis1 = wb_axis("Gamma", 0, 1, 201);
  } else if (name == "fig4") {
    p.description = "E_N vs Delta_1 for phi = 0, pi/2, pi";
    p.axis1 = wb_axis("delta_1", -2, 2, 201);
    p.axis2 = axis("phi", 0.0, std::numbers::pi, 3);
  } else if (name == "fig5") {
    p.description = "E_N vs xi and T; optimal detunings, phi = 0";
    p.axis1 = wb_axis("xi", 0, 1, 101);
    p.axis2 = axis("T", 0.0, 0.4, 101);
    p.notes.back() = {"T", "swept 0 to 0.4 K"};
  } else if (name == "fig6a") {
    p.description = "steering m/c2 vs Delta_1; Delta_2 = -omega_b, Delta_m = omega_b";
    p.axis1 = wb_axis("delta_1", -2, 2, 201);
    p.pairs = {steering_pairs[0]};
  } else if (name == "fig6b") {
    p.description = "steering b/c2 vs Delta_1; Delta_2 = -omega_b, Delta_m = omega_b";
    p.axis1 = wb_axis("delta_1", -2, 2, 201);
    p.pairs = {steering_pairs[1]};
  } else if (name == "fig6c") {
    p.description = "steering m/c2 and b/c2 vs xi; Delta_1 = Delta_2 = -omega_b, Delta_m = omega_b";
    p.axis1 = wb_axis("xi", 0, 1, 201);
    p.pairs = steering_pairs;
  } else if (name == "fig7a") {
    p.description = "max Re eig(M) vs Delta_1 and Delta_m; Delta_2 = -omega_b";
    p.axis1 = wb_axis("delta_1", -2, 2, 101);
    p.axis2 = wb_axis("delta_m", -2, 2, 101);
  } else if (name == "fig7b") {
    p.description = "max Re eig(M) vs Delta_1 and Delta_2; Delta_m = omega_b";
    p.axis1 = wb_axis("delta_1", -2, 2, 101);
    p.axis2 = wb_axis("delta_2", -2, 2, 101);
  } else if (name == "listed") {
    p.description = "listed parameters taken literally (gamma_b = 2pi x 100 MHz), calibrated G_mb, xi sweep";
    p.base = listed_params();
    p.base.G_mb = kTwoPi * 0.015;
    p.base.delta_m_pinned = kOmegaB;
    p.axis1 = wb_axis("xi", 0, 1, 201);
    p.notes = {{"gamma_b", "2pi x 100 MHz as listed"}, common_notes()[1], common_notes()[2], common_notes()[3],
               common_notes()[4], common_notes()[5]};
  } else {
    throw ConfigError("unknown preset '" + name + "'");
  }
  p.notes.insert(p.notes.begin(), {"preset", name + ": " + p.description});
  return p;
}

}  // namespace cmm
