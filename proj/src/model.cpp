#include "cmm/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cmm/errors.hpp"

namespace cmm {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

void require_nonneg(double value, const char* name) {
  require(std::isfinite(value) && value >= 0.0,
          std::string(name) + " must be finite and >= 0 (got " + std::to_string(value) + ")");
}

void require_positive(double value, const char* name) {
  require(std::isfinite(value) && value > 0.0,
          std::string(name) + " must be finite and > 0 (got " + std::to_string(value) + ")");
}

}  // namespace

void PhysicalConstants::validate() const {
  require_positive(hbar, "hbar");
  require_positive(k_B, "k_B");
  require_positive(c_light, "c_light");
}

double thermal_occupancy(double omega, double temperature, const PhysicalConstants& constants) {
  require_positive(omega, "omega");
  require_nonneg(temperature, "T");
  if (temperature == 0.0) return 0.0;
  const double x = constants.hbar * omega / (constants.k_B * temperature);
  return 1.0 / std::expm1(x);
}

double cavity_drive_amplitude(double power, double kappa, double omega_c,
                              const PhysicalConstants& constants) {
  require_positive(power, "power");
  require_positive(kappa, "kappa");
  require_positive(omega_c, "omega_c");
  return std::sqrt(2.0 * kappa * power / (constants.hbar * omega_c));
}

double MaterialParams::volume() const {
  return 4.0 / 3.0 * std::numbers::pi * r_sphere * r_sphere * r_sphere;
}

double MaterialParams::spin_number() const { return rho_s * volume(); }

void MaterialParams::validate() const {
  require_positive(rho_s, "rho_s");
  require_positive(r_sphere, "r_sphere");
  require_positive(n_r, "n_r");
  require_positive(verdet, "verdet");
  require_positive(gamma_G, "gamma_G");
  require_positive(H_d, "H_d");
  require_positive(power, "power");
}

double magnon_drive_amplitude(const MaterialParams& material) {
  return 1.25 * material.gamma_G * std::sqrt(material.spin_number()) * material.H_d;
}

double optomagnonic_coupling(const MaterialParams& material, const PhysicalConstants& constants) {
  return material.verdet * (constants.c_light / material.n_r) *
         std::sqrt(2.0 / material.spin_number());
}

double SystemParams::pfc_sin_term() const { return xi * std::sin(phi); }
double SystemParams::pfc_cos_term() const { return xi * std::cos(phi); }

SystemParams SystemParams::with_absolute_frequencies(double drive_0, double drive_c) const {
  SystemParams out = *this;
  out.omega_0 = drive_0;
  out.omega_c_drive = drive_c;
  out.delta_1 = omega_c1 - drive_0;
  out.delta_2 = omega_c2 - drive_c;
  out.delta_m0 = omega_m - drive_0;
  out.delta_m_pinned.reset();
  out.frequency_input = FrequencyInput::absolute;
  return out;
}

double SystemParams::laser_frequency() const {
  return frequency_input == FrequencyInput::absolute ? omega_c_drive : omega_c2 - delta_2;
}

void SystemParams::validate() const {
  require_positive(omega_b, "omega_b");
  require_nonneg(omega_c1, "omega_c1");
  require_nonneg(omega_c2, "omega_c2");
  require_nonneg(omega_m, "omega_m");
  require_nonneg(omega_0, "omega_0");
  require_nonneg(omega_c_drive, "omega_c_drive");
  require_nonneg(kappa_1, "kappa_1");
  require_nonneg(kappa_2, "kappa_2");
  require_nonneg(kappa_m, "kappa_m");
  require_nonneg(gamma_b, "gamma_b");
  require_nonneg(Gamma, "Gamma");
  require_nonneg(G_mb, "G_mb");
  require_nonneg(xi, "xi");
  require_nonneg(eps_m, "eps_m");
  require_nonneg(eps_c, "eps_c");
  require_nonneg(T, "T");
  for (const auto* t : {&bath_T.T_b, &bath_T.T_m, &bath_T.T_1, &bath_T.T_2}) {
    if (*t) require_nonneg(**t, "bath temperature");
  }
  require(std::isfinite(phi) && phi >= 0.0 && phi < kTwoPi, "phi must lie in [0, 2 pi)");
  require(std::isfinite(delta_1) && std::isfinite(delta_2) && std::isfinite(delta_m0),
          "detunings must be finite");
  if (delta_m_pinned) require(std::isfinite(*delta_m_pinned), "delta_m must be finite");

  if (frequency_input == FrequencyInput::absolute) {
    require(!delta_m_pinned, "absolute frequency input cannot pin the effective magnon detuning");
    const double scale = std::max({omega_c1, omega_c2, omega_m, omega_0, omega_c_drive, 1.0});
    const double tol = 1e-12 * scale;
    require(std::abs(delta_1 - (omega_c1 - omega_0)) <= tol &&
                std::abs(delta_2 - (omega_c2 - omega_c_drive)) <= tol &&
                std::abs(delta_m0 - (omega_m - omega_0)) <= tol,
            "detunings disagree with the absolute frequencies they were derived from");
  }
}

BathOccupancy bath_occupancy(const SystemParams& params, const PhysicalConstants& constants) {
  const auto occ = [&](double omega, const std::optional<double>& t) {
    const double temp = t.value_or(params.T);
    return temp == 0.0 ? 0.0 : thermal_occupancy(omega, temp, constants);
  };
  return {occ(params.omega_b, params.bath_T.T_b), occ(params.omega_m, params.bath_T.T_m),
          occ(params.omega_c1, params.bath_T.T_1), occ(params.omega_c2, params.bath_T.T_2)};
}

}  // namespace cmm
