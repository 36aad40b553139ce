#include "cmm/steady_state.hpp"

#include <cmath>

namespace cmm {

namespace {

constexpr Complex kI{0.0, 1.0};

Complex converter_phase(const SystemParams& p) { return std::polar(1.0, p.phi); }

// (kappa_2 + i delta_2)(kappa_1 + i delta_1) + xi^2, the determinant of the
// cavity subsystem.
Complex cavity_determinant(const SystemParams& p) {
  return Complex(p.kappa_2, p.delta_2) * Complex(p.kappa_1, p.delta_1) + p.xi * p.xi;
}

SteadyState assemble(const SystemParams& p, double delta_m) {
  SteadyState ss;
  ss.m_s = magnon_amplitude(p, delta_m);
  std::tie(ss.c1_s, ss.c2_s) = cavity_amplitudes(p, ss.m_s);
  ss.q_s = -(p.G_mb / p.omega_b) * std::norm(ss.m_s);
  ss.p_s = 0.0;
  return ss;
}

}  // namespace

Complex magnon_amplitude(const SystemParams& p, double delta_m) {
  const Complex theta = cavity_determinant(p);
  const Complex num = p.eps_m * theta - p.Gamma * p.xi * converter_phase(p) * p.eps_c;
  const Complex den = theta * Complex(p.kappa_m, delta_m) + p.Gamma * p.Gamma * Complex(p.kappa_2, p.delta_2);
  if (den == Complex{}) throw SingularityError("magnon amplitude denominator vanishes");
  return num / den;
}

std::pair<Complex, Complex> cavity_amplitudes(const SystemParams& p, Complex m_s) {
  const Complex a11(p.kappa_1, p.delta_1);
  const Complex a12 = kI * p.xi * converter_phase(p);
  const Complex a21 = kI * p.xi * std::conj(converter_phase(p));
  const Complex a22(p.kappa_2, p.delta_2);
  const Complex rhs1 = -kI * p.Gamma * m_s;
  const Complex rhs2 = p.eps_c;
  const Complex det = a11 * a22 - a12 * a21;
  if (det == Complex{}) throw SingularityError("cavity subsystem is singular");
  return {(rhs1 * a22 - a12 * rhs2) / det, (a11 * rhs2 - a21 * rhs1) / det};
}

SteadyState solve_steady_state(const SystemParams& p, const SteadyStateOptions& options) {
  if (!(options.tol > 0.0)) throw DomainError("steady-state tolerance must be > 0");
  if (options.max_iter < 1) throw DomainError("max_iter must be >= 1");

  if (p.delta_m_pinned) {
    SteadyState ss = assemble(p, *p.delta_m_pinned);
    ss.delta_m_eff = *p.delta_m_pinned;
    ss.delta_m0 = ss.delta_m_eff - p.G_mb * ss.q_s;
    ss.iterations = 1;
    ss.residual = 0.0;
    return ss;
  }

  double delta = p.delta_m0;
  double previous_update = 0.0;
  bool damped = false;
  SteadyState ss;
  for (int k = 1; k <= options.max_iter; ++k) {
    ss = assemble(p, delta);
    const double mapped = p.delta_m0 + p.G_mb * ss.q_s;
    const double update = mapped - delta;
    ss.delta_m_eff = delta;
    ss.delta_m0 = p.delta_m0;
    ss.iterations = k;
    ss.residual = std::abs(update) / p.omega_b;
    if (!std::isfinite(update)) {
      throw ConvergenceError("steady-state iteration diverged", ss);
    }
    if (std::abs(update) <= options.tol * p.omega_b) {
      ss = assemble(p, mapped);
      ss.delta_m_eff = p.delta_m0 + p.G_mb * ss.q_s;
      ss.delta_m0 = p.delta_m0;
      ss.iterations = k;
      ss.residual = std::abs(update) / p.omega_b;
      return ss;
    }
    if (!damped && k > 1 && update * previous_update < 0.0 &&
        std::abs(update) >= 0.5 * std::abs(previous_update)) {
      damped = true;
    }
    delta += damped ? 0.5 * update : update;
    previous_update = update;
  }
  throw ConvergenceError("steady state did not converge in " + std::to_string(options.max_iter) +
                             " iterations (bistable or runaway drive?)",
                         ss);
}

Complex simplified_magnon_amplitude(const SystemParams& p) {
  const double delta_m = p.delta_m_pinned.value_or(p.delta_m0);
  const Complex theta = (kI * p.delta_2) * (kI * p.delta_1) + p.xi * p.xi;
  const Complex num = theta * p.eps_m - p.Gamma * p.xi * converter_phase(p) * p.eps_c;
  const Complex den = theta * (kI * delta_m) + p.Gamma * p.Gamma * (kI * p.delta_2);
  if (den == Complex{}) throw SingularityError("simplified magnon amplitude has a pole here");
  return num / den;
}

}  // namespace cmm
