#include "doctest.h"

#include <cmath>

#include "cmm/errors.hpp"
#include "cmm/model.hpp"
#include "cmm/presets.hpp"
#include "oracles.hpp"

using namespace cmm;
using oracle::Real;

TEST_CASE("thermal occupancy against 50-digit evaluation") {
  CHECK(thermal_occupancy(kTwoPi * 1e7, 0.0) == 0.0);
  CHECK(thermal_occupancy(1.0, 0.0) == 0.0);

  const double nb = thermal_occupancy(kTwoPi * 1e7, 0.01);
  const Real two_pi = 8 * boost::multiprecision::atan(Real(1));
  const double nb_ref = oracle::thermal_occupancy(two_pi * Real("1e7"), Real("0.01")).convert_to<double>();
  CHECK(nb == doctest::Approx(nb_ref).epsilon(1e-13));
  CHECK(nb == doctest::Approx(oracle::golden("thermal_occupancy_10MHz_10mK")).epsilon(1e-13));
  CHECK(nb == doctest::Approx(20.35).epsilon(1e-3));

  const double nc = thermal_occupancy(kTwoPi * 1e10, 0.01);
  CHECK(nc == doctest::Approx(oracle::golden("thermal_occupancy_10GHz_10mK")).epsilon(1e-11));
  CHECK(nc < 1e-20);
}

TEST_CASE("thermal occupancy domain and monotonicity") {
  CHECK_THROWS_AS(thermal_occupancy(0.0, 0.01), DomainError);
  CHECK_THROWS_AS(thermal_occupancy(-1.0, 0.01), DomainError);
  double prev = INFINITY;
  for (double w = 1e6; w < 1e11; w *= 1.7) {
    const double n = thermal_occupancy(w, 0.05);
    CHECK(n < prev);
    prev = n;
  }
  prev = 0.0;
  for (double T = 1e-3; T < 1.0; T *= 1.5) {
    const double n = thermal_occupancy(kTwoPi * 1e7, T);
    CHECK(n > prev);
    prev = n;
  }
}

TEST_CASE("cavity drive amplitude") {
  const double eps = cavity_drive_amplitude(8.9e-3, kTwoPi * 1e6, kTwoPi * 1e10);
  const Real two_pi = 8 * boost::multiprecision::atan(Real(1));
  const double ref = oracle::cavity_drive(Real("8.9e-3"), two_pi * Real("1e6"), two_pi * Real("1e10")).convert_to<double>();
  CHECK(eps == doctest::Approx(ref).epsilon(1e-13));
  CHECK(eps == doctest::Approx(oracle::golden("cavity_drive_8p9mW_1MHz_10GHz")).epsilon(1e-13));
  CHECK(eps == doctest::Approx(1.30e14).epsilon(5e-3));
  CHECK(cavity_drive_amplitude(4 * 8.9e-3, kTwoPi * 1e6, kTwoPi * 1e10) == doctest::Approx(2 * eps).epsilon(1e-14));
  CHECK_THROWS_AS(cavity_drive_amplitude(0.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(cavity_drive_amplitude(1.0, -1.0, 1.0), DomainError);
  CHECK_THROWS_AS(cavity_drive_amplitude(1.0, 1.0, 0.0), DomainError);
}

TEST_CASE("material-derived amplitudes") {
  const MaterialParams m = default_material();
  CHECK(m.volume() == doctest::Approx(oracle::golden("yig_volume")).epsilon(1e-14));
  CHECK(m.spin_number() == doctest::Approx(oracle::golden("yig_spin_number")).epsilon(1e-14));

  const double omega = magnon_drive_amplitude(m);
  const Real two_pi = 8 * boost::multiprecision::atan(Real(1));
  const double ref =
      oracle::magnon_rabi(two_pi * Real("28e9"), Real("4.22e27"), Real("250e-6"), Real("1.3e-4")).convert_to<double>();
  CHECK(omega == doctest::Approx(ref).epsilon(1e-13));
  CHECK(omega == doctest::Approx(oracle::golden("magnon_rabi_frequency")).epsilon(1e-13));

  MaterialParams twice = m;
  twice.H_d *= 2;
  CHECK(magnon_drive_amplitude(twice) == doctest::Approx(2 * omega).epsilon(1e-14));
  MaterialParams tiny = m;
  tiny.r_sphere = 1e-30;
  CHECK(magnon_drive_amplitude(tiny) < 1e-20);

  const double g = optomagnonic_coupling(m);
  CHECK(g == doctest::Approx(oracle::golden("optomagnonic_coupling_formula")).epsilon(1e-12));
  MaterialParams half_n = m;
  half_n.n_r /= 2;
  CHECK(optomagnonic_coupling(half_n) == doctest::Approx(2 * g).epsilon(1e-14));
  MaterialParams big = m;
  big.r_sphere = 1.0;
  CHECK(optomagnonic_coupling(big) < 1e-3 * g);

  MaterialParams bad = m;
  bad.rho_s = 0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("system parameter invariants") {
  SystemParams p = calibrated_params();
  CHECK_NOTHROW(p.validate());
  SystemParams q = p;
  q.phi = kTwoPi;
  CHECK_THROWS_AS(q.validate(), DomainError);
  q = p;
  q.kappa_1 = -1;
  CHECK_THROWS_AS(q.validate(), DomainError);
  q = p;
  q.T = -0.1;
  CHECK_THROWS_AS(q.validate(), DomainError);

  SUBCASE("absolute frequencies give the same detunings") {
    SystemParams base = listed_params();
    const double w0 = base.omega_m - base.delta_m0;
    const double wc = base.omega_c2 - base.delta_2;
    base.omega_c1 = w0 + base.delta_1;
    const SystemParams abs = base.with_absolute_frequencies(w0, wc);
    CHECK(abs.frequency_input == FrequencyInput::absolute);
    CHECK(abs.delta_1 == doctest::Approx(base.delta_1).epsilon(1e-6));
    CHECK(abs.delta_m0 == doctest::Approx(base.delta_m0).epsilon(1e-6));
    CHECK(abs.delta_2 == doctest::Approx(base.delta_2).epsilon(1e-6));
    CHECK(abs.laser_frequency() == doctest::Approx(base.laser_frequency()).epsilon(1e-15));
    CHECK_NOTHROW(abs.validate());
    SystemParams broken = abs;
    broken.delta_1 += 1e3;
    CHECK_THROWS_AS(broken.validate(), DomainError);
  }
}

TEST_CASE("bath occupancies") {
  SystemParams p = calibrated_params();
  p.T = 0.0;
  const BathOccupancy z = bath_occupancy(p);
  CHECK(z.n_b == 0.0);
  CHECK(z.n_m == 0.0);
  CHECK(z.n_1 == 0.0);
  CHECK(z.n_2 == 0.0);
  p.T = 0.01;
  p.bath_T.T_b = 0.0;
  const BathOccupancy o = bath_occupancy(p);
  CHECK(o.n_b == 0.0);
  CHECK(o.n_m > 0.0);
}
