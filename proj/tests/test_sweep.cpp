#include "doctest.h"

#include <cmath>
#include <sstream>

#include "cmm/errors.hpp"
#include "cmm/presets.hpp"
#include "cmm/sweep.hpp"

using namespace cmm;

namespace {

constexpr double wb = kTwoPi * 1e7;

SweepSpec small_grid() {
  SweepSpec s;
  s.base = calibrated_params();
  s.axis1 = {"delta_1", -2 * wb, 2 * wb, 3};
  s.axis2 = Axis{"delta_m", -2 * wb, 2 * wb, 3};
  return s;
}

std::string csv_of(const SweepResult& r) {
  std::ostringstream os;
  write_csv(os, r, {{"note", "x"}});
  return os.str();
}

}  // namespace

TEST_CASE("axis grid is closed and uniform") {
  const Axis a{"xi", 0.0, 1.0, 5};
  const auto v = a.values();
  CHECK(v.size() == 5);
  CHECK(v.front() == 0.0);
  CHECK(v.back() == 1.0);
  CHECK(v[2] == 0.5);
  const Axis b{"xi", -0.3, 0.7, 11};
  CHECK(b.value(10) == 0.7);
}

TEST_CASE("3x3 grid row order") {
  const SweepResult r = run_sweep(small_grid(), 2);
  REQUIRE(r.points.size() == 9);
  for (std::size_t k = 0; k < 9; ++k) {
    CHECK(r.x1[k] == small_grid().axis1.value(static_cast<int>(k % 3)));
    CHECK(r.x2[k] == small_grid().axis2->value(static_cast<int>(k / 3)));
  }
}

TEST_CASE("serial and parallel sweeps are identical") {
  SweepSpec s = small_grid();
  s.axis1.count = 17;
  s.axis2->count = 13;
  const std::string ref = csv_of(run_sweep_serial(s));
  CHECK(csv_of(run_sweep(s, 1)) == ref);
  CHECK(csv_of(run_sweep(s, 3)) == ref);
  CHECK(csv_of(run_sweep(s, 0)) == ref);
}

TEST_CASE("unstable points carry no measures") {
  SweepSpec s = small_grid();
  s.axis1.count = 21;
  s.axis2->count = 21;
  const SweepResult r = run_sweep(s);
  int unstable = 0;
  for (const PointResult& p : r.points) {
    if (p.has_stability && p.stability.max_real_eig >= 0) {
      ++unstable;
      CHECK(p.status == PointStatus::unstable);
      CHECK(p.pairs.empty());
    }
  }
  CHECK(unstable > 0);
  std::istringstream in(csv_of(r));
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.rfind("#", 0) == 0) continue;
    ++rows;
    CHECK(line.find("nan") == std::string::npos);
    if (line.find(",unstable,") != std::string::npos) CHECK(line.find(",,,,,") != std::string::npos);
  }
  CHECK(rows == 21 * 21 + 1);
}

TEST_CASE("csv layout and round-trip precision") {
  SweepSpec s;
  s.base = calibrated_params();
  s.axis1 = {"xi", 0.0, 0.7 * wb, 4};
  const SweepResult r = run_sweep(s);
  std::istringstream in(csv_of(r));
  std::string line;
  std::getline(in, line);
  CHECK(line == "# note: x");
  std::getline(in, line);
  CHECK(line.rfind("xi,status,stable,max_real_eig,delta_m_eff,abs_m_s,EN_c2-c1,nu_minus_c2-c1,S_c2_to_c1,S_c1_to_c2,class_c2-c1", 0) == 0);
  std::getline(in, line);
  std::getline(in, line);
  const std::string first = line.substr(0, line.find(','));
  CHECK(std::stod(first) == r.x1[1]);
  // shortest round-trip formatting
  for (double v : {0.1, 1.0 / 3.0, 6.283185307179586e7, -2.5e-300, 1e22}) CHECK(std::stod(format_double(v)) == v);
}

TEST_CASE("axis whitelist and spec validation") {
  SweepSpec s = small_grid();
  s.axis1.name = "omega_b";
  CHECK_THROWS_AS(s.validate(), DomainError);
  s = small_grid();
  s.axis1.count = 1;
  CHECK_THROWS_AS(s.validate(), DomainError);
  s = small_grid();
  s.axis2->name = "delta_1";
  CHECK_THROWS_AS(s.validate(), DomainError);

  const SystemParams p = calibrated_params();
  CHECK(apply_axis(p, "phi", kTwoPi).phi == 0.0);
  CHECK(apply_axis(p, "phi", -1.0).phi == doctest::Approx(kTwoPi - 1.0));
  CHECK_FALSE(apply_axis(p, "delta_m0", wb).delta_m_pinned);
  CHECK(*apply_axis(p, "delta_m", 0.5 * wb).delta_m_pinned == 0.5 * wb);
  CHECK(apply_axis(p, "T", 0.2).T == 0.2);
}

TEST_CASE("selectors") {
  const MeasureSelector a = MeasureSelector::parse("EN:c2-m");
  CHECK(a.kind == MeasureSelector::Kind::log_negativity);
  CHECK(a.label() == "EN:c2-m");
  const MeasureSelector b = MeasureSelector::parse("S:m->c2");
  CHECK(b.kind == MeasureSelector::Kind::steering);
  CHECK(b.label() == "S:m->c2");
  CHECK_THROWS_AS(MeasureSelector::parse("EN:c2-c2"), DomainError);
  CHECK_THROWS_AS(MeasureSelector::parse("Q:c2-m"), DomainError);
  CHECK_THROWS_AS(MeasureSelector::parse("S:m-c2"), DomainError);

  // S:m->c2 on a stored (c2, m) pair reads S_v_to_u
  PointResult p;
  p.status = PointStatus::ok;
  PairReport r;
  r.pair = {Mode::c2, Mode::m};
  r.S_u_to_v = 0.1;
  r.S_v_to_u = 0.7;
  p.pairs = {r};
  CHECK(*measure_value(p, b) == 0.7);
  CHECK(*measure_value(p, MeasureSelector::parse("S:c2->m")) == 0.1);
  CHECK_FALSE(measure_value(p, MeasureSelector::parse("EN:c2-b")));
}

namespace {

// 1-D result with two synthetic entanglement columns.
SweepResult synthetic(const std::vector<double>& ya, const std::vector<double>& yb) {
  SweepResult r;
  r.spec.axis1 = {"xi", 0.0, 1.0, static_cast<int>(ya.size())};
  r.spec.pairs = {{Mode::c2, Mode::m}, {Mode::c2, Mode::b}};
  for (std::size_t k = 0; k < ya.size(); ++k) {
    r.x1.push_back(r.spec.axis1.value(static_cast<int>(k)));
    r.x2.push_back(0.0);
    PointResult p;
    p.status = PointStatus::ok;
    PairReport a, b;
    a.pair = r.spec.pairs[0];
    a.E_N = ya[k];
    b.pair = r.spec.pairs[1];
    b.E_N = yb[k];
    p.pairs = {a, b};
    r.points.push_back(p);
  }
  return r;
}

}  // namespace

TEST_CASE("crossovers and peaks") {
  const int n = 11;
  std::vector<double> up(n), down(n), zero(n, 0.0);
  for (int i = 0; i < n; ++i) {
    up[i] = 0.1 * i;
    down[i] = 1.0 - 0.1 * i;
  }
  const auto a = MeasureSelector::parse("EN:c2-m");
  const auto b = MeasureSelector::parse("EN:c2-b");
  const auto x = detect_crossovers(synthetic(up, down), a, b);
  REQUIRE(x.size() == 1);
  CHECK(std::abs(x[0] - 0.5) <= 0.1);
  CHECK(detect_crossovers(synthetic(zero, zero), a, b).empty());

  std::vector<double> bump(n);
  for (int i = 0; i < n; ++i) bump[i] = std::exp(-std::pow(0.1 * i - 0.3, 2) / 0.02);
  const Peak pk = find_peak(synthetic(bump, zero), a);
  CHECK(pk.x == doctest::Approx(0.3));
  CHECK(find_peak(synthetic(zero, zero), a).index == -1);

  SweepResult two_d = synthetic(up, down);
  two_d.spec.axis2 = Axis{"T", 0.0, 1.0, 2};
  CHECK_THROWS_AS(detect_crossovers(two_d, a, b), DomainError);
}

TEST_CASE("failed points do not abort the grid") {
  SweepSpec s;
  s.base = calibrated_params();
  s.base.delta_m_pinned.reset();
  s.base.G_mb *= 50;
  s.options.steady_state.max_iter = 5;
  s.axis1 = {"delta_m0", -0.5 * wb, 0.5 * wb, 5};
  const SweepResult r = run_sweep(s);
  CHECK(r.points.size() == 5);
  const SweepSummary sum = summarize(r);
  CHECK(sum.points == 5);
  std::ostringstream os;
  print_summary(os, sum);
  CHECK(os.str().find("stable fraction") != std::string::npos);
}
