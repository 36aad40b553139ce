#include "cmm/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cmm/errors.hpp"
#include "sweep_detail.hpp"

namespace cmm {

double Axis::value(int i) const {
  if (i == count - 1) return max;
  return min + (max - min) * static_cast<double>(i) / static_cast<double>(count - 1);
}

std::vector<double> Axis::values() const {
  std::vector<double> v(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) v[i] = value(i);
  return v;
}

const std::vector<std::string>& axis_whitelist() {
  static const std::vector<std::string> names = {"delta_1", "delta_2", "delta_m0", "delta_m", "xi",
                                                 "phi",     "Gamma",   "T",        "G_mb",    "eps_m"};
  return names;
}

bool is_frequency_axis(std::string_view name) { return name != "phi" && name != "T"; }

SystemParams apply_axis(const SystemParams& base, std::string_view name, double value) {
  SystemParams p = base;
  if (name == "delta_1" || name == "delta_2" || name == "delta_m0" || name == "delta_m") {
    p.frequency_input = FrequencyInput::detunings;
  }
  if (name == "delta_1") {
    p.delta_1 = value;
  } else if (name == "delta_2") {
    p.delta_2 = value;
  } else if (name == "delta_m0") {
    p.delta_m0 = value;
    p.delta_m_pinned.reset();
  } else if (name == "delta_m") {
    p.delta_m_pinned = value;
  } else if (name == "xi") {
    p.xi = value;
  } else if (name == "phi") {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double r = std::fmod(value, two_pi);
    if (r < 0.0) r += two_pi;
    if (r >= two_pi) r = 0.0;
    p.phi = r;
  } else if (name == "Gamma") {
    p.Gamma = value;
  } else if (name == "T") {
    p.T = value;
  } else if (name == "G_mb") {
    p.G_mb = value;
  } else if (name == "eps_m") {
    p.eps_m = value;
  } else {
    throw DomainError("unknown sweep axis '" + std::string(name) + "'");
  }
  return p;
}

void SweepSpec::validate() const {
  auto check = [](const Axis& a) {
    const auto& wl = axis_whitelist();
    if (std::find(wl.begin(), wl.end(), a.name) == wl.end()) {
      throw DomainError("unknown sweep axis '" + a.name + "'");
    }
    if (a.count < 2) throw DomainError("axis '" + a.name + "' needs count >= 2");
    if (!std::isfinite(a.min) || !std::isfinite(a.max)) throw DomainError("axis '" + a.name + "' has non-finite bounds");
  };
  check(axis1);
  if (axis2) {
    check(*axis2);
    if (axis2->name == axis1.name) throw DomainError("both sweep axes are '" + axis1.name + "'");
  }
  if (pairs.empty()) throw DomainError("sweep needs at least one bipartition");
}

std::size_t SweepSpec::size() const {
  return static_cast<std::size_t>(axis1.count) * static_cast<std::size_t>(axis2 ? axis2->count : 1);
}

namespace detail {

SweepResult prepare_sweep(const SweepSpec& spec) {
  spec.validate();
  SweepResult r;
  r.spec = spec;
  const std::size_t n = spec.size();
  r.x1.resize(n);
  r.x2.resize(n);
  r.points.resize(n);
  const std::size_t n1 = static_cast<std::size_t>(spec.axis1.count);
  for (std::size_t k = 0; k < n; ++k) {
    r.x1[k] = spec.axis1.value(static_cast<int>(k % n1));
    r.x2[k] = spec.axis2 ? spec.axis2->value(static_cast<int>(k / n1)) : 0.0;
  }
  return r;
}

PointResult evaluate_row(const SweepSpec& spec, double x1, double x2) {
  SystemParams p = apply_axis(spec.base, spec.axis1.name, x1);
  if (spec.axis2) p = apply_axis(p, spec.axis2->name, x2);
  return evaluate_point(p, spec.pairs, spec.options);
}

}  // namespace detail

SweepResult run_sweep(const SweepSpec& spec, int workers) {
  SweepResult r = detail::prepare_sweep(spec);
  const auto n = static_cast<std::ptrdiff_t>(r.points.size());
#ifdef _OPENMP
  const int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
#else
  (void)workers;
#endif
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    r.points[k] = detail::evaluate_row(r.spec, r.x1[k], r.x2[k]);
  }
  return r;
}

MeasureSelector MeasureSelector::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw DomainError("measure selector needs 'kind:pair', got '" + std::string(text) + "'");
  const std::string_view kind = text.substr(0, colon);
  const std::string_view rest = text.substr(colon + 1);
  MeasureSelector sel{};
  if (kind == "EN" || kind == "nu") {
    sel.kind = kind == "EN" ? Kind::log_negativity : Kind::nu_minus;
    sel.pair = parse_bipartition(rest);
  } else if (kind == "S") {
    sel.kind = Kind::steering;
    const auto arrow = rest.find("->");
    if (arrow == std::string_view::npos) throw DomainError("steering selector needs 'S:u->v'");
    sel.pair = {parse_mode(rest.substr(0, arrow)), parse_mode(rest.substr(arrow + 2))};
    if (sel.pair.u == sel.pair.v) throw DomainError("steering selector needs two distinct modes");
  } else {
    throw DomainError("unknown measure kind '" + std::string(kind) + "'");
  }
  return sel;
}

std::string MeasureSelector::label() const {
  switch (kind) {
    case Kind::log_negativity: return "EN:" + bipartition_label(pair);
    case Kind::nu_minus: return "nu:" + bipartition_label(pair);
    case Kind::steering: {
      const Mode from = reversed ? pair.v : pair.u;
      const Mode to = reversed ? pair.u : pair.v;
      return "S:" + std::string(mode_name(from)) + "->" + std::string(mode_name(to));
    }
  }
  return "?";
}

std::optional<double> measure_value(const PointResult& point, const MeasureSelector& sel) {
  if (!point.ok()) return std::nullopt;
  for (const PairReport& r : point.pairs) {
    const bool same = r.pair == sel.pair;
    const bool swapped = r.pair.u == sel.pair.v && r.pair.v == sel.pair.u;
    if (!same && !swapped) continue;
    switch (sel.kind) {
      case MeasureSelector::Kind::log_negativity: return r.E_N;
      case MeasureSelector::Kind::nu_minus: return r.nu_minus;
      case MeasureSelector::Kind::steering: {
        // direction pair.u -> pair.v of the selector, flipped by `reversed`
        const bool forward = same != sel.reversed;
        return forward ? r.S_u_to_v : r.S_v_to_u;
      }
    }
  }
  return std::nullopt;
}

std::vector<std::optional<double>> measure_series(const SweepResult& result, const MeasureSelector& sel) {
  std::vector<std::optional<double>> out;
  out.reserve(result.points.size());
  for (const PointResult& p : result.points) out.push_back(measure_value(p, sel));
  return out;
}

std::vector<double> detect_crossovers(const SweepResult& result, const MeasureSelector& a,
                                      const MeasureSelector& b) {
  if (result.spec.axis2) throw DomainError("crossover detection needs a 1-D sweep");
  const auto sa = measure_series(result, a);
  const auto sb = measure_series(result, b);
  std::vector<double> out;
  std::optional<std::size_t> last;  // last point with a nonzero difference
  double last_d = 0.0;
  for (std::size_t k = 0; k < sa.size(); ++k) {
    if (!sa[k] || !sb[k]) continue;
    const double d = *sa[k] - *sb[k];
    if (d == 0.0) continue;
    if (last && (d > 0.0) != (last_d > 0.0)) {
      const double x0 = result.x1[*last];
      const double x1 = result.x1[k];
      out.push_back(x0 + last_d / (last_d - d) * (x1 - x0));
    }
    last = k;
    last_d = d;
  }
  return out;
}

Peak find_peak(const SweepResult& result, const MeasureSelector& sel) {
  if (result.spec.axis2) throw DomainError("peak detection needs a 1-D sweep");
  Peak best;
  const auto s = measure_series(result, sel);
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] && *s[k] > best.value) {
      best.value = *s[k];
      best.x = result.x1[k];
      best.index = static_cast<int>(k);
    }
  }
  return best;
}

}  // namespace cmm
