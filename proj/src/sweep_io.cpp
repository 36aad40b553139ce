#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>

#include "cmm/sweep.hpp"

namespace cmm {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

std::string direction_label(Mode from, Mode to) {
  return "S_" + std::string(mode_name(from)) + "_to_" + std::string(mode_name(to));
}

}  // namespace

void write_csv(std::ostream& os, const SweepResult& result, const Metadata& metadata) {
  for (const auto& [key, value] : metadata) os << "# " << key << ": " << value << '\n';

  const SweepSpec& spec = result.spec;
  os << spec.axis1.name;
  if (spec.axis2) os << ',' << spec.axis2->name;
  os << ",status,stable,max_real_eig,delta_m_eff,abs_m_s";
  for (const Bipartition& pair : spec.pairs) {
    const std::string l = bipartition_label(pair);
    os << ",EN_" << l << ",nu_minus_" << l << ',' << direction_label(pair.u, pair.v) << ','
       << direction_label(pair.v, pair.u) << ",class_" << l;
  }
  os << '\n';

  for (std::size_t k = 0; k < result.points.size(); ++k) {
    const PointResult& p = result.points[k];
    os << format_double(result.x1[k]);
    if (spec.axis2) os << ',' << format_double(result.x2[k]);
    os << ',' << point_status_name(p.status) << ',';
    if (p.has_stability) os << (p.stability.stable ? 1 : 0) << ',' << format_double(p.stability.max_real_eig);
    else os << ',';
    os << ',';
    if (p.has_steady_state) {
      os << format_double(p.steady_state.delta_m_eff) << ',' << format_double(std::abs(p.steady_state.m_s));
    } else {
      os << ',';
    }
    for (std::size_t j = 0; j < spec.pairs.size(); ++j) {
      if (p.ok()) {
        const PairReport& r = p.pairs[j];
        os << ',' << format_double(r.E_N) << ',' << format_double(r.nu_minus) << ','
           << format_double(r.S_u_to_v) << ',' << format_double(r.S_v_to_u) << ','
           << steering_class_name(r.steering_class);
      } else {
        os << ",,,,,";
      }
    }
    os << '\n';
  }
}

SweepSummary summarize(const SweepResult& result) {
  SweepSummary s;
  s.points = result.points.size();
  const auto& pairs = result.spec.pairs;
  std::vector<double> maxima(pairs.size() * 3, 0.0);
  for (const PointResult& p : result.points) {
    ++s.status_counts[std::string(point_status_name(p.status))];
    if (p.has_stability && p.stability.stable) ++s.stable;
    if (!p.ok()) continue;
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      maxima[3 * j] = std::max(maxima[3 * j], p.pairs[j].E_N);
      maxima[3 * j + 1] = std::max(maxima[3 * j + 1], p.pairs[j].S_u_to_v);
      maxima[3 * j + 2] = std::max(maxima[3 * j + 2], p.pairs[j].S_v_to_u);
    }
  }
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    s.maxima.emplace_back("EN_" + bipartition_label(pairs[j]), maxima[3 * j]);
    s.maxima.emplace_back(direction_label(pairs[j].u, pairs[j].v), maxima[3 * j + 1]);
    s.maxima.emplace_back(direction_label(pairs[j].v, pairs[j].u), maxima[3 * j + 2]);
  }
  return s;
}

void print_summary(std::ostream& os, const SweepSummary& s) {
  os << "points: " << s.points << '\n';
  const double frac = s.points ? static_cast<double>(s.stable) / static_cast<double>(s.points) : 0.0;
  os << "stable fraction: " << frac << " (" << s.stable << '/' << s.points << ")\n";
  for (const auto& [status, n] : s.status_counts) os << "status " << status << ": " << n << '\n';
  for (const auto& [name, v] : s.maxima) os << "max " << name << ": " << v << '\n';
}

}  // namespace cmm
