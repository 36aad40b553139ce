#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cmm/pipeline.hpp"

namespace cmm {

/// Uniform closed grid [min, max] with `count` points.
struct Axis {
  std::string name;
  double min = 0;
  double max = 0;
  int count = 2;

  double value(int i) const;
  std::vector<double> values() const;
};

/// Names accepted as sweep axes.
const std::vector<std::string>& axis_whitelist();
bool is_frequency_axis(std::string_view name);

/// Sets one whitelisted parameter on a copy of `base`. Detuning axes switch
/// the point to direct-detuning input; phi is reduced into [0, 2 pi).
SystemParams apply_axis(const SystemParams& base, std::string_view name, double value);

struct SweepSpec {
  Axis axis1;
  std::optional<Axis> axis2;
  SystemParams base;
  std::vector<Bipartition> pairs = default_pairs();
  PipelineOptions options;

  /// Throws DomainError if an axis is malformed.
  void validate() const;
  std::size_t size() const;
};

struct SweepResult {
  SweepSpec spec;
  /// Row r sits at axis1 index r % n1 and axis2 index r / n1.
  std::vector<double> x1;
  std::vector<double> x2;
  std::vector<PointResult> points;
};

/// OpenMP-parallel sweep; workers <= 0 uses the OpenMP default.
SweepResult run_sweep(const SweepSpec& spec, int workers = 0);

/// Single-threaded reference; produces identical results.
SweepResult run_sweep_serial(const SweepSpec& spec);

/// Selects one scalar per point: "EN:c2-m", "nu:c2-m", "S:m->c2".
struct MeasureSelector {
  enum class Kind { log_negativity, nu_minus, steering } kind;
  Bipartition pair;
  bool reversed = false;  // for steering: direction v->u of the stored pair

  static MeasureSelector parse(std::string_view text);
  std::string label() const;
};

/// Value of a selector at a point; nullopt if the point has no measures or
/// the pair was not computed.
std::optional<double> measure_value(const PointResult& point, const MeasureSelector& sel);

std::vector<std::optional<double>> measure_series(const SweepResult& result, const MeasureSelector& sel);

/// Axis values where measure(a) - measure(b) changes sign, by linear
/// interpolation between neighbouring evaluated points. 1-D sweeps only.
std::vector<double> detect_crossovers(const SweepResult& result, const MeasureSelector& a,
                                      const MeasureSelector& b);

struct Peak {
  double x = 0;
  double value = 0;
  int index = -1;
};

/// Global maximum of a selector over a 1-D sweep (index -1 if none is > 0).
Peak find_peak(const SweepResult& result, const MeasureSelector& sel);

/// Ordered `#`-comment lines written before the CSV header.
using Metadata = std::vector<std::pair<std::string, std::string>>;

void write_csv(std::ostream& os, const SweepResult& result, const Metadata& metadata = {});
std::string format_double(double v);

struct SweepSummary {
  std::size_t points = 0;
  std::size_t stable = 0;
  std::map<std::string, std::size_t> status_counts;
  std::vector<std::pair<std::string, double>> maxima;  // per measure column
};

SweepSummary summarize(const SweepResult& result);
void print_summary(std::ostream& os, const SweepSummary& summary);

}  // namespace cmm
