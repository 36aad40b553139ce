#include "cmm/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "cmm/errors.hpp"
#include "cmm/presets.hpp"

namespace cmm {

namespace {

using json = nlohmann::ordered_json;

constexpr std::string_view kSuffix = "_over_2pi_Hz";

// Reads the keys of one JSON object, tracking which were consumed so that
// leftovers can be rejected.
class Section {
 public:
  Section(const json& obj, std::string name) : obj_(obj), name_(std::move(name)) {
    if (!obj_.is_object()) throw ConfigError("'" + name_ + "' must be an object");
  }

  bool has(const std::string& key) const { return obj_.contains(key); }

  std::optional<double> number(const std::string& key) {
    if (!obj_.contains(key)) return std::nullopt;
    used_.insert(key);
    const json& v = obj_.at(key);
    if (!v.is_number()) throw ConfigError(where(key) + " must be a number");
    return v.get<double>();
  }

  // Angular quantity in rad/s, or in Hz with the _over_2pi_Hz suffix.
  std::optional<double> angular(const std::string& key) {
    const std::string alt = key + std::string(kSuffix);
    const auto direct = number(key);
    const auto hz = number(alt);
    if (direct && hz) throw ConfigError(where(key) + " given both directly and as " + alt);
    if (hz) return kTwoPi * *hz;
    return direct;
  }

  bool has_angular(const std::string& key) const { return has(key) || has(key + std::string(kSuffix)); }

  std::optional<int> integer(const std::string& key) {
    if (!obj_.contains(key)) return std::nullopt;
    used_.insert(key);
    const json& v = obj_.at(key);
    if (!v.is_number_integer()) throw ConfigError(where(key) + " must be an integer");
    return v.get<int>();
  }

  std::optional<std::string> string(const std::string& key) {
    if (!obj_.contains(key)) return std::nullopt;
    used_.insert(key);
    const json& v = obj_.at(key);
    if (!v.is_string()) throw ConfigError(where(key) + " must be a string");
    return v.get<std::string>();
  }

  const json* raw(const std::string& key) {
    if (!obj_.contains(key)) return nullptr;
    used_.insert(key);
    return &obj_.at(key);
  }

  void reject_unknown() const {
    for (const auto& item : obj_.items()) {
      if (!used_.count(item.key())) throw ConfigError("unknown key " + where(item.key()));
    }
  }

 private:
  std::string where(const std::string& key) const { return "'" + name_ + "." + key + "'"; }

  const json& obj_;
  std::string name_;
  std::set<std::string> used_;
};

void apply_material(Section& s, MaterialParams& m) {
  if (auto v = s.number("rho_s")) m.rho_s = *v;
  if (auto v = s.number("r_sphere")) m.r_sphere = *v;
  if (auto v = s.number("n_r")) m.n_r = *v;
  if (auto v = s.number("verdet")) m.verdet = *v;
  if (auto v = s.angular("gamma_G")) m.gamma_G = *v;
  if (auto v = s.number("H_d")) m.H_d = *v;
  if (auto v = s.number("power")) m.power = *v;
  s.reject_unknown();
}

void apply_system(Section& s, SystemParams& p, const MaterialParams& material, bool require_gmb) {
  const bool absolute = s.has_angular("omega_0") || s.has_angular("omega_c_drive");
  const bool detunings = s.has_angular("delta_1") || s.has_angular("delta_2") || s.has_angular("delta_m0") ||
                         s.has_angular("delta_m");
  if (absolute && detunings) {
    throw ConfigError("give either drive frequencies (omega_0, omega_c_drive) or detunings, not both");
  }
  if (s.has_angular("delta_m") && s.has_angular("delta_m0")) {
    throw ConfigError("give either delta_m (effective) or delta_m0 (bare), not both");
  }
  if (require_gmb && !s.has_angular("G_mb")) throw ConfigError("'system.G_mb' is required");

  if (auto v = s.angular("omega_b")) p.omega_b = *v;
  if (auto v = s.angular("omega_c1")) p.omega_c1 = *v;
  if (auto v = s.angular("omega_c2")) p.omega_c2 = *v;
  if (auto v = s.angular("omega_m")) p.omega_m = *v;
  if (auto v = s.angular("delta_1")) p.delta_1 = *v;
  if (auto v = s.angular("delta_2")) p.delta_2 = *v;
  if (auto v = s.angular("delta_m0")) {
    p.delta_m0 = *v;
    p.delta_m_pinned.reset();
  }
  if (auto v = s.angular("delta_m")) p.delta_m_pinned = *v;
  if (s.has_angular("delta_1") || s.has_angular("delta_2") || s.has_angular("delta_m0") || s.has_angular("delta_m")) {
    p.frequency_input = FrequencyInput::detunings;
  }
  if (auto v = s.angular("kappa_1")) p.kappa_1 = *v;
  if (auto v = s.angular("kappa_2")) p.kappa_2 = *v;
  if (auto v = s.angular("kappa_m")) p.kappa_m = *v;
  if (auto v = s.angular("gamma_b")) p.gamma_b = *v;
  if (auto v = s.angular("Gamma")) p.Gamma = *v;
  if (auto v = s.angular("G_mb")) p.G_mb = *v;
  if (auto v = s.angular("xi")) p.xi = *v;
  if (auto v = s.number("phi")) p.phi = *v;
  if (auto v = s.number("T")) p.T = *v;
  if (const json* bt = s.raw("bath_T")) {
    Section b(*bt, "system.bath_T");
    p.bath_T.T_b = b.number("T_b");
    p.bath_T.T_m = b.number("T_m");
    p.bath_T.T_1 = b.number("T_1");
    p.bath_T.T_2 = b.number("T_2");
    b.reject_unknown();
  }

  if (absolute) {
    const auto w0 = s.angular("omega_0");
    const auto wc = s.angular("omega_c_drive");
    if (!w0 || !wc) throw ConfigError("absolute frequency input needs both omega_0 and omega_c_drive");
    p = p.with_absolute_frequencies(*w0, *wc);
  }

  const auto eps_m = s.angular("eps_m");
  const auto eps_c = s.angular("eps_c");
  p.eps_m = eps_m ? *eps_m : magnon_drive_amplitude(material);
  p.eps_c = eps_c ? *eps_c : cavity_drive_amplitude(material.power, p.kappa_2, p.laser_frequency());
  s.reject_unknown();
}

Axis parse_axis(const json& j, std::size_t index) {
  Section s(j, "sweep.axes[" + std::to_string(index) + "]");
  Axis a;
  const auto name = s.string("name");
  if (!name) throw ConfigError("sweep axis needs a name");
  a.name = *name;
  const bool freq = is_frequency_axis(a.name);
  const auto lo = freq ? s.angular("min") : s.number("min");
  const auto hi = freq ? s.angular("max") : s.number("max");
  const auto count = s.integer("count");
  if (!lo || !hi || !count) throw ConfigError("sweep axis '" + a.name + "' needs min, max and count");
  a.min = *lo;
  a.max = *hi;
  a.count = *count;
  s.reject_unknown();
  return a;
}

}  // namespace

PipelineOptions RunConfig::pipeline_options() const {
  PipelineOptions o;
  o.steady_state.tol = tolerances.steady_state_tol;
  o.steady_state.max_iter = tolerances.max_iter;
  o.physicality_tol = tolerances.physicality_tol;
  return o;
}

SweepSpec RunConfig::sweep_spec() const {
  if (!axis1) throw ConfigError("no sweep axes: give a preset or sweep.axes");
  SweepSpec spec;
  spec.axis1 = *axis1;
  spec.axis2 = axis2;
  spec.base = system;
  spec.pairs = pairs;
  spec.options = pipeline_options();
  try {
    spec.validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  return spec;
}

RunConfig preset_config(const std::string& name) {
  const Preset p = make_preset(name);
  RunConfig c;
  c.system = p.base;
  c.material = default_material();
  c.preset = name;
  c.axis1 = p.axis1;
  c.axis2 = p.axis2;
  c.pairs = p.pairs;
  c.metadata = p.notes;
  return c;
}

RunConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  Section top(doc, "config");

  RunConfig c;
  const auto preset = top.string("preset");
  if (preset) {
    c = preset_config(*preset);
  } else {
    c.system = listed_params();
    c.material = default_material();
  }

  if (const json* m = top.raw("material")) {
    Section s(*m, "material");
    apply_material(s, c.material);
  }
  try {
    c.material.validate();
  } catch (const DomainError& e) {
    throw ConfigError(std::string("material: ") + e.what());
  }

  const json* sys = top.raw("system");
  if (!sys && !preset) throw ConfigError("'system' section is required without a preset");
  if (sys) {
    Section s(*sys, "system");
    apply_system(s, c.system, c.material, !preset);
  } else if (top.has("material")) {
    c.system.eps_m = magnon_drive_amplitude(c.material);
    c.system.eps_c = cavity_drive_amplitude(c.material.power, c.system.kappa_2, c.system.laser_frequency());
  }

  if (const json* sw = top.raw("sweep")) {
    Section s(*sw, "sweep");
    if (const json* axes = s.raw("axes")) {
      if (preset) throw ConfigError("a preset and explicit sweep axes are mutually exclusive");
      if (!axes->is_array() || axes->empty() || axes->size() > 2) {
        throw ConfigError("'sweep.axes' must be an array of one or two axes");
      }
      c.axis1 = parse_axis((*axes)[0], 0);
      c.axis2.reset();
      if (axes->size() == 2) c.axis2 = parse_axis((*axes)[1], 1);
    }
    if (const json* pairs = s.raw("pairs")) {
      if (!pairs->is_array() || pairs->empty()) throw ConfigError("'sweep.pairs' must be a non-empty array");
      c.pairs.clear();
      for (const auto& item : *pairs) {
        if (!item.is_string()) throw ConfigError("'sweep.pairs' entries must be strings like \"c2-m\"");
        try {
          c.pairs.push_back(parse_bipartition(item.get<std::string>()));
        } catch (const DomainError& e) {
          throw ConfigError(e.what());
        }
      }
    }
    s.reject_unknown();
  }

  c.output = top.string("output");
  if (auto w = top.integer("workers")) {
    if (*w < 0) throw ConfigError("'workers' must be >= 0");
    c.workers = *w;
  }
  if (const json* t = top.raw("tolerances")) {
    Section s(*t, "tolerances");
    if (auto v = s.number("steady_state_tol")) c.tolerances.steady_state_tol = *v;
    if (auto v = s.integer("max_iter")) c.tolerances.max_iter = *v;
    if (auto v = s.number("physicality_tol")) c.tolerances.physicality_tol = *v;
    if (auto v = s.number("validate_scale")) c.tolerances.validate_scale = *v;
    s.reject_unknown();
    if (!(c.tolerances.steady_state_tol > 0.0) || c.tolerances.max_iter < 1 ||
        !(c.tolerances.physicality_tol >= 0.0) || !(c.tolerances.validate_scale > 0.0)) {
      throw ConfigError("tolerances must be positive");
    }
  }
  if (const json* md = top.raw("metadata")) {
    if (!md->is_array()) throw ConfigError("'metadata' must be an array of [key, value] pairs");
    c.metadata.clear();
    for (const auto& item : *md) {
      if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_string()) {
        throw ConfigError("'metadata' entries must be [key, value] string pairs");
      }
      c.metadata.emplace_back(item[0].get<std::string>(), item[1].get<std::string>());
    }
  }
  top.reject_unknown();

  try {
    c.system.validate();
  } catch (const DomainError& e) {
    throw ConfigError(std::string("system: ") + e.what());
  }
  if (c.axis1) (void)c.sweep_spec();
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string dump_config(const RunConfig& c) {
  const SystemParams& p = c.system;
  json sys;
  sys["omega_b"] = p.omega_b;
  sys["omega_c1"] = p.omega_c1;
  sys["omega_c2"] = p.omega_c2;
  sys["omega_m"] = p.omega_m;
  if (p.frequency_input == FrequencyInput::absolute) {
    sys["omega_0"] = p.omega_0;
    sys["omega_c_drive"] = p.omega_c_drive;
  } else {
    sys["delta_1"] = p.delta_1;
    sys["delta_2"] = p.delta_2;
    if (p.delta_m_pinned) sys["delta_m"] = *p.delta_m_pinned;
    else sys["delta_m0"] = p.delta_m0;
  }
  sys["kappa_1"] = p.kappa_1;
  sys["kappa_2"] = p.kappa_2;
  sys["kappa_m"] = p.kappa_m;
  sys["gamma_b"] = p.gamma_b;
  sys["Gamma"] = p.Gamma;
  sys["G_mb"] = p.G_mb;
  sys["xi"] = p.xi;
  sys["phi"] = p.phi;
  sys["eps_m"] = p.eps_m;
  sys["eps_c"] = p.eps_c;
  sys["T"] = p.T;
  json bath = json::object();
  if (p.bath_T.T_b) bath["T_b"] = *p.bath_T.T_b;
  if (p.bath_T.T_m) bath["T_m"] = *p.bath_T.T_m;
  if (p.bath_T.T_1) bath["T_1"] = *p.bath_T.T_1;
  if (p.bath_T.T_2) bath["T_2"] = *p.bath_T.T_2;
  if (!bath.empty()) sys["bath_T"] = bath;

  const MaterialParams& m = c.material;
  json mat = {{"rho_s", m.rho_s}, {"r_sphere", m.r_sphere}, {"n_r", m.n_r}, {"verdet", m.verdet},
              {"gamma_G", m.gamma_G}, {"H_d", m.H_d}, {"power", m.power}};

  json doc;
  doc["system"] = sys;
  doc["material"] = mat;
  json sweep = json::object();
  if (c.axis1) {
    json axes = json::array();
    for (const Axis* a : {&*c.axis1, c.axis2 ? &*c.axis2 : nullptr}) {
      if (!a) continue;
      axes.push_back({{"name", a->name}, {"min", a->min}, {"max", a->max}, {"count", a->count}});
    }
    sweep["axes"] = axes;
  }
  json pairs = json::array();
  for (const Bipartition& b : c.pairs) pairs.push_back(bipartition_label(b));
  sweep["pairs"] = pairs;
  doc["sweep"] = sweep;
  if (c.output) doc["output"] = *c.output;
  doc["workers"] = c.workers;
  doc["tolerances"] = {{"steady_state_tol", c.tolerances.steady_state_tol},
                       {"max_iter", c.tolerances.max_iter},
                       {"physicality_tol", c.tolerances.physicality_tol},
                       {"validate_scale", c.tolerances.validate_scale}};
  json md = json::array();
  for (const auto& [k, v] : c.metadata) md.push_back({k, v});
  doc["metadata"] = md;
  return doc.dump(2) + "\n";
}

}  // namespace cmm
