#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "actinwire/csv.hpp"
#include "actinwire/errors.hpp"
#include "actinwire/frequency_response.hpp"
#include "actinwire/wannet.hpp"

namespace actinwire {

// ---------------------------------------------------------------------------
// Raw parsed form: a small TOML subset -- [section] tables of key = value
// pairs, one repeated [[nodes]] table, numbers / bools / quoted strings /
// flat number arrays, # comments.
// ---------------------------------------------------------------------------

struct ConfigValue {
  enum class Kind { Float, Int, Bool, Str, FloatArray };
  Kind kind = Kind::Float;
  double f = 0.0;
  std::int64_t i = 0;
  bool b = false;
  std::string s;
  std::vector<double> arr;
};

struct ParsedConfig {
  std::map<std::string, std::map<std::string, ConfigValue>> sections;
  std::vector<std::map<std::string, ConfigValue>> nodes;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline std::string_view strip_comment(std::string_view line) {
  bool in_str = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') in_str = !in_str;
    if (line[i] == '#' && !in_str) return line.substr(0, i);
  }
  return line;
}

inline bool parse_number(std::string_view text, ConfigValue& out) {
  const char* b = text.data();
  const char* e = text.data() + text.size();
  std::int64_t iv{};
  auto ri = std::from_chars(b, e, iv);
  if (ri.ec == std::errc() && ri.ptr == e) {
    out.kind = ConfigValue::Kind::Int;
    out.i = iv;
    out.f = static_cast<double>(iv);
    return true;
  }
  double fv{};
  auto rf = std::from_chars(b, e, fv);
  if (rf.ec == std::errc() && rf.ptr == e) {
    out.kind = ConfigValue::Kind::Float;
    out.f = fv;
    return true;
  }
  return false;
}

inline ConfigValue parse_value(std::string_view text, const std::string& where) {
  text = trim(text);
  if (text.empty()) throw parameter_error("config: empty value for " + where);
  ConfigValue v;
  if (text.front() == '"') {
    if (text.size() < 2 || text.back() != '"')
      throw parameter_error("config: unterminated string for " + where);
    v.kind = ConfigValue::Kind::Str;
    v.s = std::string(text.substr(1, text.size() - 2));
    return v;
  }
  if (text == "true" || text == "false") {
    v.kind = ConfigValue::Kind::Bool;
    v.b = text == "true";
    return v;
  }
  if (text.front() == '[') {
    if (text.back() != ']') throw parameter_error("config: unterminated array for " + where);
    v.kind = ConfigValue::Kind::FloatArray;
    std::string_view body = trim(text.substr(1, text.size() - 2));
    while (!body.empty()) {
      const std::size_t comma = body.find(',');
      std::string_view item = trim(comma == std::string_view::npos ? body : body.substr(0, comma));
      ConfigValue num;
      if (item.empty() || !parse_number(item, num))
        throw parameter_error("config: bad array element for " + where);
      v.arr.push_back(num.f);
      if (comma == std::string_view::npos) break;
      body = trim(body.substr(comma + 1));
    }
    return v;
  }
  if (!parse_number(text, v)) throw parameter_error("config: cannot parse value for " + where);
  return v;
}

}  // namespace detail

inline ParsedConfig parse_config_text(std::string_view text) {
  ParsedConfig cfg;
  std::map<std::string, ConfigValue>* current = nullptr;
  std::string current_name;
  std::size_t pos = 0;
  int lineno = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    line = detail::trim(detail::strip_comment(line));
    if (line.empty()) continue;
    if (line.starts_with("[[")) {
      if (line != "[[nodes]]")
        throw parameter_error("config: only [[nodes]] tables are supported (line " +
                              std::to_string(lineno) + ")");
      cfg.nodes.emplace_back();
      current = &cfg.nodes.back();
      current_name = "nodes";
      continue;
    }
    if (line.front() == '[') {
      if (line.back() != ']')
        throw parameter_error("config: malformed section header (line " + std::to_string(lineno) + ")");
      current_name = std::string(detail::trim(line.substr(1, line.size() - 2)));
      if (current_name.empty())
        throw parameter_error("config: empty section name (line " + std::to_string(lineno) + ")");
      current = &cfg.sections[current_name];
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw parameter_error("config: expected key = value (line " + std::to_string(lineno) + ")");
    const std::string key(detail::trim(line.substr(0, eq)));
    if (key.empty())
      throw parameter_error("config: empty key (line " + std::to_string(lineno) + ")");
    if (current == nullptr)
      throw parameter_error("config: key '" + key + "' outside any section (line " +
                            std::to_string(lineno) + ")");
    if (current->count(key))
      throw parameter_error("config: duplicate key '" + current_name + "." + key + "'");
    (*current)[key] = detail::parse_value(line.substr(eq + 1), current_name + "." + key);
  }
  return cfg;
}

inline ParsedConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parameter_error("config: cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

// ---------------------------------------------------------------------------
// Schema + typed effective configuration
// ---------------------------------------------------------------------------

struct SweepSettings {
  std::vector<double> distances_um = {10.0, 20.0, 30.0, 40.0, 50.0};
  double f_start_hz = 0.0;
  double f_stop_hz = 700.0;
  int n_points = 701;
  PhaseMode phase_mode = PhaseMode::StandardTwoPole;
};

struct ThroughputSettings {
  double t_start_s = 0.0;
  double t_stop_s = 60e-6;
  int n_points = 601;
};

struct EffectiveConfig {
  PhysicalParams physical{};
  CircuitSource circuit_mode = CircuitSource::PaperEffectiveValues;
  double n_eff_per_um = 200.0;
  TransportParams transport{};
  SweepSettings sweep{};
  ThroughputSettings throughput{};
  ScenarioConfig scenario{};
  int n_seeds = 1;
};

namespace detail {

struct SchemaEntry {
  const char* section;
  const char* key;
  ConfigValue::Kind kind;
};

// Every accepted section.key; anything else is a config error.
inline const std::vector<SchemaEntry>& schema() {
  static const std::vector<SchemaEntry> s = {
      {"physical", "r_actin_m", ConfigValue::Kind::Float},
      {"physical", "lambda_B_m", ConfigValue::Kind::Float},
      {"physical", "epsilon_r", ConfigValue::Kind::Float},
      {"physical", "mu_r", ConfigValue::Kind::Float},
      {"physical", "rho_ohm_m", ConfigValue::Kind::Float},
      {"physical", "l_monomer_m", ConfigValue::Kind::Float},
      {"physical", "H_turns", ConfigValue::Kind::Float},
      {"physical", "temperature_K", ConfigValue::Kind::Float},
      {"physical", "n_eff_per_um", ConfigValue::Kind::Float},
      {"physical", "circuit_mode", ConfigValue::Kind::Str},
      {"transport", "Omega", ConfigValue::Kind::Float},
      {"transport", "mu1", ConfigValue::Kind::Float},
      {"transport", "mu2", ConfigValue::Kind::Float},
      {"transport", "alpha_s", ConfigValue::Kind::Float},
      {"transport", "beta_m", ConfigValue::Kind::Float},
      {"transport", "charge_per_monomer", ConfigValue::Kind::Float},
      {"transport", "monomers_per_um", ConfigValue::Kind::Float},
      {"transport", "t_stop_s", ConfigValue::Kind::Float},
      {"sweep", "distances_um", ConfigValue::Kind::FloatArray},
      {"sweep", "f_start_hz", ConfigValue::Kind::Float},
      {"sweep", "f_stop_hz", ConfigValue::Kind::Float},
      {"sweep", "n_points", ConfigValue::Kind::Int},
      {"sweep", "phase_mode", ConfigValue::Kind::Str},
      {"throughput", "t_start_s", ConfigValue::Kind::Float},
      {"throughput", "t_stop_s", ConfigValue::Kind::Float},
      {"throughput", "n_points", ConfigValue::Kind::Int},
      {"scenario", "dimension", ConfigValue::Kind::Int},
      {"scenario", "wire_growth_um_s", ConfigValue::Kind::Float},
      {"scenario", "wire_max_length_um", ConfigValue::Kind::Float},
      {"scenario", "miss_timeout_s", ConfigValue::Kind::Float},
      {"scenario", "disassembly_s", ConfigValue::Kind::Float},
      {"scenario", "message_bits", ConfigValue::Kind::Int},
      {"scenario", "per_hop_overhead_bits", ConfigValue::Kind::Int},
      {"scenario", "relay_policy", ConfigValue::Kind::Str},
      {"scenario", "rng_seed", ConfigValue::Kind::Int},
      {"scenario", "max_sim_time_s", ConfigValue::Kind::Float},
      {"scenario", "fixed_hop_delay_s", ConfigValue::Kind::Float},
      {"scenario", "n_seeds", ConfigValue::Kind::Int},
  };
  return s;
}

inline const SchemaEntry* find_schema(std::string_view section, std::string_view key) {
  for (const auto& e : schema())
    if (section == e.section && key == e.key) return &e;
  return nullptr;
}

inline double as_double(const ConfigValue& v, const std::string& where) {
  if (v.kind != ConfigValue::Kind::Float && v.kind != ConfigValue::Kind::Int)
    throw parameter_error("config: " + where + " must be a number");
  return v.f;
}

inline std::int64_t as_int(const ConfigValue& v, const std::string& where) {
  if (v.kind == ConfigValue::Kind::Int) return v.i;
  if (v.kind == ConfigValue::Kind::Float && v.f == static_cast<double>(static_cast<std::int64_t>(v.f)))
    return static_cast<std::int64_t>(v.f);
  throw parameter_error("config: " + where + " must be an integer");
}

inline bool as_bool(const ConfigValue& v, const std::string& where) {
  if (v.kind == ConfigValue::Kind::Bool) return v.b;
  if (v.kind == ConfigValue::Kind::Int && (v.i == 0 || v.i == 1)) return v.i == 1;
  throw parameter_error("config: " + where + " must be true or false");
}

inline std::string as_string(const ConfigValue& v, const std::string& where) {
  if (v.kind != ConfigValue::Kind::Str) throw parameter_error("config: " + where + " must be a string");
  return v.s;
}

}  // namespace detail

inline EffectiveConfig make_effective(const ParsedConfig& parsed) {
  using detail::as_bool;
  using detail::as_double;
  using detail::as_int;
  using detail::as_string;

  EffectiveConfig eff;
  for (const auto& [section, table] : parsed.sections) {
    for (const auto& [key, value] : table) {
      const std::string where = section + "." + key;
      if (detail::find_schema(section, key) == nullptr)
        throw parameter_error("config: unknown key '" + where + "'");
      if (section == "physical") {
        if (key == "r_actin_m") eff.physical.r_actin_m = as_double(value, where);
        else if (key == "lambda_B_m") eff.physical.lambda_B_m = as_double(value, where);
        else if (key == "epsilon_r") eff.physical.epsilon_r = as_double(value, where);
        else if (key == "mu_r") eff.physical.mu_r = as_double(value, where);
        else if (key == "rho_ohm_m") eff.physical.rho_ohm_m = as_double(value, where);
        else if (key == "l_monomer_m") eff.physical.l_monomer_m = as_double(value, where);
        else if (key == "H_turns") eff.physical.H_turns = as_double(value, where);
        else if (key == "temperature_K") eff.physical.temperature_K = as_double(value, where);
        else if (key == "n_eff_per_um") eff.n_eff_per_um = as_double(value, where);
        else if (key == "circuit_mode") {
          const std::string mode = as_string(value, where);
          if (mode == "paper") eff.circuit_mode = CircuitSource::PaperEffectiveValues;
          else if (mode == "derived") eff.circuit_mode = CircuitSource::DerivedFromMonomers;
          else throw parameter_error("config: physical.circuit_mode must be \"paper\" or \"derived\"");
        }
      } else if (section == "transport") {
        if (key == "Omega") eff.transport.Omega = as_double(value, where);
        else if (key == "mu1") eff.transport.mu1 = as_double(value, where);
        else if (key == "mu2") eff.transport.mu2 = as_double(value, where);
        else if (key == "alpha_s") eff.transport.alpha_s = as_double(value, where);
        else if (key == "beta_m") eff.transport.beta_m = as_double(value, where);
        else if (key == "charge_per_monomer") eff.transport.charge_per_monomer = as_double(value, where);
        else if (key == "monomers_per_um") eff.transport.monomers_per_um = as_double(value, where);
        else if (key == "t_stop_s") {
          const double v = as_double(value, where);
          eff.transport.t_stop_s = v <= 0.0 ? std::nullopt : std::optional<double>(v);
        }
      } else if (section == "sweep") {
        if (key == "distances_um") {
          if (value.kind != ConfigValue::Kind::FloatArray)
            throw parameter_error("config: sweep.distances_um must be an array");
          eff.sweep.distances_um = value.arr;
        } else if (key == "f_start_hz") eff.sweep.f_start_hz = as_double(value, where);
        else if (key == "f_stop_hz") eff.sweep.f_stop_hz = as_double(value, where);
        else if (key == "n_points") eff.sweep.n_points = static_cast<int>(as_int(value, where));
        else if (key == "phase_mode") {
          const std::string mode = as_string(value, where);
          if (mode == "standard") eff.sweep.phase_mode = PhaseMode::StandardTwoPole;
          else if (mode == "literal") eff.sweep.phase_mode = PhaseMode::Eq7Literal;
          else throw parameter_error("config: sweep.phase_mode must be \"standard\" or \"literal\"");
        }
      } else if (section == "throughput") {
        if (key == "t_start_s") eff.throughput.t_start_s = as_double(value, where);
        else if (key == "t_stop_s") eff.throughput.t_stop_s = as_double(value, where);
        else if (key == "n_points") eff.throughput.n_points = static_cast<int>(as_int(value, where));
      } else if (section == "scenario") {
        if (key == "dimension") eff.scenario.dimension = static_cast<int>(as_int(value, where));
        else if (key == "wire_growth_um_s") eff.scenario.wire_growth_um_s = as_double(value, where);
        else if (key == "wire_max_length_um") eff.scenario.wire_max_length_um = as_double(value, where);
        else if (key == "miss_timeout_s") eff.scenario.miss_timeout_s = as_double(value, where);
        else if (key == "disassembly_s") eff.scenario.disassembly_s = as_double(value, where);
        else if (key == "message_bits") eff.scenario.message_bits = as_int(value, where);
        else if (key == "per_hop_overhead_bits") eff.scenario.per_hop_overhead_bits = as_int(value, where);
        else if (key == "relay_policy") {
          const std::string policy = as_string(value, where);
          if (policy == "exclude-source") eff.scenario.relay_policy = RelayPolicy::RandomExcludingSource;
          else if (policy == "epidemic") eff.scenario.relay_policy = RelayPolicy::RandomNeighborEpidemic;
          else throw parameter_error("config: scenario.relay_policy must be \"exclude-source\" or \"epidemic\"");
        } else if (key == "rng_seed") eff.scenario.rng_seed = static_cast<std::uint64_t>(as_int(value, where));
        else if (key == "max_sim_time_s") eff.scenario.max_sim_time_s = as_double(value, where);
        else if (key == "fixed_hop_delay_s") {
          const double v = as_double(value, where);
          eff.scenario.fixed_hop_delay_s = v < 0.0 ? std::nullopt : std::optional<double>(v);
        } else if (key == "n_seeds") eff.n_seeds = static_cast<int>(as_int(value, where));
      }
    }
  }

  static const char* node_keys[] = {"id", "x_um", "y_um", "z_um", "radius_um", "gateway",
                                    "initial_detector"};
  for (const auto& table : parsed.nodes) {
    Node node;
    for (const auto& [key, value] : table) {
      const std::string where = "nodes." + key;
      bool known = false;
      for (const char* k : node_keys) known |= key == k;
      if (!known) throw parameter_error("config: unknown key '" + where + "'");
      if (key == "id") node.id = static_cast<int>(detail::as_int(value, where));
      else if (key == "x_um") node.x_um = detail::as_double(value, where);
      else if (key == "y_um") node.y_um = detail::as_double(value, where);
      else if (key == "z_um") node.z_um = detail::as_double(value, where);
      else if (key == "radius_um") node.radius_um = detail::as_double(value, where);
      else if (key == "gateway") node.is_gateway = detail::as_bool(value, where);
      else if (key == "initial_detector") node.initial_detector = detail::as_bool(value, where);
    }
    eff.scenario.nodes.push_back(node);
  }

  eff.scenario.channel.physical = eff.physical;
  eff.scenario.channel.mode = eff.circuit_mode;
  eff.scenario.channel.n_eff_per_um = eff.n_eff_per_um;
  eff.scenario.transport = eff.transport;
  if (eff.n_seeds < 1) throw parameter_error("config: scenario.n_seeds must be >= 1");
  return eff;
}

/// Applies one `key=value` or `section.key=value` override onto the parsed
/// form. Bare keys must be unambiguous across the schema; string values may
/// be given unquoted.
inline void apply_override(ParsedConfig& parsed, std::string_view assignment) {
  const std::size_t eq = assignment.find('=');
  if (eq == std::string_view::npos || eq == 0)
    throw parameter_error("override: expected key=value, got '" + std::string(assignment) + "'");
  std::string key(detail::trim(assignment.substr(0, eq)));
  const std::string raw(detail::trim(assignment.substr(eq + 1)));

  std::string section;
  const std::size_t dot = key.find('.');
  if (dot != std::string_view::npos) {
    section = key.substr(0, dot);
    key = key.substr(dot + 1);
    if (detail::find_schema(section, key) == nullptr)
      throw parameter_error("override: unknown key '" + section + "." + key + "'");
  } else {
    int matches = 0;
    for (const auto& e : detail::schema()) {
      if (key == e.key) {
        ++matches;
        section = e.section;
      }
    }
    if (matches == 0) throw parameter_error("override: unknown key '" + key + "'");
    if (matches > 1)
      throw parameter_error("override: key '" + key + "' is ambiguous, qualify it as section.key");
  }

  const detail::SchemaEntry* entry = detail::find_schema(section, key);
  ConfigValue value;
  switch (entry->kind) {
    case ConfigValue::Kind::Str:
      value.kind = ConfigValue::Kind::Str;
      value.s = raw.size() >= 2 && raw.front() == '"' && raw.back() == '"'
                    ? raw.substr(1, raw.size() - 2)
                    : raw;
      break;
    case ConfigValue::Kind::FloatArray:
      value = detail::parse_value(raw.front() == '[' ? raw : "[" + raw + "]", section + "." + key);
      break;
    default:
      value = detail::parse_value(raw, section + "." + key);
      break;
  }
  parsed.sections[section][key] = value;
}

// ---------------------------------------------------------------------------
// Canonical echo + provenance hash
// ---------------------------------------------------------------------------

/// Fully explicit, re-parseable rendering of the effective configuration.
/// Byte-stable: re-parsing and re-rendering reproduces the same text.
inline std::string canonical_toml(const EffectiveConfig& eff) {
  std::string out;
  const auto kv = [&out](const char* key, const std::string& value) {
    out += key;
    out += " = ";
    out += value;
    out += '\n';
  };
  out += "[physical]\n";
  kv("r_actin_m", csv::num(eff.physical.r_actin_m));
  kv("lambda_B_m", csv::num(eff.physical.lambda_B_m));
  kv("epsilon_r", csv::num(eff.physical.epsilon_r));
  kv("mu_r", csv::num(eff.physical.mu_r));
  kv("rho_ohm_m", csv::num(eff.physical.rho_ohm_m));
  kv("l_monomer_m", csv::num(eff.physical.l_monomer_m));
  kv("H_turns", csv::num(eff.physical.H_turns));
  kv("temperature_K", csv::num(eff.physical.temperature_K));
  kv("n_eff_per_um", csv::num(eff.n_eff_per_um));
  kv("circuit_mode", eff.circuit_mode == CircuitSource::PaperEffectiveValues ? "\"paper\""
                                                                             : "\"derived\"");
  out += "\n[transport]\n";
  kv("Omega", csv::num(eff.transport.Omega));
  kv("mu1", csv::num(eff.transport.mu1));
  kv("mu2", csv::num(eff.transport.mu2));
  kv("alpha_s", csv::num(eff.transport.alpha_s));
  kv("beta_m", csv::num(eff.transport.beta_m));
  kv("charge_per_monomer", csv::num(eff.transport.charge_per_monomer));
  kv("monomers_per_um", csv::num(eff.transport.monomers_per_um));
  kv("t_stop_s", csv::num(eff.transport.t_stop_s ? *eff.transport.t_stop_s : 0.0));
  out += "\n[sweep]\n";
  {
    std::string arr = "[";
    for (std::size_t i = 0; i < eff.sweep.distances_um.size(); ++i) {
      if (i) arr += ", ";
      arr += csv::num(eff.sweep.distances_um[i]);
    }
    arr += "]";
    kv("distances_um", arr);
  }
  kv("f_start_hz", csv::num(eff.sweep.f_start_hz));
  kv("f_stop_hz", csv::num(eff.sweep.f_stop_hz));
  kv("n_points", csv::num(eff.sweep.n_points));
  kv("phase_mode", eff.sweep.phase_mode == PhaseMode::StandardTwoPole ? "\"standard\"" : "\"literal\"");
  out += "\n[throughput]\n";
  kv("t_start_s", csv::num(eff.throughput.t_start_s));
  kv("t_stop_s", csv::num(eff.throughput.t_stop_s));
  kv("n_points", csv::num(eff.throughput.n_points));
  out += "\n[scenario]\n";
  kv("dimension", csv::num(eff.scenario.dimension));
  kv("wire_growth_um_s", csv::num(eff.scenario.wire_growth_um_s));
  kv("wire_max_length_um", csv::num(eff.scenario.wire_max_length_um));
  kv("miss_timeout_s", csv::num(eff.scenario.miss_timeout_s));
  kv("disassembly_s", csv::num(eff.scenario.disassembly_s));
  kv("message_bits", csv::num(eff.scenario.message_bits));
  kv("per_hop_overhead_bits", csv::num(eff.scenario.per_hop_overhead_bits));
  kv("relay_policy", eff.scenario.relay_policy == RelayPolicy::RandomExcludingSource
                         ? "\"exclude-source\""
                         : "\"epidemic\"");
  kv("rng_seed", csv::num(static_cast<std::int64_t>(eff.scenario.rng_seed)));
  kv("max_sim_time_s", csv::num(eff.scenario.max_sim_time_s));
  kv("fixed_hop_delay_s",
     csv::num(eff.scenario.fixed_hop_delay_s ? *eff.scenario.fixed_hop_delay_s : -1.0));
  kv("n_seeds", csv::num(eff.n_seeds));
  for (const Node& n : eff.scenario.nodes) {
    out += "\n[[nodes]]\n";
    kv("id", csv::num(n.id));
    kv("x_um", csv::num(n.x_um));
    kv("y_um", csv::num(n.y_um));
    kv("z_um", csv::num(n.z_um));
    kv("radius_um", csv::num(n.radius_um));
    kv("gateway", n.is_gateway ? "true" : "false");
    kv("initial_detector", n.initial_detector ? "true" : "false");
  }
  return out;
}

inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const char c : data) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string config_hash_hex(const EffectiveConfig& eff) {
  const std::uint64_t h = fnv1a64(canonical_toml(eff));
  char buf[17];
  static const char* hex = "0123456789abcdef";
  for (int i = 0; i < 16; ++i) buf[i] = hex[(h >> (60 - 4 * i)) & 0xf];
  buf[16] = '\0';
  return buf;
}

/// Parse a config file, apply CLI overrides, and return the validated
/// effective configuration.
inline EffectiveConfig load_effective(const std::string& path,
                                      const std::vector<std::string>& overrides = {}) {
  ParsedConfig parsed = load_config_file(path);
  for (const std::string& ov : overrides) apply_override(parsed, ov);
  return make_effective(parsed);
}

}  // namespace actinwire
