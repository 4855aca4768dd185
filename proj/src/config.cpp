#include "plasmitm/config.hpp"

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "plasmitm/errors.hpp"

namespace plasmitm {

PhysicalParams RunConfig::params() const {
  return derive_params(raw, allow_gamma_nonpositive);
}

RunConfig default_config() {
  RunConfig cfg;
  cfg.raw.D0 = 6.0e9;        // sigma0 = D0 tau = 6e-4 S
  cfg.raw.tau = 1.0e-13;
  cfg.raw.c = 1.5e8;         // background refraction index 2
  cfg.raw.mu0 = 4.0e-7 * 3.141592653589793238462643383279502884;
  cfg.raw.U = 1.0;
  cfg.raw.alpha = 1.0e-13;
  const PhysicalParams p = derive_params(cfg.raw);
  cfg.source.z0 = 10.0 * p.ell0;
  cfg.source.xi = 2.0;
  cfg.mirror.T = 5.0 * cfg.source.z0 / cfg.raw.c;
  cfg.mirror.dt = 0.0;
  cfg.quad.rel_tol = 1e-8;
  cfg.quad.abs_tol = 0.0;
  cfg.quad.max_subdivisions = 4000;
  return cfg;
}

namespace {

double parse_double(const std::string& key, const std::string& v) {
  char* end = nullptr;
  const double x = std::strtod(v.c_str(), &end);
  if (end == v.c_str() || *end != '\0')
    throw ConfigError("config key '" + key + "' has a non-numeric value '" + v + "'");
  return x;
}

int parse_int(const std::string& key, const std::string& v) {
  const double x = parse_double(key, v);
  return static_cast<int>(x);
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("config key '" + key + "' expects a boolean, got '" + v + "'");
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

void apply_one(RunConfig& cfg, const std::string& key, const std::string& val) {
  if (key == "D0") cfg.raw.D0 = parse_double(key, val);
  else if (key == "tau") cfg.raw.tau = parse_double(key, val);
  else if (key == "c") cfg.raw.c = parse_double(key, val);
  else if (key == "mu0") cfg.raw.mu0 = parse_double(key, val);
  else if (key == "U") cfg.raw.U = parse_double(key, val);
  else if (key == "alpha") cfg.raw.alpha = parse_double(key, val);
  else if (key == "z0") cfg.source.z0 = parse_double(key, val);
  else if (key == "xi") cfg.source.xi = parse_double(key, val);
  else if (key == "T") cfg.mirror.T = parse_double(key, val);
  else if (key == "dt") cfg.mirror.dt = parse_double(key, val);
  else if (key == "chi_profile") cfg.mirror.chi_profile = chi_profile_from_string(val);
  else if (key == "quad_rel_tol") cfg.quad.rel_tol = parse_double(key, val);
  else if (key == "quad_abs_tol") cfg.quad.abs_tol = parse_double(key, val);
  else if (key == "quad_max_subdiv") cfg.quad.max_subdivisions = parse_int(key, val);
  else if (key == "grid_r_max_over_l0") cfg.grid.r_max_over_l0 = parse_double(key, val);
  else if (key == "grid_z_max") cfg.grid.z_max = parse_double(key, val);
  else if (key == "grid_nr") cfg.grid.nr = parse_int(key, val);
  else if (key == "grid_nz") cfg.grid.nz = parse_int(key, val);
  else if (key == "allow_gamma_nonpositive")
    cfg.allow_gamma_nonpositive = parse_bool(key, val);
  else
    throw ConfigError("unknown config key '" + key + "'");
}

}  // namespace

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  RunConfig cfg = default_config();
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) +
                        ": expected 'key = value'");
    apply_one(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

RunConfig apply_overrides(RunConfig cfg,
                          const std::map<std::string, std::string>& kv) {
  for (const auto& [k, v] : kv) apply_one(cfg, k, v);
  return cfg;
}

std::string canonical_string(const RunConfig& cfg) {
  char buf[64];
  std::ostringstream os;
  auto put = [&](const char* k, double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    os << k << '=' << buf << ';';
  };
  put("D0", cfg.raw.D0);
  put("tau", cfg.raw.tau);
  put("c", cfg.raw.c);
  put("mu0", cfg.raw.mu0);
  put("U", cfg.raw.U);
  put("alpha", cfg.raw.alpha);
  put("z0", cfg.source.z0);
  put("xi", cfg.source.xi);
  put("T", cfg.mirror.T);
  put("dt", cfg.mirror.dt);
  os << "chi_profile=" << to_string(cfg.mirror.chi_profile) << ';';
  put("quad_rel_tol", cfg.quad.rel_tol);
  put("quad_abs_tol", cfg.quad.abs_tol);
  os << "quad_max_subdiv=" << cfg.quad.max_subdivisions << ';';
  put("grid_r_max_over_l0", cfg.grid.r_max_over_l0);
  put("grid_z_max", cfg.grid.z_max);
  os << "grid_nr=" << cfg.grid.nr << ';' << "grid_nz=" << cfg.grid.nz << ';'
     << "allow_gamma_nonpositive=" << (cfg.allow_gamma_nonpositive ? 1 : 0) << ';';
  return os.str();
}

std::string config_hash(const RunConfig& cfg) {
  const std::string s = canonical_string(cfg);
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char out[17];
  std::snprintf(out, sizeof out, "%016" PRIx64, h);
  return std::string(out);
}

}  // namespace plasmitm
