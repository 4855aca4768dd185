#pragma once

#include <map>
#include <string>

#include "plasmitm/physics.hpp"
#include "plasmitm/quadrature.hpp"
#include "plasmitm/specfun.hpp"

namespace plasmitm {

struct MirrorConfig {
  double T = 0.0;    // mirror time (s)
  double dt = 0.0;   // mirror duration (s), 0 = instantaneous
  ChiProfile chi_profile = ChiProfile::RaisedCosine;
};

struct GridSpec {
  double r_max_over_l0 = 40.0;
  double z_max = 0.0;  // meters; 0 selects 2*z0
  int nr = 200;
  int nz = 200;
};

// Everything a CLI run needs. Identical RunConfig yields bit-identical CSV.
struct RunConfig {
  RawParams raw;
  SourceConfig source;
  MirrorConfig mirror;
  QuadratureSpec quad;
  GridSpec grid;
  bool allow_gamma_nonpositive = false;

  PhysicalParams params() const;
};

// Built-in defaults: the experimental parameter set (sigma0 = 6e-4 S,
// tau = 1e-13 s, background index 2).
RunConfig default_config();

// key = value file, '#' comments. Unknown keys are rejected with the key
// named; missing file is a ConfigError.
RunConfig load_config(const std::string& path);
RunConfig apply_overrides(RunConfig cfg,
                          const std::map<std::string, std::string>& kv);

// canonical serialized form (sorted keys, %.17g values); used for hashing
std::string canonical_string(const RunConfig& cfg);

// FNV-1a 64-bit over the canonical string, as 16 hex digits
std::string config_hash(const RunConfig& cfg);

}  // namespace plasmitm
