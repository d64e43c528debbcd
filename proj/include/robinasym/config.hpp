#pragma once

#include <string>

#include "robinasym/error_analysis.hpp"

namespace robinasym {

/// Harness configuration, read from JSON:
///
///   {
///     "geometry": {"R": 1.0, "c": [0.0, 0.0], "eps": 0.05},
///     "data": {
///       "kappa": 1.0,
///       "f_outer":     [mean, c1, s1, c2, s2, ...],
///       "f_inclusion": [...] | {"random_modes": 6, "amplitude": 1.0},
///       "g_outer": [...], "g_inclusion": [...]
///     },
///     "sweep":  {"eps": [...], "kappa": [...]},
///     "solver": {"N": 32, "N_green": 64, "M": 0, "tolerance": 1e-8, "seed": 1,
///                "workers": 1, "scaling": "physical" | "unscaled",
///                "n_radial": 64, "n_angular": 64, "boundary_points": 0}
///   }
///
/// Every block and key is optional; missing values take the defaults above
/// (zero data, no sweep lists). Random data draws from the solver seed, so a
/// config fully determines its output.
struct HarnessConfig {
  SweepConfig sweep;
  double eps = 0.05;   // single-run inclusion radius
  double kappa = 1.0;  // single-run Robin coefficient
};

HarnessConfig parse_config(const std::string& json_text);
HarnessConfig load_config(const std::string& path);

}  // namespace robinasym
