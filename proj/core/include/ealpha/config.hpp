#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "ealpha/integrators.hpp"

namespace ealpha {

enum class InitialCondition { single_mode, taylor_green, random_bandlimited };

std::string_view to_string(InitialCondition ic);
InitialCondition parse_initial_condition(std::string_view name);

/// Everything a run needs. Mirrors the flat key=value config file:
///
///   n, alpha, nu, dt, t_final, scheme, cfl_limit, ic, ic_kx, ic_ky,
///   ic_band, ic_amplitude, ic_energy, seed, out, save_every, diag_every, workers
struct RunConfig {
  int n = 64;
  double alpha = 0.25;
  double nu = 0.0;
  double dt = 1e-3;
  double t_final = 1.0;
  Scheme scheme = Scheme::rk4;
  double cfl_limit = 0.5;

  InitialCondition ic = InitialCondition::random_bandlimited;
  int ic_kx = 2;             ///< single_mode wave vector
  int ic_ky = 0;
  int ic_band = 4;           ///< random_bandlimited: modes with 1 <= |k|_inf <= ic_band
  double ic_amplitude = 1.0; ///< single_mode / taylor_green vorticity amplitude
  double ic_energy = 1.0;    ///< random_bandlimited target energy

  std::uint64_t seed = 42;
  std::filesystem::path out_dir = "out";
  long save_every = 100;
  long diag_every = 10;
  int workers = 1;

  /// Throws ConfigError on any invalid field.
  void validate() const;
  StepperConfig stepper() const { return {dt, scheme, cfl_limit}; }
};

/// Applies one key=value setting; throws ConfigError on unknown keys or
/// unparsable values.
void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value);

/// Parses '#'-commented key=value lines on top of `base`.
RunConfig parse_config(std::istream& in, RunConfig base = {});
RunConfig load_config(const std::filesystem::path& path, RunConfig base = {});

/// Canonical key=value rendering; parse_config(render_config(c)) == c.
std::string render_config(const RunConfig& cfg);

/// Comma-separated list of doubles, e.g. "1e-2,5e-3".
std::vector<double> parse_list(std::string_view text);

}  // namespace ealpha
