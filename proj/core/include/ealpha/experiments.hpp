#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ealpha/config.hpp"
#include "ealpha/dynamics.hpp"

namespace ealpha {

/// Least-squares fit of log(y) = slope * log(x) + intercept. `residual` is
/// the root-mean-square of the fit residuals in natural-log units.
struct LogLogFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;
};

/// Requires at least two strictly positive samples; throws std::invalid_argument otherwise.
LogLogFit fit_loglog(std::span<const double> x, std::span<const double> y);

struct SweepResult {
  std::string parameter;          ///< "nu", "alpha" or "dt"
  std::string label;              ///< what was measured (scheme name or sweep kind)
  std::vector<double> values;
  std::vector<double> dist_l2_q;  ///< ||q - q_ref||_L2
  std::vector<double> dist_h1_u;  ///< H^1_alpha norm of u - u_ref
  LogLogFit fit;                  ///< slope of dist_l2_q vs values
  bool fitted = false;            ///< false when fewer than two positive distances
};

struct RunSummary {
  long steps = 0;
  double t_final = 0.0;
  double wall_seconds = 0.0;
  Diagnostics last;
};

/// Integrates `cfg`, writing diagnostics.csv, snap_*.eaf and manifest.txt
/// into cfg.out_dir. Throws ConfigError, NumericalError or IoError.
RunSummary run_or_throw(const RunConfig& cfg);

/// run_or_throw mapped onto exit statuses: 0 success, 1 configuration
/// error, 2 numerical failure, 3 I/O error. The cause goes to `err`.
int run(const RunConfig& cfg, std::ostream& err);

/// Maps the in-flight exception onto the exit-status convention above.
int exit_status_for_current_exception(std::ostream& err);

/// Zero-viscosity limit: every member starts from the same q_hat (built
/// from cfg) and integrates with its nu to cfg.t_final; distances are to
/// the nu = 0 run. Members run on up to cfg.workers threads.
SweepResult sweep_nu(const RunConfig& cfg, std::span<const double> nu_list);

/// alpha -> 0 limit at nu = 0 against the alpha = 0 (classical Euler) run.
/// Members share the initial velocity of make_initial_condition(cfg), so
/// their initial q differ by alpha^2 (-Lap omega0).
SweepResult sweep_alpha(const RunConfig& cfg, std::span<const double> alpha_list);

struct SplittingStudy {
  double dt_reference = 0.0;
  SweepResult lie_trotter;
  SweepResult strang;
  SweepResult rk4;
};

/// Errors of Lie-Trotter, Strang and RK4 at cfg.t_final against an RK4
/// run with dt = min(dt_list) / 16. dt_list must be strictly decreasing.
SplittingStudy splitting_order_study(const RunConfig& cfg, std::span<const double> dt_list);

/// L2 distance between the q fields and H^1_alpha distance between the
/// velocities (alpha taken from `a`).
double distance_l2_q(const SimState& a, const SimState& b);
double distance_h1_u(const SimState& a, const SimState& b);

void write_sweep_csv(const std::filesystem::path& path, const SweepResult& result);

}  // namespace ealpha
