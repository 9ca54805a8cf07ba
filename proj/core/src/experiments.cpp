#include "ealpha/experiments.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "ealpha/errors.hpp"
#include "ealpha/initial_conditions.hpp"
#include "ealpha/integrators.hpp"
#include "ealpha/io.hpp"
#include "ealpha/spectral.hpp"

#ifndef EALPHA_VERSION
#define EALPHA_VERSION "unknown"
#endif

namespace ealpha {

namespace {

// Runs task(i) for i in [0, count) on up to `workers` threads. The first
// failure in index order is rethrown after all threads finish.
template <class Task>
void parallel_for(std::size_t count, int workers, Task&& task) {
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        task(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, workers)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

SimState evolve(SimState s, const RunConfig& cfg, const StepperConfig& stepper, const char* parameter,
                double value) {
  try {
    return integrate(s, cfg.t_final, stepper);
  } catch (const NumericalError& e) {
    throw NumericalError(std::string("sweep member ") + parameter + "=" + format_double(value) +
                         " failed: " + e.what());
  }
}

void fill_fit(SweepResult& result) {
  std::vector<double> x;
  std::vector<double> y;
  for (std::size_t i = 0; i < result.values.size(); ++i) {
    if (result.values[i] > 0.0 && result.dist_l2_q[i] > 0.0) {
      x.push_back(result.values[i]);
      y.push_back(result.dist_l2_q[i]);
    }
  }
  result.fitted = x.size() >= 2;
  if (result.fitted) result.fit = fit_loglog(x, y);
}

void require_strictly_decreasing(std::span<const double> values, const char* what) {
  if (values.empty()) throw ConfigError(std::string(what) + " list is empty");
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (!(values[i] < values[i - 1])) throw ConfigError(std::string(what) + " list must be strictly decreasing");
  }
}

}  // namespace

LogLogFit fit_loglog(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fit_loglog needs >= 2 paired samples");
  const std::size_t count = x.size();
  std::vector<double> lx(count);
  std::vector<double> ly(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw std::invalid_argument("fit_loglog needs positive samples");
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
  }
  const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / count;
  const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / count;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_loglog needs distinct abscissae");
  LogLogFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const double r = ly[i] - (fit.intercept + fit.slope * lx[i]);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / count);
  return fit;
}

double distance_l2_q(const SimState& a, const SimState& b) { return l2_norm(a.q_hat - b.q_hat); }

double distance_h1_u(const SimState& a, const SimState& b) {
  const SpectralVector ua = velocity_spectral_from_q(a.q_hat, a.alpha);
  const SpectralVector ub = velocity_spectral_from_q(b.q_hat, b.alpha);
  const SpectralField dx = ua.x - ub.x;
  const SpectralField dy = ua.y - ub.y;
  const double norm2 = integral_product(dx, helmholtz(dx, a.alpha)) + integral_product(dy, helmholtz(dy, a.alpha));
  return std::sqrt(std::max(0.0, norm2));
}

RunSummary run_or_throw(const RunConfig& cfg) {
  cfg.validate();
  const auto started = std::chrono::steady_clock::now();

  std::error_code ec;
  std::filesystem::create_directories(cfg.out_dir, ec);
  if (ec) throw IoError("cannot create output directory " + cfg.out_dir.string() + ": " + ec.message());

  const SimState s0 = make_initial_condition(cfg);
  DiagnosticsWriter csv(cfg.out_dir / "diagnostics.csv");
  const long steps = step_count(0.0, cfg.t_final, cfg.dt);
  const long cadence = std::gcd(cfg.diag_every, cfg.save_every);

  RunSummary summary;
  const Observer observer = [&](const SimState& s, const Diagnostics& d, long step) {
    const bool last = step == steps;
    if (step % cfg.diag_every == 0 || last) csv.append(d);
    if (step % cfg.save_every == 0 || last) write_snapshot(cfg.out_dir / snapshot_filename(step), make_snapshot(s));
    summary.last = d;
  };
  const SimState final_state = integrate(s0, cfg.t_final, cfg.stepper(), observer, cadence);

  summary.steps = steps;
  summary.t_final = final_state.t;
  summary.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  std::ofstream manifest(cfg.out_dir / "manifest.txt", std::ios::trunc);
  if (!manifest) throw IoError("cannot write manifest in " + cfg.out_dir.string());
  manifest << "# ealpha run manifest\n"
           << "version=" << EALPHA_VERSION << '\n'
           << render_config(cfg) << "steps=" << summary.steps << '\n'
           << "t_end=" << format_double(summary.t_final) << '\n'
           << "wall_seconds=" << format_double(summary.wall_seconds) << '\n';
  if (!manifest) throw IoError("cannot write manifest in " + cfg.out_dir.string());
  return summary;
}

int exit_status_for_current_exception(std::ostream& err) {
  try {
    throw;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return 1;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return 2;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return 3;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "I/O error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "configuration error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return 2;
  }
}

int run(const RunConfig& cfg, std::ostream& err) {
  try {
    run_or_throw(cfg);
    return 0;
  } catch (...) {
    return exit_status_for_current_exception(err);
  }
}

SweepResult sweep_nu(const RunConfig& cfg, std::span<const double> nu_list) {
  cfg.validate();
  require_strictly_decreasing(nu_list, "nu");
  for (double nu : nu_list) {
    if (!(nu > 0.0) || !std::isfinite(nu)) throw ConfigError("nu list entries must be positive");
  }

  const SimState s0 = make_initial_condition(cfg);
  const StepperConfig stepper = cfg.stepper();
  std::vector<SimState> finals(nu_list.size() + 1, s0);
  parallel_for(finals.size(), cfg.workers, [&](std::size_t i) {
    const double nu = i == 0 ? 0.0 : nu_list[i - 1];
    finals[i] = evolve(SimState{s0.q_hat, s0.alpha, nu, 0.0}, cfg, stepper, "nu", nu);
  });

  SweepResult result;
  result.parameter = "nu";
  result.label = "zero-viscosity limit";
  for (std::size_t i = 0; i < nu_list.size(); ++i) {
    result.values.push_back(nu_list[i]);
    result.dist_l2_q.push_back(distance_l2_q(finals[i + 1], finals[0]));
    result.dist_h1_u.push_back(distance_h1_u(finals[i + 1], finals[0]));
  }
  fill_fit(result);
  return result;
}

SweepResult sweep_alpha(const RunConfig& cfg, std::span<const double> alpha_list) {
  cfg.validate();
  if (alpha_list.empty()) throw ConfigError("alpha list is empty");
  for (double a : alpha_list) {
    if (!(a >= 0.0) || !std::isfinite(a)) throw ConfigError("alpha list entries must be >= 0");
  }

  // Members share the initial velocity u0 (equivalently omega0); each forms
  // its own q0 = (1 - alpha^2 Lap) omega0.
  const SpectralField omega0 = omega_from_q(make_initial_condition(cfg).q_hat, cfg.alpha);
  const StepperConfig stepper = cfg.stepper();

  std::vector<SimState> finals(alpha_list.size() + 1, state_from_omega(omega0, 0.0, 0.0));
  parallel_for(finals.size(), cfg.workers, [&](std::size_t i) {
    const double alpha = i == 0 ? 0.0 : alpha_list[i - 1];
    finals[i] = evolve(state_from_omega(omega0, alpha, 0.0), cfg, stepper, "alpha", alpha);
  });

  SweepResult result;
  result.parameter = "alpha";
  result.label = "alpha -> 0 Euler limit";
  for (std::size_t i = 0; i < alpha_list.size(); ++i) {
    result.values.push_back(alpha_list[i]);
    result.dist_l2_q.push_back(distance_l2_q(finals[i + 1], finals[0]));
    result.dist_h1_u.push_back(distance_h1_u(finals[i + 1], finals[0]));
  }
  fill_fit(result);
  return result;
}

SplittingStudy splitting_order_study(const RunConfig& cfg, std::span<const double> dt_list) {
  cfg.validate();
  require_strictly_decreasing(dt_list, "dt");
  if (!(dt_list.back() > 0.0)) throw ConfigError("dt list entries must be positive");

  const SimState s0 = make_initial_condition(cfg);
  SplittingStudy study;
  study.dt_reference = dt_list.back() / 16.0;

  constexpr std::array<Scheme, 3> schemes{Scheme::lie_trotter, Scheme::strang, Scheme::rk4};
  // Slot 0 is the reference; then (dt, scheme) pairs.
  std::vector<SimState> finals(1 + dt_list.size() * schemes.size(), s0);
  parallel_for(finals.size(), cfg.workers, [&](std::size_t i) {
    StepperConfig stepper = cfg.stepper();
    if (i == 0) {
      stepper.dt = study.dt_reference;
      stepper.scheme = Scheme::rk4;
    } else {
      stepper.dt = dt_list[(i - 1) / schemes.size()];
      stepper.scheme = schemes[(i - 1) % schemes.size()];
    }
    finals[i] = evolve(s0, cfg, stepper, "dt", stepper.dt);
  });

  SweepResult* results[] = {&study.lie_trotter, &study.strang, &study.rk4};
  for (std::size_t k = 0; k < schemes.size(); ++k) {
    SweepResult& r = *results[k];
    r.parameter = "dt";
    r.label = std::string(to_string(schemes[k]));
    for (std::size_t d = 0; d < dt_list.size(); ++d) {
      const SimState& s = finals[1 + d * schemes.size() + k];
      r.values.push_back(dt_list[d]);
      r.dist_l2_q.push_back(distance_l2_q(s, finals[0]));
      r.dist_h1_u.push_back(distance_h1_u(s, finals[0]));
    }
    fill_fit(r);
  }
  return study;
}

void write_sweep_csv(const std::filesystem::path& path, const SweepResult& result) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << "# " << result.label << '\n';
  if (result.fitted) {
    out << "# slope=" << format_double(result.fit.slope) << " residual=" << format_double(result.fit.residual)
        << " intercept=" << format_double(result.fit.intercept) << '\n';
  } else {
    out << "# slope=unavailable (fewer than two positive distances)\n";
  }
  out << result.parameter << ",dist_l2_q,dist_h1_u\n";
  for (std::size_t i = 0; i < result.values.size(); ++i) {
    out << format_double(result.values[i]) << ',' << format_double(result.dist_l2_q[i]) << ','
        << format_double(result.dist_h1_u[i]) << '\n';
  }
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace ealpha
