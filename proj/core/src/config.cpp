#include "ealpha/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ealpha/errors.hpp"

namespace ealpha {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <class T>
T parse_number(std::string_view key, std::string_view text) {
  text = trim(text);
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError("invalid value '" + std::string(text) + "' for key '" + std::string(key) + "'");
  }
  return value;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string_view to_string(InitialCondition ic) {
  switch (ic) {
    case InitialCondition::single_mode:
      return "single_mode";
    case InitialCondition::taylor_green:
      return "taylor_green";
    case InitialCondition::random_bandlimited:
      return "random_bandlimited";
  }
  return "unknown";
}

InitialCondition parse_initial_condition(std::string_view name) {
  if (name == "single_mode") return InitialCondition::single_mode;
  if (name == "taylor_green") return InitialCondition::taylor_green;
  if (name == "random_bandlimited") return InitialCondition::random_bandlimited;
  throw ConfigError("unknown initial condition '" + std::string(name) + "'");
}

void RunConfig::validate() const {
  if (n < 8 || n % 2 != 0) throw ConfigError("n must be even and >= 8");
  for (const auto& [name, value] : {std::pair{"alpha", alpha}, {"nu", nu}, {"t_final", t_final},
                                    {"ic_amplitude", ic_amplitude}, {"ic_energy", ic_energy}}) {
    if (!std::isfinite(value)) throw ConfigError(std::string(name) + " must be finite");
  }
  if (alpha < 0.0) throw ConfigError("alpha must be >= 0");
  if (nu < 0.0) throw ConfigError("nu must be >= 0");
  if (t_final < 0.0) throw ConfigError("t_final must be >= 0");
  if (ic_energy < 0.0) throw ConfigError("ic_energy must be >= 0");
  stepper().validate();
  if (ic_band < 1 || 3 * ic_band >= n) throw ConfigError("ic_band must satisfy 1 <= ic_band < n/3");
  if (ic == InitialCondition::single_mode && (ic_kx == 0 && ic_ky == 0)) {
    throw ConfigError("single_mode needs a nonzero wave vector");
  }
  if (ic == InitialCondition::single_mode && (3 * std::abs(ic_kx) >= n || 3 * std::abs(ic_ky) >= n)) {
    throw ConfigError("single_mode wave vector lies outside the dealiased band");
  }
  if (save_every < 1 || diag_every < 1) throw ConfigError("save_every and diag_every must be >= 1");
  if (workers < 1) throw ConfigError("workers must be >= 1");
}

void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value) {
  value = trim(value);
  if (key == "n") {
    cfg.n = parse_number<int>(key, value);
  } else if (key == "alpha") {
    cfg.alpha = parse_number<double>(key, value);
  } else if (key == "nu") {
    cfg.nu = parse_number<double>(key, value);
  } else if (key == "dt") {
    cfg.dt = parse_number<double>(key, value);
  } else if (key == "t_final") {
    cfg.t_final = parse_number<double>(key, value);
  } else if (key == "scheme") {
    cfg.scheme = parse_scheme(value);
  } else if (key == "cfl_limit") {
    cfg.cfl_limit = parse_number<double>(key, value);
  } else if (key == "ic") {
    cfg.ic = parse_initial_condition(value);
  } else if (key == "ic_kx") {
    cfg.ic_kx = parse_number<int>(key, value);
  } else if (key == "ic_ky") {
    cfg.ic_ky = parse_number<int>(key, value);
  } else if (key == "ic_band") {
    cfg.ic_band = parse_number<int>(key, value);
  } else if (key == "ic_amplitude") {
    cfg.ic_amplitude = parse_number<double>(key, value);
  } else if (key == "ic_energy") {
    cfg.ic_energy = parse_number<double>(key, value);
  } else if (key == "seed") {
    cfg.seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "out" || key == "out_dir") {
    if (value.empty()) throw ConfigError("out must not be empty");
    cfg.out_dir = std::string(value);
  } else if (key == "save_every") {
    cfg.save_every = parse_number<long>(key, value);
  } else if (key == "diag_every") {
    cfg.diag_every = parse_number<long>(key, value);
  } else if (key == "workers") {
    cfg.workers = parse_number<int>(key, value);
  } else {
    throw ConfigError("unknown configuration key '" + std::string(key) + "'");
  }
}

RunConfig parse_config(std::istream& in, RunConfig base) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected key=value");
    }
    apply_setting(base, trim(view.substr(0, eq)), view.substr(eq + 1));
  }
  return base;
}

RunConfig load_config(const std::filesystem::path& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  return parse_config(in, std::move(base));
}

std::string render_config(const RunConfig& cfg) {
  std::ostringstream out;
  out << "n=" << cfg.n << '\n'
      << "alpha=" << format_double(cfg.alpha) << '\n'
      << "nu=" << format_double(cfg.nu) << '\n'
      << "dt=" << format_double(cfg.dt) << '\n'
      << "t_final=" << format_double(cfg.t_final) << '\n'
      << "scheme=" << to_string(cfg.scheme) << '\n'
      << "cfl_limit=" << format_double(cfg.cfl_limit) << '\n'
      << "ic=" << to_string(cfg.ic) << '\n'
      << "ic_kx=" << cfg.ic_kx << '\n'
      << "ic_ky=" << cfg.ic_ky << '\n'
      << "ic_band=" << cfg.ic_band << '\n'
      << "ic_amplitude=" << format_double(cfg.ic_amplitude) << '\n'
      << "ic_energy=" << format_double(cfg.ic_energy) << '\n'
      << "seed=" << cfg.seed << '\n'
      << "out=" << cfg.out_dir.string() << '\n'
      << "save_every=" << cfg.save_every << '\n'
      << "diag_every=" << cfg.diag_every << '\n'
      << "workers=" << cfg.workers << '\n';
  return out.str();
}

std::vector<double> parse_list(std::string_view text) {
  std::vector<double> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    if (item.empty()) throw ConfigError("empty entry in list");
    out.push_back(parse_number<double>("list", item));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (out.empty()) throw ConfigError("empty list");
  return out;
}

}  // namespace ealpha
