#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "ealpha/dynamics.hpp"

namespace ealpha {

/// Physical-space vorticity snapshot.
///
/// Binary layout (little-endian): magic "EAF1", u32 n, f64 alpha, f64 nu,
/// f64 time, then n*n f64 samples of omega, row-major with y fastest.
struct Snapshot {
  std::uint32_t n = 0;
  double alpha = 0.0;
  double nu = 0.0;
  double time = 0.0;
  std::vector<double> omega;

  bool operator==(const Snapshot&) const = default;
};

Snapshot make_snapshot(const SimState& s);
void write_snapshot(const std::filesystem::path& path, const Snapshot& snap);
/// Throws IoError on a missing file, bad magic or truncated payload.
Snapshot read_snapshot(const std::filesystem::path& path);
/// snap_<step:08>.eaf
std::string snapshot_filename(long step);

/// One row of the diagnostics CSV.
struct DiagnosticsRow {
  double t = 0.0;
  double energy = 0.0;
  double energy_rel_drift = 0.0;
  double mean_q = 0.0;
  double casimir2 = 0.0;
  double casimir2_rel_drift = 0.0;
  double enstrophy = 0.0;
  double max_u = 0.0;
  double cfl = 0.0;

  bool operator==(const DiagnosticsRow&) const = default;
};

inline constexpr const char* kDiagnosticsHeader =
    "t,energy,energy_rel_drift,mean_q,casimir2,casimir2_rel_drift,enstrophy,max_u,cfl";

/// Streams diagnostics rows; drifts are relative to the first row written.
class DiagnosticsWriter {
 public:
  explicit DiagnosticsWriter(const std::filesystem::path& path);

  DiagnosticsRow append(const Diagnostics& d);

 private:
  std::ofstream out_;
  std::filesystem::path path_;
  bool have_reference_ = false;
  double energy0_ = 0.0;
  double casimir0_ = 0.0;
};

/// Values are written with 17 significant digits, so reading back is exact.
std::string format_row(const DiagnosticsRow& row);
std::vector<DiagnosticsRow> read_diagnostics_csv(const std::filesystem::path& path);

}  // namespace ealpha
