#include "ealpha/io.hpp"

#include <array>
#include <bit>
#include <cstdio>
#include <cstring>
#include <sstream>

#include "ealpha/errors.hpp"
#include "ealpha/spectral.hpp"

namespace ealpha {

namespace {

constexpr std::array<char, 4> kMagic{'E', 'A', 'F', '1'};

template <class T>
void put_le(std::string& buf, T value) {
  using U = std::conditional_t<sizeof(T) == 8, std::uint64_t, std::uint32_t>;
  const U bits = std::bit_cast<U>(value);
  for (std::size_t i = 0; i < sizeof(U); ++i) buf.push_back(static_cast<char>((bits >> (8 * i)) & 0xffu));
}

template <class T>
T get_le(const unsigned char* p) {
  using U = std::conditional_t<sizeof(T) == 8, std::uint64_t, std::uint32_t>;
  U bits = 0;
  for (std::size_t i = 0; i < sizeof(U); ++i) bits |= static_cast<U>(p[i]) << (8 * i);
  return std::bit_cast<T>(bits);
}

double relative_drift(double value, double reference) {
  return reference == 0.0 ? 0.0 : (value - reference) / reference;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Snapshot make_snapshot(const SimState& s) {
  const PhysicalField omega = inverse_transform(omega_from_q(s.q_hat, s.alpha));
  Snapshot snap;
  snap.n = static_cast<std::uint32_t>(s.q_hat.grid().n());
  snap.alpha = s.alpha;
  snap.nu = s.nu;
  snap.time = s.t;
  snap.omega.assign(omega.values().begin(), omega.values().end());
  return snap;
}

void write_snapshot(const std::filesystem::path& path, const Snapshot& snap) {
  if (snap.omega.size() != static_cast<std::size_t>(snap.n) * snap.n) {
    throw IoError("snapshot payload does not match n");
  }
  std::string buf(kMagic.begin(), kMagic.end());
  buf.reserve(4 + 4 + 24 + 8 * snap.omega.size());
  put_le(buf, snap.n);
  put_le(buf, snap.alpha);
  put_le(buf, snap.nu);
  put_le(buf, snap.time);
  for (double v : snap.omega) put_le(buf, v);

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!out) throw IoError("write failed for " + path.string());
}

Snapshot read_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open snapshot " + path.string());
  const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  constexpr std::size_t header = 4 + 4 + 3 * 8;
  if (bytes.size() < header || std::memcmp(bytes.data(), kMagic.data(), kMagic.size()) != 0) {
    throw IoError("not an EAF1 snapshot: " + path.string());
  }
  const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
  Snapshot snap;
  snap.n = get_le<std::uint32_t>(p + 4);
  snap.alpha = get_le<double>(p + 8);
  snap.nu = get_le<double>(p + 16);
  snap.time = get_le<double>(p + 24);
  const std::size_t count = static_cast<std::size_t>(snap.n) * snap.n;
  if (bytes.size() != header + 8 * count) throw IoError("truncated snapshot: " + path.string());
  snap.omega.resize(count);
  for (std::size_t i = 0; i < count; ++i) snap.omega[i] = get_le<double>(p + header + 8 * i);
  return snap;
}

std::string snapshot_filename(long step) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "snap_%08ld.eaf", step);
  return buf;
}

DiagnosticsWriter::DiagnosticsWriter(const std::filesystem::path& path) : out_(path, std::ios::trunc), path_(path) {
  if (!out_) throw IoError("cannot open " + path.string() + " for writing");
  out_ << kDiagnosticsHeader << '\n';
}

DiagnosticsRow DiagnosticsWriter::append(const Diagnostics& d) {
  if (!have_reference_) {
    energy0_ = d.energy;
    casimir0_ = d.casimir2;
    have_reference_ = true;
  }
  const DiagnosticsRow row{d.t,          d.energy,    relative_drift(d.energy, energy0_),
                           d.mean_q,     d.casimir2,  relative_drift(d.casimir2, casimir0_),
                           d.enstrophy,  d.max_u,     d.cfl};
  out_ << format_row(row) << '\n';
  out_.flush();
  if (!out_) throw IoError("write failed for " + path_.string());
  return row;
}

std::string format_row(const DiagnosticsRow& row) {
  std::string line;
  for (double v : {row.t, row.energy, row.energy_rel_drift, row.mean_q, row.casimir2, row.casimir2_rel_drift,
                   row.enstrophy, row.max_u, row.cfl}) {
    if (!line.empty()) line.push_back(',');
    line += format_double(v);
  }
  return line;
}

std::vector<DiagnosticsRow> read_diagnostics_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != kDiagnosticsHeader) {
    throw IoError("unexpected diagnostics header in " + path.string());
  }
  std::vector<DiagnosticsRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::array<double, 9> v{};
    std::istringstream fields(line);
    std::string cell;
    std::size_t count = 0;
    while (std::getline(fields, cell, ',')) {
      if (count == v.size()) throw IoError("too many columns in " + path.string());
      char* end = nullptr;
      v[count++] = std::strtod(cell.c_str(), &end);
      if (end == cell.c_str() || *end != '\0') throw IoError("bad number '" + cell + "' in " + path.string());
    }
    if (count != v.size()) throw IoError("too few columns in " + path.string());
    rows.push_back({v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8]});
  }
  return rows;
}

}  // namespace ealpha
