#include <gtest/gtest.h>

#include <bit>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include "ealpha/config.hpp"
#include "ealpha/errors.hpp"
#include "ealpha/initial_conditions.hpp"
#include "ealpha/io.hpp"
#include "test_support.hpp"

namespace ealpha {
namespace {

namespace fs = std::filesystem;

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "ealpha_test_config_io";
  fs::create_directories(dir);
  return dir / name;
}

std::vector<unsigned char> slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void put_le(std::vector<unsigned char>& out, std::uint64_t bits, int bytes) {
  for (int i = 0; i < bytes; ++i) out.push_back(static_cast<unsigned char>(bits >> (8 * i)));
}

bool same_config(const RunConfig& a, const RunConfig& b) { return render_config(a) == render_config(b); }

TEST(Config, DefaultsAreValid) {
  const RunConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  EXPECT_EQ(cfg.n, 64);
  EXPECT_EQ(cfg.scheme, Scheme::rk4);
}

TEST(Config, ParsesCommentsAndWhitespace) {
  std::istringstream in(
      "# header\n"
      "n = 32\n"
      "alpha=0.1   # trailing\n"
      "\n"
      "scheme=strang\n"
      "ic=single_mode\n"
      "ic_kx=1\n"
      "ic_ky=-3\n"
      "seed=18446744073709551615\n"
      "out=/tmp/some dir\n");
  const RunConfig cfg = parse_config(in);
  EXPECT_EQ(cfg.n, 32);
  EXPECT_EQ(cfg.alpha, 0.1);
  EXPECT_EQ(cfg.scheme, Scheme::strang);
  EXPECT_EQ(cfg.ic, InitialCondition::single_mode);
  EXPECT_EQ(cfg.ic_ky, -3);
  EXPECT_EQ(cfg.seed, 18446744073709551615ull);
  EXPECT_EQ(cfg.out_dir, fs::path("/tmp/some dir"));
  EXPECT_EQ(cfg.nu, RunConfig{}.nu);
}

TEST(Config, RenderRoundTripIsExact) {
  RunConfig cfg;
  cfg.n = 48;
  cfg.alpha = 0.1 + 0.2;
  cfg.nu = 1.0 / 3.0;
  cfg.dt = 2.5e-4;
  cfg.t_final = 7.0;
  cfg.scheme = Scheme::lie_trotter;
  cfg.cfl_limit = 0.9;
  cfg.ic = InitialCondition::taylor_green;
  cfg.ic_amplitude = 1e-300;
  cfg.seed = 12345678901234ull;
  cfg.out_dir = "runs/a";
  cfg.save_every = 7;
  cfg.diag_every = 3;
  cfg.workers = 4;
  std::istringstream in(render_config(cfg));
  const RunConfig back = parse_config(in);
  EXPECT_TRUE(same_config(cfg, back));
  EXPECT_EQ(back.alpha, cfg.alpha);
  EXPECT_EQ(back.nu, cfg.nu);
}

TEST(Config, RejectsMalformedInput) {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return parse_config(in);
  };
  EXPECT_THROW(parse("n=abc\n"), ConfigError);
  EXPECT_THROW(parse("n=32x\n"), ConfigError);
  EXPECT_THROW(parse("bogus=1\n"), ConfigError);
  EXPECT_THROW(parse("just a line\n"), ConfigError);
  EXPECT_THROW(parse("scheme=euler\n"), ConfigError);
  EXPECT_THROW(parse("ic=vortex\n"), ConfigError);
  EXPECT_THROW(parse("out=\n"), ConfigError);
  EXPECT_THROW(load_config(scratch("does_not_exist.cfg")), ConfigError);
}

TEST(Config, ValidationCatchesBadValues) {
  auto invalid = [](auto mutate) {
    RunConfig cfg;
    mutate(cfg);
    EXPECT_THROW(cfg.validate(), ConfigError);
  };
  invalid([](RunConfig& c) { c.n = 7; });
  invalid([](RunConfig& c) { c.n = 6; });
  invalid([](RunConfig& c) { c.alpha = -0.1; });
  invalid([](RunConfig& c) { c.nu = -1; });
  invalid([](RunConfig& c) { c.dt = 0; });
  invalid([](RunConfig& c) { c.cfl_limit = 2; });
  invalid([](RunConfig& c) { c.t_final = std::nan(""); });
  invalid([](RunConfig& c) { c.ic_band = 30; });
  invalid([](RunConfig& c) {
    c.ic = InitialCondition::single_mode;
    c.ic_kx = 0;
    c.ic_ky = 0;
  });
  invalid([](RunConfig& c) {
    c.ic = InitialCondition::single_mode;
    c.ic_kx = 30;
  });
  invalid([](RunConfig& c) { c.save_every = 0; });
  invalid([](RunConfig& c) { c.workers = 0; });
}

TEST(Config, ParseList) {
  EXPECT_EQ(parse_list("1e-2, 5e-3,2.5e-3"), (std::vector<double>{1e-2, 5e-3, 2.5e-3}));
  EXPECT_EQ(parse_list("0.4"), (std::vector<double>{0.4}));
  EXPECT_THROW(parse_list(""), ConfigError);
  EXPECT_THROW(parse_list("1,,2"), ConfigError);
  EXPECT_THROW(parse_list("1,x"), ConfigError);
}

TEST(InitialConditions, SingleModeOccupiesExactlyTwoModes) {
  RunConfig cfg;
  cfg.n = 16;
  cfg.ic = InitialCondition::single_mode;
  cfg.ic_kx = 2;
  cfg.ic_ky = -1;
  cfg.ic_amplitude = 0.75;
  const GridPtr g = TorusGrid::create(16);
  const SpectralField omega = initial_vorticity(cfg, g);
  int nonzero = 0;
  for (std::size_t mode = 0; mode < g->size(); ++mode) nonzero += omega[mode] != Complex{} ? 1 : 0;
  EXPECT_EQ(nonzero, 2);
  EXPECT_EQ(omega.at(2, -1), Complex(0.75 * 256 / 2, 0.0));
  EXPECT_EQ(omega.at(-2, 1), Complex(0.75 * 256 / 2, 0.0));
  const PhysicalField w = inverse_transform(omega);
  EXPECT_NEAR(w.at(3, 5), 0.75 * std::cos(2 * g->coordinate(3) - g->coordinate(5)), 1e-15);
}

TEST(InitialConditions, TaylorGreenClosedForm) {
  RunConfig cfg;
  cfg.n = 16;
  cfg.ic = InitialCondition::taylor_green;
  cfg.ic_amplitude = 2.0;
  const GridPtr g = TorusGrid::create(16);
  const PhysicalField w = inverse_transform(initial_vorticity(cfg, g));
  const PhysicalField expected =
      PhysicalField::sample(g, [](double x, double y) { return 4.0 * std::cos(x) * std::cos(y); });
  EXPECT_LT(testing::max_abs_diff(w, expected), 1e-14);
}

TEST(InitialConditions, RandomIsDeterministicBandLimitedAndNormalized) {
  RunConfig cfg;
  cfg.n = 32;
  cfg.alpha = 0.4;
  cfg.ic_band = 5;
  cfg.ic_energy = 2.5;
  cfg.seed = 77;
  const GridPtr grid = TorusGrid::create(32);
  const SimState a = make_initial_condition(cfg, grid);
  const SimState b = make_initial_condition(cfg, grid);
  for (std::size_t mode = 0; mode < a.q_hat.coeffs().size(); ++mode) ASSERT_EQ(a.q_hat[mode], b.q_hat[mode]);
  EXPECT_NEAR(energy_spectral(a), 2.5, 2.5e-12);
  EXPECT_EQ(a.q_hat[0], Complex{});
  EXPECT_LE(a.q_hat.hermitian_defect(), 0.0);
  const TorusGrid& g = a.q_hat.grid();
  for (std::size_t mode = 0; mode < g.size(); ++mode) {
    if (std::max(std::abs(g.kx(mode)), std::abs(g.ky(mode))) > 5) EXPECT_EQ(a.q_hat[mode], Complex{});
  }
  cfg.seed = 78;
  EXPECT_GT(testing::relative_l2(make_initial_condition(cfg, grid).q_hat, a.q_hat), 0.1);
}

TEST(Snapshot, ByteLayout) {
  Snapshot snap;
  snap.n = 2;
  snap.alpha = 0.25;
  snap.nu = 1e-3;
  snap.time = 1.5;
  snap.omega = {1.0, -2.0, 0.1, 3e-300};
  const fs::path path = scratch("layout.eaf");
  write_snapshot(path, snap);

  std::vector<unsigned char> expected{'E', 'A', 'F', '1'};
  put_le(expected, 2, 4);
  for (double v : {0.25, 1e-3, 1.5, 1.0, -2.0, 0.1, 3e-300}) put_le(expected, std::bit_cast<std::uint64_t>(v), 8);
  EXPECT_EQ(slurp(path), expected);
  EXPECT_EQ(read_snapshot(path), snap);
}

TEST(Snapshot, StateRoundTripIsBitExact) {
  const GridPtr g = TorusGrid::create(16);
  SimState s = testing::random_state(g, 0.3, 5, 4, 0.01);
  s.t = 0.125;
  const Snapshot snap = make_snapshot(s);
  EXPECT_EQ(snap.n, 16u);
  EXPECT_EQ(snap.alpha, 0.3);
  EXPECT_EQ(snap.nu, 0.01);
  EXPECT_EQ(snap.time, 0.125);
  const PhysicalField omega = inverse_transform(omega_from_q(s.q_hat, s.alpha));
  ASSERT_EQ(snap.omega.size(), 256u);
  for (std::size_t i = 0; i < 256; ++i) EXPECT_EQ(snap.omega[i], omega.values()[i]);

  const fs::path path = scratch("state.eaf");
  write_snapshot(path, snap);
  EXPECT_EQ(read_snapshot(path), snap);
  EXPECT_EQ(fs::file_size(path), 32u + 8u * 256u);
}

TEST(Snapshot, CorruptFilesRaiseIoError) {
  EXPECT_THROW(read_snapshot(scratch("missing.eaf")), IoError);
  const fs::path bad_magic = scratch("bad_magic.eaf");
  std::ofstream(bad_magic, std::ios::binary) << "EAF2xxxxxxxxxxxxxxxxxxxxxxxxxxxxxxxxxxxxxxxx";
  EXPECT_THROW(read_snapshot(bad_magic), IoError);

  Snapshot snap{4, 0.0, 0.0, 0.0, std::vector<double>(16, 1.0)};
  const fs::path truncated = scratch("truncated.eaf");
  write_snapshot(truncated, snap);
  fs::resize_file(truncated, fs::file_size(truncated) - 3);
  EXPECT_THROW(read_snapshot(truncated), IoError);

  snap.omega.pop_back();
  EXPECT_THROW(write_snapshot(scratch("mismatch.eaf"), snap), IoError);
  EXPECT_THROW(write_snapshot(scratch("no_such_dir") / "x" / "y.eaf", Snapshot{}), IoError);
}

TEST(Snapshot, FilenamePattern) {
  EXPECT_EQ(snapshot_filename(0), "snap_00000000.eaf");
  EXPECT_EQ(snapshot_filename(1234), "snap_00001234.eaf");
}

TEST(DiagnosticsCsv, HeaderDriftsAndRoundTrip) {
  const fs::path path = scratch("diag.csv");
  {
    DiagnosticsWriter writer(path);
    Diagnostics d{0.0, 2.0, 0.0, 4.0, 1.0, 0.5, 0.1};
    const DiagnosticsRow first = writer.append(d);
    EXPECT_EQ(first.energy_rel_drift, 0.0);
    d.t = 0.1;
    d.energy = 2.0 * (1 + 1e-9);
    d.casimir2 = 3.0;
    const DiagnosticsRow second = writer.append(d);
    EXPECT_NEAR(second.energy_rel_drift, 1e-9, 1e-15);
    EXPECT_DOUBLE_EQ(second.casimir2_rel_drift, -0.25);
  }
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, kDiagnosticsHeader);
  const auto rows = read_diagnostics_csv(path);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1].t, 0.1);
  EXPECT_EQ(rows[1].energy, 2.0 * (1 + 1e-9));
  EXPECT_EQ(rows[1].cfl, 0.1);
}

TEST(DiagnosticsCsv, ZeroReferenceGivesZeroDrift) {
  const fs::path path = scratch("zero.csv");
  DiagnosticsWriter writer(path);
  writer.append(Diagnostics{});
  Diagnostics d;
  d.t = 1.0;
  const DiagnosticsRow row = writer.append(d);
  EXPECT_EQ(row.energy_rel_drift, 0.0);
  EXPECT_EQ(row.casimir2_rel_drift, 0.0);
}

TEST(DiagnosticsCsv, FormatIsSeventeenDigits) {
  DiagnosticsRow row;
  row.t = 0.1;
  row.energy = 1.0 / 3.0;
  EXPECT_EQ(format_row(row), "0.10000000000000001,0.33333333333333331,0,0,0,0,0,0,0");
}

TEST(DiagnosticsCsv, RejectsMalformedFiles) {
  const fs::path path = scratch("bad.csv");
  std::ofstream(path) << "wrong,header\n";
  EXPECT_THROW(read_diagnostics_csv(path), IoError);
  std::ofstream(path) << kDiagnosticsHeader << "\n1,2,3\n";
  EXPECT_THROW(read_diagnostics_csv(path), IoError);
  EXPECT_THROW(read_diagnostics_csv(scratch("absent.csv")), IoError);
}

}  // namespace
}  // namespace ealpha
