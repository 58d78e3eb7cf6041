#include <algorithm>
#include <cmath>
#include <filesystem>
#include <limits>
#include <sstream>
#include <string>

#include "doctest.h"
#include "sqwva/cli/config.hpp"
#include "sqwva/cli/emit.hpp"
#include "sqwva/cli/presets.hpp"
#include "sqwva/cli/run.hpp"
#include "sqwva/errors.hpp"

using namespace sqwva;
using cli::ExperimentConfig;

namespace {

std::string config_error(std::string_view doc) {
  try {
    cli::parse_config(doc, cli::preset("fig3b_lowfreq"));
  } catch (const ConfigError& e) {
    return e.what();
  }
  return {};
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

// A short spectrum run: 64 averages at 4 Hz RBW.
const char* kShortSpectrum =
    "rbw = 4 Hz\n"
    "averages = 64\n"
    "squeeze = 0 dB\n";

}  // namespace

TEST_CASE("presets carry the measured parameters") {
  const ExperimentConfig low = cli::preset("fig3b_lowfreq");
  const ifo::MeasurementConfig& m = low.measurement();
  CHECK(m.input_power.watts == 10e-3);
  CHECK(m.output_power.watts == 260e-6);
  CHECK(m.geometry.wavelength == 1064e-9);
  CHECK(m.geometry.waist_w0 == 1.86e-3);
  CHECK(low.trace.signal_frequency == 4e3);
  CHECK(low.trace.rbw == 1.0);
  CHECK(low.squeeze_db == 2.0);
  CHECK(m.squeeze.r == qs::db_to_r(2.0));
  CHECK(m.tilt_theta == 7.83e-12);

  const ExperimentConfig high = cli::preset("fig5_highfreq");
  CHECK(high.trace.signal_frequency == 500e3);
  CHECK(high.trace.rbw == 30e3);
  CHECK(high.measurement().input_power.watts == 10e-3);
  CHECK(high.measurement().output_power.watts == 260e-6);

  const ExperimentConfig f2 = cli::preset("fig2_postselection");
  CHECK(f2.probabilities == std::vector<double>{0.26, 0.13, 0.052, 0.026});
  for (auto name : cli::preset_names()) CHECK_NOTHROW(cli::preset(name));
  CHECK_THROWS_AS(cli::preset("fig9"), ConfigError);
}

TEST_CASE("parse_config: empty document equals the default preset") {
  const ExperimentConfig a = cli::parse_config("", cli::preset("fig3b_lowfreq"));
  const ExperimentConfig b = cli::preset("fig3b_lowfreq");
  CHECK(cli::run("snr", a) == cli::run("snr", b));
  CHECK(cli::to_json(cli::run("sensitivity", a)) == cli::to_json(cli::run("sensitivity", b)));
  const ExperimentConfig comments = cli::parse_config("# nothing here\n\n   \n", b);
  CHECK(cli::run("snr", comments) == cli::run("snr", b));
}

TEST_CASE("parse_config: units convert to SI") {
  const ExperimentConfig c = cli::parse_config(
      "waist = 1860000 nm\n"
      "wavelength = 1.064 um\n"
      "input_power = 10000 uW\n"
      "output_power = 0.26 mW\n"
      "tilt = 0.00783 nrad\n"
      "lever_arm = 12770 um\n"
      "squeeze = 3 dB\n"
      "signal_frequency = 4 kHz\n",
      cli::preset("fig3b_lowfreq"));
  const ifo::MeasurementConfig& m = c.measurement();
  CHECK(m.geometry.waist_w0 == doctest::Approx(1.86e-3).epsilon(1e-15));
  CHECK(m.geometry.wavelength == doctest::Approx(1064e-9).epsilon(1e-15));
  CHECK(m.input_power.watts == doctest::Approx(10e-3).epsilon(1e-15));
  CHECK(m.output_power.watts == doctest::Approx(260e-6).epsilon(1e-15));
  CHECK(m.tilt_theta == doctest::Approx(7.83e-12).epsilon(1e-15));
  CHECK(m.lever_arm_l == doctest::Approx(12.77e-3).epsilon(1e-15));
  CHECK(m.squeeze.r == doctest::Approx(qs::db_to_r(3.0)).epsilon(1e-15));
  CHECK(m.relative_phase_phi == doctest::Approx(ifo::phi_for_probability(0.026)).epsilon(1e-12));
  CHECK(cli::parse_quantity("85 prad", "angle") == doctest::Approx(85e-12));
  CHECK(cli::parse_quantity("1.08 pm", "length") == doctest::Approx(1.08e-12));
  CHECK(cli::parse_quantity("2.6 %", "fraction") == doctest::Approx(0.026));
}

TEST_CASE("parse_config: lists and other keys") {
  const ExperimentConfig c = cli::parse_config(
      "probabilities = 26, 13, 5.2, 2.6 %\n"
      "squeeze_levels = 0, 1.5, 3 dB\n"
      "sweep = squeezing\n"
      "window = rect\n"
      "seed = 17\n"
      "flipped_mode = true\n",
      cli::preset("fig2_postselection"));
  CHECK(c.probabilities[0] == doctest::Approx(0.26));
  CHECK(c.probabilities[3] == doctest::Approx(0.026));
  CHECK(c.squeeze_levels_db == std::vector<double>{0.0, 1.5, 3.0});
  CHECK(c.sweep == cli::SweepKind::squeezing);
  CHECK(c.trace.window == spectra::Window::rect);
  CHECK(c.trace.seed == 17);
  CHECK(c.measurement().flipped_mode_input);
  CHECK(cli::config_keys().size() >= 20);
}

TEST_CASE("parse_config: diagnostics name the line and key") {
  CHECK(config_error("bogus = 1").find("line 1") != std::string::npos);
  CHECK(config_error("bogus = 1").find("unknown key 'bogus'") != std::string::npos);
  const std::string missing_unit = config_error("# header\nwaist = 1.86");
  CHECK(missing_unit.find("line 2") != std::string::npos);
  CHECK(missing_unit.find("waist") != std::string::npos);
  CHECK(config_error("waist = 1.86 parsecs").find("unknown length unit") != std::string::npos);
  CHECK(config_error("tilt = 1 mrad").find("0.1") != std::string::npos);  // first-order limit
  CHECK(!config_error("squeeze = 1 dB\nsqueeze = 2 dB").empty());
  CHECK(!config_error("waist 1.86 mm").empty());
  CHECK(!config_error("input_power = -3 mW").empty());
  CHECK(!config_error("duration = 10 s\naverages = 8").empty());
  CHECK(!config_error("probabilities = 0.5, 1.5").empty());
  CHECK(!config_error("window = flattop").empty());
  CHECK(!config_error("modes_max = 40").empty());
  CHECK(!config_error("efficiency = 2").empty());
}

TEST_CASE("run snr: analytic values") {
  const ExperimentConfig r0 = cli::parse_config("squeeze = 0 dB", cli::preset("fig3b_lowfreq"));
  const cli::RunResult r = cli::run("snr", r0);
  CHECK(std::abs(r.scalar("snr_db") - 24.0) < 0.5);
  CHECK(r.scalar("weak_value") == doctest::Approx(6.12058317985618602).epsilon(1e-12));
  CHECK(r.scalar("postselection_probability") == doctest::Approx(0.026).epsilon(1e-14));
  CHECK(cli::run("snr", cli::preset("fig3b_lowfreq")).scalar("snr_db") - r.scalar("snr_db") ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(r.scalar("nope"), std::out_of_range);
  CHECK_THROWS_AS(cli::run("bogus", r0), ConfigError);
}

TEST_CASE("run sensitivity: 2 dB squeezing") {
  const cli::RunResult r = cli::run("sensitivity", cli::preset("fig3b_lowfreq"));
  CHECK(r.scalar("displacement_density_m_per_rthz") == doctest::Approx(5.06742961184282377e-15).epsilon(1e-12));
  CHECK(r.scalar("tilt_density_rad_per_rthz") == doctest::Approx(3.96822992313455268e-13).epsilon(1e-12));
}

TEST_CASE("run sweep: postselection table is monotone") {
  const cli::RunResult r = cli::run("sweep", cli::preset("fig2_postselection"));
  REQUIRE(r.columns.size() >= 2);
  CHECK(r.columns[0] == "p_f");
  CHECK(r.columns[1] == "snr_db");
  REQUIRE(r.rows.size() == 4);
  for (std::size_t i = 1; i < r.rows.size(); ++i) {
    CHECK(r.rows[i][0] < r.rows[i - 1][0]);
    CHECK(r.rows[i][1] > r.rows[i - 1][1]);
  }
  const std::string csv = cli::to_csv(r);
  CHECK(csv.rfind("p_f,snr_db", 0) == 0);
  CHECK(count_lines(csv) == 5);
}

TEST_CASE("run phasescan and modes") {
  const cli::RunResult p = cli::run("phasescan", cli::preset("fig4b_phase_scan"));
  CHECK(p.rows.size() == 256);
  CHECK(p.scalar("min_max_product") == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p.scalar("min_variance") == doctest::Approx(std::pow(10.0, -0.2)).epsilon(1e-12));

  const ExperimentConfig small = cli::parse_config("modes_max = 4", cli::preset("fig3b_lowfreq"));
  const cli::RunResult m = cli::run("modes", small);
  CHECK(m.rows.size() == 25);
  CHECK(m.scalar("max_orthonormality_error") < 1e-9);
  CHECK(std::abs(m.scalar("split_overlap_1_0") - m.scalar("sqrt_2_over_pi")) < 1e-9);
  CHECK(m.scalar("flipped_c1") == m.scalar("split_overlap_1_0"));
}

TEST_CASE("run spectrum: CSV shape and floor normalization") {
  const ExperimentConfig c = cli::parse_config(kShortSpectrum, cli::preset("fig3b_lowfreq"));
  const cli::RunResult r = cli::run("spectrum", c);
  REQUIRE(r.columns.size() >= 2);
  CHECK(r.columns[0] == "frequency_hz");
  CHECK(r.columns[1] == "psd_db_rel_snl");
  const std::size_t bins = c.trace.segment_length() / 2 + 1;
  CHECK(r.rows.size() == bins);
  CHECK(count_lines(cli::to_csv(r)) == bins + 1);
  CHECK(std::abs(r.scalar("floor_rel_snl_db")) < 0.2);
  // Median of the SNL-relative column away from the tone.
  std::vector<double> rel;
  for (const auto& row : r.rows) {
    if (row[0] > 0.0 && std::abs(row[0] - 4e3) > 20.0 && row[0] < 8e3) rel.push_back(row[1]);
  }
  std::nth_element(rel.begin(), rel.begin() + static_cast<std::ptrdiff_t>(rel.size() / 2), rel.end());
  CHECK(std::abs(rel[rel.size() / 2]) < 0.2);
  CHECK(r.warnings.empty());
}

TEST_CASE("run spectrum: reproducible to the byte") {
  const ExperimentConfig c = cli::parse_config(kShortSpectrum, cli::preset("fig3b_lowfreq"));
  CHECK(cli::to_csv(cli::run("spectrum", c)) == cli::to_csv(cli::run("spectrum", c)));
  CHECK(cli::to_json(cli::run("spectrum", c)) == cli::to_json(cli::run("spectrum", c)));
  ExperimentConfig other = c;
  other.trace.seed += 1;
  CHECK(cli::to_csv(cli::run("spectrum", other)) != cli::to_csv(cli::run("spectrum", c)));
}

TEST_CASE("emit_json: round trip") {
  for (const char* sub : {"snr", "sensitivity", "sweep", "phasescan"}) {
    const cli::RunResult r = cli::run(sub, cli::preset("fig2_postselection"));
    const cli::RunResult back = cli::from_json(cli::to_json(r));
    CHECK(back.subcommand == r.subcommand);
    CHECK(back.preset == "fig2_postselection");
    CHECK(back.seed == r.seed);
    CHECK(back.version == cli::kVersion);
    CHECK(back.settings == r.settings);
    REQUIRE(back.scalars.size() == r.scalars.size());
    for (std::size_t i = 0; i < r.scalars.size(); ++i) {
      CHECK(back.scalars[i].first == r.scalars[i].first);
      CHECK(back.scalars[i].second == doctest::Approx(r.scalars[i].second).epsilon(1e-11));
    }
    REQUIRE(back.config.size() == r.config.size());
    for (std::size_t i = 0; i < r.config.size(); ++i) {
      CHECK(back.config[i].second == doctest::Approx(r.config[i].second).epsilon(1e-11));
    }
    REQUIRE(back.rows.size() == r.rows.size());
    // A second pass is exact: the emitted text is a fixed point.
    CHECK(cli::to_json(back) == cli::to_json(r));
  }
  CHECK_THROWS_AS(cli::from_json("{"), cli::IoError);
}

TEST_CASE("format_number and write_file") {
  CHECK(cli::format_number(0.1) == "0.1");
  CHECK(cli::format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(cli::format_number(-std::numeric_limits<double>::infinity()) == "-inf");
  CHECK_THROWS_AS(cli::write_file("/nonexistent-dir/x/y.csv", "a"), cli::IoError);
  const auto path = std::filesystem::temp_directory_path() / "sqwva_write_test.txt";
  cli::write_file(path.string(), "hello\n");
  CHECK(std::filesystem::file_size(path) == 6);
  std::filesystem::remove(path);
}
