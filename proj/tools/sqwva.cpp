// sqwva: squeezing-assisted weak-value tilt measurement simulator.
//
//   sqwva <subcommand> [--config FILE] [--preset NAME] [--seed N] [--out PATH] [--format csv|json]
//
// Exit codes: 0 ok, 2 config error, 3 numerical error, 4 I/O error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sqwva/cli/config.hpp"
#include "sqwva/cli/emit.hpp"
#include "sqwva/cli/presets.hpp"
#include "sqwva/cli/run.hpp"
#include "sqwva/errors.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;

std::string read_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw sqwva::ConfigError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Relative --out paths land in $SQWVA_OUT_DIR when it is set.
std::string resolve_output(const std::string& out) {
  const std::filesystem::path p(out);
  if (p.is_absolute()) return out;
  if (const char* dir = std::getenv("SQWVA_OUT_DIR"); dir != nullptr && *dir != '\0') {
    return (std::filesystem::path(dir) / p).string();
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Squeezing-assisted weak-value-amplification tilt measurement simulator"};
  app.set_version_flag("--version", sqwva::cli::kVersion);

  std::string subcommand;
  std::string config_path;
  std::string preset_name = "fig3b_lowfreq";
  std::optional<std::uint64_t> seed;
  std::string out_path;
  std::string format = "json";

  app.add_option("subcommand", subcommand, "snr | sensitivity | spectrum | sweep | phasescan | modes")
      ->required()
      ->check(CLI::IsMember(sqwva::cli::subcommands()));
  app.add_option("--config", config_path, "key = value experiment document");
  app.add_option("--preset", preset_name, "fig2_postselection | fig3b_lowfreq | fig4b_phase_scan | fig5_highfreq")
      ->check(CLI::IsMember(std::vector<std::string>(sqwva::cli::preset_names().begin(),
                                                     sqwva::cli::preset_names().end())));
  app.add_option("--seed", seed, "RNG seed for Monte Carlo spectra");
  app.add_option("--out", out_path, "output file (default: stdout)");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    sqwva::cli::ExperimentConfig config = sqwva::cli::preset(preset_name);
    if (!config_path.empty()) config = sqwva::cli::parse_config(read_config(config_path), config);
    if (seed) config.trace.seed = *seed;

    const sqwva::cli::RunResult result = sqwva::cli::run(subcommand, config);
    for (const auto& w : result.warnings) std::cerr << "warning: " << w << '\n';

    const std::string text = format == "csv" ? sqwva::cli::to_csv(result) : sqwva::cli::to_json(result);
    if (out_path.empty()) {
      std::cout << text;
      std::cout.flush();
      if (!std::cout) throw sqwva::cli::IoError("failed writing to stdout");
    } else {
      sqwva::cli::write_file(resolve_output(out_path), text);
    }
  } catch (const sqwva::cli::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const sqwva::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const sqwva::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const sqwva::DomainError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const sqwva::TruncationError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
  return 0;
}
