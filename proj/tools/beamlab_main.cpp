// beamlab: parameter scans, witness experiments, physicality and separability
// classification, and closed-form vs numeric-oracle comparisons.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "beamlab/cli/commands.hpp"
#include "beamlab/errors.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

struct Flags {
  std::string config_path;
  std::string out;
  std::string format;
  std::string family;
  std::vector<std::string> params;
  std::string scan_axis;
  std::string scan_range;
  std::string z_range;
  bool verify = false;
  bool numeric = false;
  std::optional<std::uint64_t> seed;
  std::optional<int> draws;
};

beamlab::cli::ScanConfig build_config(const Flags& f) {
  using namespace beamlab::cli;
  ScanConfig c;
  if (!f.config_path.empty()) {
    c = load_config(f.config_path);
  } else if (f.family.empty()) {
    throw beamlab::ParameterError("config field 'family': required (use --config or --family)");
  }
  if (!f.family.empty()) c.family = family_from_string(f.family);
  for (const auto& kv : f.params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw beamlab::ParameterError("config field 'parameters': expected name=value, got '" + kv + "'");
    }
    const std::string name = kv.substr(0, eq);
    c.parameters.insert_or_assign(name, parse_param_text(std::string_view(kv).substr(eq + 1), name));
  }
  if (!f.scan_axis.empty()) c.scan_axis = f.scan_axis;
  if (!f.scan_range.empty()) c.scan_range = parse_range(f.scan_range, "scan_range");
  if (!f.z_range.empty()) c.z_range = parse_range(f.z_range, "z_range");
  if (!f.out.empty()) c.output_path = f.out;
  if (!f.format.empty()) c.output_format = format_from_string(f.format);
  c.verify = c.verify || f.verify;
  c.numeric = c.numeric || f.numeric;
  if (f.seed) c.seed = f.seed;
  if (f.draws) c.draws = *f.draws;
  c.validate();
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"beamlab: paraxial Gaussian beam coherence and entanglement toolkit"};
  app.require_subcommand(1);
  Flags flags;

  const std::pair<const char*, const char*> commands[] = {
      {"propagate", "Width, curvature and Guoy phase along z (coherent1d, gsm, elliptic2d)"},
      {"witness", "Projected-width entanglement witness (elliptic2d)"},
      {"physicality", "Uncertainty-principle check over a scan (tgsm, curv)"},
      {"classify", "Separable / Entangled / Unphysical verdict (tgsm, curv, agsm)"},
      {"pt", "Partial transpose of the variance matrix (tgsm, curv, agsm)"},
      {"compare-oracle", "Closed forms against the numeric oracle (any family)"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", flags.config_path, "JSON scan configuration");
    sub->add_option("--out", flags.out, "Output file (default stdout)");
    sub->add_option("--format", flags.format, "csv or json");
    sub->add_option("--family", flags.family, "coherent1d, gsm, elliptic2d, tgsm, curv or agsm");
    sub->add_option("--param", flags.params, "Parameter override name=value (repeatable; value may be inf)");
    sub->add_option("--scan-axis", flags.scan_axis, "Parameter to scan");
    sub->add_option("--scan-range", flags.scan_range, "start,stop,steps");
    sub->add_option("--z-range", flags.z_range, "start,stop,steps");
    sub->add_flag("--verify", flags.verify, "Add numeric-oracle columns");
    sub->add_flag("--numeric", flags.numeric, "Rerun through the numeric oracle");
    sub->add_option("--seed", flags.seed, "Seed for randomized parameter draws");
    sub->add_option("--draws", flags.draws, "Number of random draws with --seed");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  try {
    const std::string name = app.get_subcommands().front()->get_name();
    const auto config = build_config(flags);
    const auto out = beamlab::cli::run_command(name, config);
    beamlab::cli::emit(out, config, std::cout);
  } catch (const beamlab::ParameterError& e) {
    std::cerr << "beamlab: " << e.what() << '\n';
    return kExitConfig;
  } catch (const beamlab::NumericalGuardError& e) {
    std::cerr << "beamlab: numerical guard: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::invalid_argument& e) {
    std::cerr << "beamlab: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "beamlab: " << e.what() << '\n';
    return kExitNumeric;
  }
  return 0;
}
