// torus-link: linking numbers of closed geodesic collections on the flat
// 3-torus, by exact closed form, heat-regularized spectral series and a
// PL bounding-surface oracle, plus the flow-orbit special case on T^2.
//
// JSON configuration on --input or stdin, JSON report on stdout (--pretty for
// a human summary). Exit 0 on success/agreement, 2 when verify detects a
// method disagreement, 1 on any input or domain error (rendered as a
// structured JSON object on stderr).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "torus_link/errors.hpp"
#include "torus_link/io.hpp"

namespace {

constexpr int kExitFailure = 1;

struct Args {
  std::string input_path;
  std::vector<double> t_values;
  std::string kmax;
  double tol = 0.0;
  bool require_trivial = false;
  bool pretty = false;
};

void add_common_options(CLI::App* sub, Args& args) {
  sub->add_option("--input", args.input_path,
                  "Path to the JSON configuration (default: read stdin)");
  sub->add_option("--t", args.t_values, "Heat time; repeat for a schedule");
  sub->add_option("--kmax", args.kmax, "Pair-series cutoff: nonnegative integer or 'auto'");
  sub->add_option("--tol", args.tol, "Agreement tolerance for verify");
  sub->add_flag("--require-trivial", args.require_trivial,
                "Fail on homologically nontrivial collections");
  sub->add_flag("--pretty", args.pretty, "Print a human summary instead of JSON");
}

std::string read_input(const std::string& path) {
  if (path.empty()) {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) {
    throw torus_link::Error(torus_link::ErrorCode::ValidationError,
                            "cannot open input file: " + path);
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

long parse_kmax(const std::string& text) {
  try {
    std::size_t used = 0;
    const long value = std::stol(text, &used);
    if (used != text.size() || value < 0) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw torus_link::Error(torus_link::ErrorCode::ValidationError,
                            "--kmax expects a nonnegative integer or 'auto'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linking numbers of geodesic collections on flat tori"};
  app.require_subcommand(1);

  Args args;
  CLI::App* closed = app.add_subcommand("closed-form", "Exact rational linking number");
  CLI::App* spectral = app.add_subcommand("spectral", "Heat-regularized spectral series");
  CLI::App* oracle = app.add_subcommand("oracle", "PL bounding-surface crossing count");
  CLI::App* verify = app.add_subcommand("verify", "Run all three methods and diff them");
  CLI::App* t2 = app.add_subcommand("t2", "Angle-weighted sum for T^2 flow orbits");
  for (CLI::App* sub : {closed, spectral, oracle, verify, t2}) {
    add_common_options(sub, args);
  }

  CLI11_PARSE(app, argc, argv);

  namespace io = torus_link::io;
  CLI::App* chosen = app.get_subcommands().front();
  const auto command = io::command_from_string(chosen->get_name());
  if (!command) {
    std::cerr << "unknown subcommand\n";
    return kExitFailure;
  }

  try {
    io::InputConfig config = io::parse_input(read_input(args.input_path));
    if (!args.t_values.empty()) config.options.t_schedule = args.t_values;
    if (chosen->count("--kmax") > 0) {
      if (args.kmax == "auto") {
        config.options.kmax.reset();
      } else {
        config.options.kmax = parse_kmax(args.kmax);
      }
    }
    if (chosen->count("--tol") > 0) {
      if (!(args.tol > 0.0)) {
        throw torus_link::Error(torus_link::ErrorCode::ValidationError,
                                "--tol expects a positive number");
      }
      config.options.tol = args.tol;
    }
    if (args.require_trivial) config.options.require_trivial = true;

    const io::RunResult result = io::run(*command, config);
    std::cout << (args.pretty ? result.pretty : result.json);
    return result.exit_code;
  } catch (const torus_link::Error& e) {
    std::cerr << io::error_json(e);
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << io::error_json(
        torus_link::Error(torus_link::ErrorCode::Internal, e.what()));
    return kExitFailure;
  }
}
