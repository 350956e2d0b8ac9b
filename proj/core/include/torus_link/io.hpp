#pragma once

// JSON front end shared by the CLI and the tests: input parsing/validation,
// command dispatch, and deterministic report rendering.
//
// Input schema (t3 mode; t2 uses 2-entry direction/origin arrays):
//   {
//     "mode": "t3",
//     "gamma":   [ {"direction": [1,0,0], "origin": ["0","0","0"]} ],
//     "upsilon": [ {"direction": [0,1,0], "origin": ["0","0","1/4"]} ],
//     "options": { "t": [1e-4], "kmax": "auto", "frequency_cutoff": 0,
//                  "tol": 1e-5, "require_trivial": false }
//   }
// Rationals travel as strings ("p/q" or "p") so no exact datum passes through
// binary floating point. Reports are emitted with a fixed key order and
// floats at 17 significant digits, so identical inputs produce byte-identical
// output.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torus_link/geodesic.hpp"
#include "torus_link/t2.hpp"

namespace torus_link {
namespace io {

enum class Mode { t3, t2 };

enum class Command { closed_form, spectral, oracle, verify, t2_corollary };

const char* to_string(Command cmd);
std::optional<Command> command_from_string(const std::string& name);

struct CurveConfig {
  std::vector<Integer> direction;
  std::vector<Rational> origin;

  friend bool operator==(const CurveConfig&, const CurveConfig&) = default;
};

struct ConfigOptions {
  std::vector<double> t_schedule;  // empty: command default
  std::optional<long> kmax;        // nullopt: auto
  long frequency_cutoff = 0;       // 0: auto
  double tol = 1e-5;               // verify agreement tolerance
  bool require_trivial = false;

  friend bool operator==(const ConfigOptions&, const ConfigOptions&) = default;
};

struct InputConfig {
  Mode mode = Mode::t3;
  std::vector<CurveConfig> gamma;
  std::vector<CurveConfig> upsilon;
  ConfigOptions options;

  friend bool operator==(const InputConfig&, const InputConfig&) = default;
};

// Parses and validates a UTF-8 JSON document. Origins are reduced mod 1.
// Throws ParseError (malformed JSON, with position info) or ValidationError
// (schema violations, with the offending field path).
InputConfig parse_input(const std::string& json_text);

// Canonical serialization; parse_input(serialize_config(c)) == c.
std::string serialize_config(const InputConfig& config);

// Exact collections for the t3 commands. Throws ValidationError on t2 input.
std::pair<MultiGeodesic, MultiGeodesic> t3_collections(const InputConfig& config);

// Collections for the t2 command. Throws ValidationError on t3 input.
std::pair<std::vector<t2::T2Geodesic>, std::vector<t2::T2Geodesic>> t2_collections(
    const InputConfig& config);

struct RunResult {
  std::string json;    // single-line canonical JSON report, newline-terminated
  std::string pretty;  // human-readable summary for --pretty
  int exit_code = 0;   // 0 success/agreement, 2 verify disagreement
};

// Dispatches a command. Domain errors (intersecting curves, non-trivial
// homology under require_trivial, persistent oracle degeneracy, ...) are
// thrown as Error; the caller renders them with error_json and exits 1.
RunResult run(Command cmd, const InputConfig& config);

// Structured stderr rendering of a failure.
std::string error_json(const Error& e);

}  // namespace io
}  // namespace torus_link
