#include "torus_link/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "torus_link/closed_form.hpp"
#include "torus_link/errors.hpp"
#include "torus_link/lattice.hpp"
#include "torus_link/oracle.hpp"
#include "torus_link/rational.hpp"
#include "torus_link/spectral.hpp"

namespace torus_link {
namespace io {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Deterministic JSON rendering: insertion-order keys, floats at 17 significant
// digits (enough to reparse the identical binary64), rationals as strings.

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void emit_string(const std::string& s, std::string& out) {
  out += '"';
  for (const char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  out += '"';
}

void emit_json(const ojson& v, std::string& out) {
  switch (v.type()) {
    case ojson::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, value] : v.items()) {
        if (!first) out += ',';
        first = false;
        emit_string(key, out);
        out += ':';
        emit_json(value, out);
      }
      out += '}';
      break;
    }
    case ojson::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& value : v) {
        if (!first) out += ',';
        first = false;
        emit_json(value, out);
      }
      out += ']';
      break;
    }
    case ojson::value_t::string:
      emit_string(v.get_ref<const std::string&>(), out);
      break;
    case ojson::value_t::boolean:
      out += v.get<bool>() ? "true" : "false";
      break;
    case ojson::value_t::number_integer:
      out += std::to_string(v.get<std::int64_t>());
      break;
    case ojson::value_t::number_unsigned:
      out += std::to_string(v.get<std::uint64_t>());
      break;
    case ojson::value_t::number_float:
      out += format_double(v.get<double>());
      break;
    default:
      out += "null";
  }
}

std::string render(const ojson& v) {
  std::string out;
  emit_json(v, out);
  return out;
}

// ---------------------------------------------------------------------------
// Input validation with field paths.

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::ValidationError, path + ": " + what);
}

Integer parse_direction_entry(const json& v, const std::string& path) {
  if (!v.is_number_integer() && !v.is_number_unsigned()) {
    fail(path, "directions must be JSON integers");
  }
  if (v.is_number_unsigned() &&
      v.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    fail(path, "direction entry out of range");
  }
  return Integer(v.get<std::int64_t>());
}

Rational parse_origin_entry(const json& v, const std::string& path) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const Error& e) {
      fail(path, e.what());
    }
  }
  if (v.is_number_integer() || v.is_number_unsigned()) {
    return Rational(parse_direction_entry(v, path));
  }
  fail(path, "origins must be exact rationals: integers or \"p/q\" strings");
}

CurveConfig parse_curve(const json& v, std::size_t dims, const std::string& path) {
  if (!v.is_object()) fail(path, "must be an object with direction and origin");
  for (const auto& [key, value] : v.items()) {
    (void)value;
    if (key != "direction" && key != "origin") fail(path + "." + key, "unknown field");
  }
  if (!v.contains("direction")) fail(path + ".direction", "missing field");
  if (!v.contains("origin")) fail(path + ".origin", "missing field");

  const json& dir = v["direction"];
  const json& orig = v["origin"];
  const std::string want = std::to_string(dims);
  if (!dir.is_array() || dir.size() != dims) {
    fail(path + ".direction", "must be an array of " + want + " integers");
  }
  if (!orig.is_array() || orig.size() != dims) {
    fail(path + ".origin", "must be an array of " + want + " rationals");
  }

  CurveConfig curve;
  bool all_zero = true;
  for (std::size_t i = 0; i < dims; ++i) {
    curve.direction.push_back(
        parse_direction_entry(dir[i], path + ".direction[" + std::to_string(i) + "]"));
    if (curve.direction.back() != 0) all_zero = false;
  }
  if (all_zero) fail(path + ".direction", "direction must be nonzero");
  for (std::size_t i = 0; i < dims; ++i) {
    curve.origin.push_back(
        frac(parse_origin_entry(orig[i], path + ".origin[" + std::to_string(i) + "]")));
  }
  return curve;
}

std::vector<CurveConfig> parse_collection(const json& v, std::size_t dims,
                                          const std::string& path) {
  if (!v.is_array() || v.empty()) fail(path, "must be a nonempty array of curves");
  std::vector<CurveConfig> curves;
  for (std::size_t i = 0; i < v.size(); ++i) {
    curves.push_back(parse_curve(v[i], dims, path + "[" + std::to_string(i) + "]"));
  }
  return curves;
}

double parse_positive_number(const json& v, const std::string& path) {
  if (!v.is_number()) fail(path, "must be a number");
  const double x = v.get<double>();
  if (!(x > 0.0) || !std::isfinite(x)) fail(path, "must be a positive finite number");
  return x;
}

ConfigOptions parse_options(const json& v, const std::string& path) {
  ConfigOptions opts;
  if (!v.is_object()) fail(path, "must be an object");
  for (const auto& [key, value] : v.items()) {
    const std::string field = path + "." + key;
    if (key == "t") {
      if (value.is_array()) {
        for (std::size_t i = 0; i < value.size(); ++i) {
          opts.t_schedule.push_back(
              parse_positive_number(value[i], field + "[" + std::to_string(i) + "]"));
        }
      } else {
        opts.t_schedule.push_back(parse_positive_number(value, field));
      }
    } else if (key == "kmax") {
      if (value.is_string() && value.get<std::string>() == "auto") {
        opts.kmax.reset();
      } else if (value.is_number_integer() && value.get<std::int64_t>() >= 0) {
        opts.kmax = static_cast<long>(value.get<std::int64_t>());
      } else {
        fail(field, "must be \"auto\" or a nonnegative integer");
      }
    } else if (key == "frequency_cutoff") {
      if (value.is_string() && value.get<std::string>() == "auto") {
        opts.frequency_cutoff = 0;
      } else if (value.is_number_integer() && value.get<std::int64_t>() >= 0) {
        opts.frequency_cutoff = static_cast<long>(value.get<std::int64_t>());
      } else {
        fail(field, "must be \"auto\" or a nonnegative integer (0 = auto)");
      }
    } else if (key == "tol") {
      opts.tol = parse_positive_number(value, field);
    } else if (key == "require_trivial") {
      if (!value.is_boolean()) fail(field, "must be a boolean");
      opts.require_trivial = value.get<bool>();
    } else {
      fail(field, "unknown field");
    }
  }
  return opts;
}

std::int64_t to_int64(const Integer& n, const std::string& what) {
  if (n > std::numeric_limits<std::int64_t>::max() ||
      n < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::ValidationError, what + " exceeds the int64 serialization range");
  }
  return n.convert_to<std::int64_t>();
}

}  // namespace

const char* to_string(Command cmd) {
  switch (cmd) {
    case Command::closed_form: return "closed-form";
    case Command::spectral: return "spectral";
    case Command::oracle: return "oracle";
    case Command::verify: return "verify";
    case Command::t2_corollary: return "t2";
  }
  return "unknown";
}

std::optional<Command> command_from_string(const std::string& name) {
  if (name == "closed-form") return Command::closed_form;
  if (name == "spectral") return Command::spectral;
  if (name == "oracle") return Command::oracle;
  if (name == "verify") return Command::verify;
  if (name == "t2") return Command::t2_corollary;
  return std::nullopt;
}

InputConfig parse_input(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!doc.is_object()) fail("$", "top level must be an object");

  InputConfig config;
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "mode" && key != "gamma" && key != "upsilon" && key != "options") {
      fail("$." + key, "unknown field");
    }
  }
  if (doc.contains("mode")) {
    const json& mode = doc["mode"];
    if (!mode.is_string()) fail("$.mode", "must be \"t3\" or \"t2\"");
    const std::string name = mode.get<std::string>();
    if (name == "t3") {
      config.mode = Mode::t3;
    } else if (name == "t2") {
      config.mode = Mode::t2;
    } else {
      fail("$.mode", "must be \"t3\" or \"t2\"");
    }
  }
  const std::size_t dims = config.mode == Mode::t3 ? 3 : 2;
  if (!doc.contains("gamma")) fail("$.gamma", "missing field");
  if (!doc.contains("upsilon")) fail("$.upsilon", "missing field");
  config.gamma = parse_collection(doc["gamma"], dims, "$.gamma");
  config.upsilon = parse_collection(doc["upsilon"], dims, "$.upsilon");
  if (doc.contains("options")) {
    config.options = parse_options(doc["options"], "$.options");
  }
  return config;
}

std::string serialize_config(const InputConfig& config) {
  ojson root;
  root["mode"] = config.mode == Mode::t3 ? "t3" : "t2";
  const auto collection = [](const std::vector<CurveConfig>& curves) {
    ojson arr = ojson::array();
    for (const CurveConfig& c : curves) {
      ojson curve;
      ojson dir = ojson::array();
      for (const Integer& d : c.direction) dir.push_back(to_int64(d, "direction"));
      ojson orig = ojson::array();
      for (const Rational& x : c.origin) orig.push_back(format_rational(x));
      curve["direction"] = std::move(dir);
      curve["origin"] = std::move(orig);
      arr.push_back(std::move(curve));
    }
    return arr;
  };
  root["gamma"] = collection(config.gamma);
  root["upsilon"] = collection(config.upsilon);
  ojson opts;
  opts["t"] = config.options.t_schedule;
  if (config.options.kmax) {
    opts["kmax"] = static_cast<std::int64_t>(*config.options.kmax);
  } else {
    opts["kmax"] = "auto";
  }
  opts["frequency_cutoff"] = static_cast<std::int64_t>(config.options.frequency_cutoff);
  opts["tol"] = config.options.tol;
  opts["require_trivial"] = config.options.require_trivial;
  root["options"] = std::move(opts);
  return render(root);
}

std::pair<MultiGeodesic, MultiGeodesic> t3_collections(const InputConfig& config) {
  if (config.mode != Mode::t3) {
    throw Error(ErrorCode::ValidationError, "this command needs mode \"t3\"");
  }
  const auto build = [](const std::vector<CurveConfig>& curves, const char* label) {
    std::vector<Geodesic> components;
    for (std::size_t i = 0; i < curves.size(); ++i) {
      const CurveConfig& c = curves[i];
      if (c.direction.size() != 3 || c.origin.size() != 3) {
        fail(std::string(label) + "[" + std::to_string(i) + "]", "t3 curves have 3 coordinates");
      }
      components.emplace_back(LatticeVector{c.direction[0], c.direction[1], c.direction[2]},
                              RationalVector{c.origin[0], c.origin[1], c.origin[2]});
    }
    return MultiGeodesic(std::move(components));
  };
  return {build(config.gamma, "gamma"), build(config.upsilon, "upsilon")};
}

std::pair<std::vector<t2::T2Geodesic>, std::vector<t2::T2Geodesic>> t2_collections(
    const InputConfig& config) {
  if (config.mode != Mode::t2) {
    throw Error(ErrorCode::ValidationError, "this command needs mode \"t2\"");
  }
  const auto build = [](const std::vector<CurveConfig>& curves, const char* label) {
    std::vector<t2::T2Geodesic> components;
    for (std::size_t i = 0; i < curves.size(); ++i) {
      const CurveConfig& c = curves[i];
      if (c.direction.size() != 2 || c.origin.size() != 2) {
        fail(std::string(label) + "[" + std::to_string(i) + "]", "t2 curves have 2 coordinates");
      }
      components.emplace_back(std::array<Integer, 2>{c.direction[0], c.direction[1]},
                              std::array<Rational, 2>{c.origin[0], c.origin[1]});
    }
    return components;
  };
  return {build(config.gamma, "gamma"), build(config.upsilon, "upsilon")};
}

namespace {

// ---------------------------------------------------------------------------
// Command dispatch.

void check_cross_disjoint(const MultiGeodesic& gamma, const MultiGeodesic& upsilon) {
  for (const Geodesic& g : gamma.components) {
    for (const Geodesic& h : upsilon.components) {
      if (are_disjoint(g, h)) continue;
      if (same_circle(g, h)) {
        throw Error(ErrorCode::SameCircle,
                    "a gamma component and an upsilon component trace the same circle");
      }
      throw Error(ErrorCode::IntersectingCurves,
                  "a gamma component intersects an upsilon component");
    }
  }
}

void require_trivial_if_asked(const InputConfig& config, const MultiGeodesic& gamma,
                              const MultiGeodesic& upsilon) {
  if (!config.options.require_trivial) return;
  if (!is_homologically_trivial(gamma)) {
    throw Error(ErrorCode::NotHomologicallyTrivial, "gamma has nonzero homology class");
  }
  if (!is_homologically_trivial(upsilon)) {
    throw Error(ErrorCode::NotHomologicallyTrivial, "upsilon has nonzero homology class");
  }
}

ojson closed_form_json(const closed_form::LinkReport& report) {
  ojson o;
  o["total"] = format_rational(report.total);
  o["total_double"] = to_double(report.total);
  o["is_integer"] = report.is_integer;
  ojson pairs = ojson::array();
  for (const closed_form::PairTerm& term : report.terms) {
    ojson p;
    p["gamma_index"] = static_cast<std::uint64_t>(term.gamma_index);
    p["upsilon_index"] = static_cast<std::uint64_t>(term.upsilon_index);
    p["beta"] = ojson::array({to_int64(term.beta.x, "beta"), to_int64(term.beta.y, "beta"),
                              to_int64(term.beta.z, "beta")});
    p["det3"] = format_integer(term.det3);
    p["mu_dot_beta_frac"] = format_rational(term.mu_dot_beta_frac);
    p["value"] = format_rational(term.value);
    p["value_double"] = to_double(term.value);
    pairs.push_back(std::move(p));
  }
  o["pairs"] = std::move(pairs);
  return o;
}

struct SpectralOutcome {
  double t = 0.0;
  double pair_total = 0.0;
  double general_total = 0.0;
};

std::vector<SpectralOutcome> run_spectral_schedule(const MultiGeodesic& gamma,
                                                   const MultiGeodesic& upsilon,
                                                   const ConfigOptions& options,
                                                   const std::vector<double>& schedule) {
  std::vector<SpectralOutcome> outcomes;
  for (const double t : schedule) {
    spectral::SpectralParams params;
    params.t = t;
    params.kmax = options.kmax;
    params.frequency_cutoff = options.frequency_cutoff;
    SpectralOutcome outcome;
    outcome.t = t;
    double pair_total = 0.0;
    for (const Geodesic& g : gamma.components) {
      for (const Geodesic& h : upsilon.components) {
        pair_total += spectral::pair_series(g, h, params);
      }
    }
    outcome.pair_total = pair_total;
    outcome.general_total = spectral::general_series(gamma, upsilon, params);
    outcomes.push_back(outcome);
  }
  return outcomes;
}

ojson spectral_json(const std::vector<SpectralOutcome>& outcomes, const ConfigOptions& options) {
  ojson o;
  ojson schedule = ojson::array();
  for (const SpectralOutcome& out : outcomes) schedule.push_back(out.t);
  o["t_schedule"] = std::move(schedule);
  if (options.kmax) {
    o["kmax"] = static_cast<std::int64_t>(*options.kmax);
  } else {
    o["kmax"] = "auto";
  }
  o["frequency_cutoff"] = static_cast<std::int64_t>(options.frequency_cutoff);
  ojson results = ojson::array();
  for (const SpectralOutcome& out : outcomes) {
    ojson r;
    r["t"] = out.t;
    r["pair_series_total"] = out.pair_total;
    r["general_series_total"] = out.general_total;
    results.push_back(std::move(r));
  }
  o["results"] = std::move(results);
  return o;
}

// True when even the lowest-frequency mode of every non-collinear cross pair
// is damped below the weight floor, which makes the series indistinguishable
// from zero regardless of the configuration.
bool heat_time_swamps_all_pairs(const MultiGeodesic& gamma, const MultiGeodesic& upsilon,
                                double t) {
  bool any = false;
  for (const Geodesic& g : gamma.components) {
    for (const Geodesic& h : upsilon.components) {
      const LatticeVector w = cross(g.direction, h.direction);
      if (w.is_zero()) continue;
      any = true;
      const double b2 = to_double(norm2(primitive(w)));
      if (std::exp(-4.0 * M_PI * M_PI * b2 * t) >= spectral::kWeightFloor) return false;
    }
  }
  return any;
}

ojson oracle_json(const oracle::OracleResult& result) {
  ojson o;
  o["total"] = static_cast<std::int64_t>(result.total);
  o["apex"] = ojson::array({format_rational(result.apex.x), format_rational(result.apex.y),
                            format_rational(result.apex.z)});
  o["attempts"] = result.attempts;
  return o;
}

std::string pretty_warnings(const std::vector<std::string>& warnings) {
  std::string out;
  for (const std::string& w : warnings) {
    out += "warning: " + w + "\n";
  }
  return out;
}

RunResult finish(ojson&& report, std::string&& pretty, int exit_code) {
  RunResult result;
  result.json = render(report) + "\n";
  result.pretty = std::move(pretty);
  result.exit_code = exit_code;
  return result;
}

RunResult run_closed_form(const InputConfig& config) {
  auto [gamma, upsilon] = t3_collections(config);
  const closed_form::LinkReport report =
      closed_form::linking_number(gamma, upsilon, config.options.require_trivial);

  ojson o;
  o["command"] = "closed-form";
  o["closed_form"] = closed_form_json(report);
  o["warnings"] = report.warnings;

  std::string pretty = "closed-form total: " + format_rational(report.total) +
                       (report.is_integer ? " (integer)\n" : " (not an integer)\n");
  for (const closed_form::PairTerm& term : report.terms) {
    pretty += "  pair[" + std::to_string(term.gamma_index) + "," +
              std::to_string(term.upsilon_index) + "]: value " + format_rational(term.value) +
              "\n";
  }
  pretty += pretty_warnings(report.warnings);
  return finish(std::move(o), std::move(pretty), 0);
}

RunResult run_spectral_command(const InputConfig& config) {
  auto [gamma, upsilon] = t3_collections(config);
  require_trivial_if_asked(config, gamma, upsilon);
  check_cross_disjoint(gamma, upsilon);

  std::vector<double> schedule = config.options.t_schedule;
  if (schedule.empty()) schedule = {1e-4};
  const auto outcomes = run_spectral_schedule(gamma, upsilon, config.options, schedule);

  std::vector<std::string> warnings;
  for (auto&& w : collection_warnings(gamma, "gamma")) warnings.push_back(w);
  for (auto&& w : collection_warnings(upsilon, "upsilon")) warnings.push_back(w);
  if (!is_homologically_trivial(gamma)) {
    warnings.push_back("gamma is not homologically trivial; the total is not a linking number");
  }
  if (!is_homologically_trivial(upsilon)) {
    warnings.push_back("upsilon is not homologically trivial; the total is not a linking number");
  }
  const double t_min = *std::min_element(schedule.begin(), schedule.end());
  if (heat_time_swamps_all_pairs(gamma, upsilon, t_min)) {
    warnings.push_back("heat time too large for convergence");
  }

  ojson o;
  o["command"] = "spectral";
  o["spectral"] = spectral_json(outcomes, config.options);
  o["warnings"] = warnings;

  std::string pretty = "spectral series:\n";
  for (const SpectralOutcome& out : outcomes) {
    pretty += "  t=" + format_double(out.t) + ": pair-series " + format_double(out.pair_total) +
              ", general " + format_double(out.general_total) + "\n";
  }
  pretty += pretty_warnings(warnings);
  return finish(std::move(o), std::move(pretty), 0);
}

RunResult run_oracle(const InputConfig& config) {
  auto [gamma, upsilon] = t3_collections(config);
  const oracle::OracleResult result = oracle::oracle_link_report(gamma, upsilon);

  std::vector<std::string> warnings;
  for (auto&& w : collection_warnings(gamma, "gamma")) warnings.push_back(w);
  for (auto&& w : collection_warnings(upsilon, "upsilon")) warnings.push_back(w);

  ojson o;
  o["command"] = "oracle";
  o["oracle"] = oracle_json(result);
  o["warnings"] = warnings;

  std::string pretty = "oracle total: " + std::to_string(result.total) + " (apex (" +
                       format_rational(result.apex.x) + "," + format_rational(result.apex.y) +
                       "," + format_rational(result.apex.z) + "), attempt " +
                       std::to_string(result.attempts) + ")\n";
  pretty += pretty_warnings(warnings);
  return finish(std::move(o), std::move(pretty), 0);
}

RunResult run_verify(const InputConfig& config) {
  auto [gamma, upsilon] = t3_collections(config);
  const closed_form::LinkReport closed = closed_form::linking_number(gamma, upsilon, true);
  const oracle::OracleResult orc = oracle::oracle_link_report(gamma, upsilon);

  std::vector<double> schedule = config.options.t_schedule;
  if (schedule.empty()) schedule = {1e-2, 1e-3, 1e-4};
  const auto outcomes = run_spectral_schedule(gamma, upsilon, config.options, schedule);

  std::size_t best = 0;
  for (std::size_t i = 1; i < outcomes.size(); ++i) {
    if (outcomes[i].t < outcomes[best].t) best = i;
  }
  const double closed_double = to_double(closed.total);
  const double spectral_gap = std::abs(outcomes[best].pair_total - closed_double);
  const double route_gap = std::abs(outcomes[best].general_total - outcomes[best].pair_total);
  const bool oracle_matches = Rational(Integer(orc.total)) == closed.total;
  const bool pass = oracle_matches && spectral_gap <= config.options.tol;

  std::vector<std::string> warnings = closed.warnings;
  if (heat_time_swamps_all_pairs(gamma, upsilon, outcomes[best].t)) {
    warnings.push_back("heat time too large for convergence");
  }

  ojson o;
  o["command"] = "verify";
  o["closed_form"] = closed_form_json(closed);
  o["oracle"] = oracle_json(orc);
  o["spectral"] = spectral_json(outcomes, config.options);
  ojson agreement;
  agreement["tolerance"] = config.options.tol;
  agreement["spectral_t"] = outcomes[best].t;
  agreement["spectral_vs_closed_form"] = spectral_gap;
  agreement["general_vs_pair_series"] = route_gap;
  agreement["oracle_equals_closed_form"] = oracle_matches;
  agreement["verdict"] = pass ? "pass" : "fail";
  o["agreement"] = std::move(agreement);
  o["warnings"] = warnings;

  std::string pretty;
  pretty += "closed-form total: " + format_rational(closed.total) + "\n";
  pretty += "oracle total:      " + std::to_string(orc.total) +
            (oracle_matches ? " (agrees)\n" : " (DISAGREES)\n");
  pretty += "spectral pair-series at t=" + format_double(outcomes[best].t) + ": " +
            format_double(outcomes[best].pair_total) + " (|diff| " + format_double(spectral_gap) +
            (spectral_gap <= config.options.tol ? " <= tol " : " > tol ") +
            format_double(config.options.tol) + ")\n";
  pretty += std::string("verdict: ") + (pass ? "pass" : "fail") + "\n";
  pretty += pretty_warnings(warnings);
  return finish(std::move(o), std::move(pretty), pass ? 0 : 2);
}

RunResult run_t2(const InputConfig& config) {
  auto [gamma, upsilon] = t2_collections(config);
  const double total = t2::corollary_link(gamma, upsilon);
  const double nearest = std::nearbyint(total);

  ojson pairs = ojson::array();
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    for (std::size_t j = 0; j < upsilon.size(); ++j) {
      ojson p;
      p["gamma_index"] = static_cast<std::uint64_t>(i);
      p["upsilon_index"] = static_cast<std::uint64_t>(j);
      const Integer det = t2::direction_det2(gamma[i], upsilon[j]);
      p["det2"] = to_int64(det, "det2");
      if (det == 0) {
        p["intersections"] = 0;
        p["angle_x"] = 0.0;
        p["pair_total"] = 0.0;
      } else {
        const auto data = t2::intersection_data(gamma[i], upsilon[j]);
        double pair_total = 0.0;
        for (const t2::IntersectionDatum& datum : data) {
          pair_total += datum.sign * (1.0 - datum.angle_x / M_PI) / 2.0;
        }
        p["intersections"] = static_cast<std::uint64_t>(data.size());
        p["angle_x"] = data.empty() ? 0.0 : data.front().angle_x;
        p["pair_total"] = pair_total;
      }
      pairs.push_back(std::move(p));
    }
  }

  std::vector<std::string> warnings;
  const auto warn_nonprimitive = [&warnings](const std::vector<t2::T2Geodesic>& m,
                                             const char* label) {
    using boost::multiprecision::gcd;
    for (std::size_t i = 0; i < m.size(); ++i) {
      const Integer g = gcd(abs(m[i].direction[0]), abs(m[i].direction[1]));
      if (g != 1) {
        warnings.push_back(std::string(label) + "[" + std::to_string(i) +
                           "]: direction is not primitive; the component wraps its circle " +
                           format_integer(g) + " times");
      }
    }
  };
  warn_nonprimitive(gamma, "gamma");
  warn_nonprimitive(upsilon, "upsilon");

  ojson o;
  o["command"] = "t2";
  ojson body;
  body["total"] = total;
  body["nearest_integer"] = static_cast<std::int64_t>(nearest);
  body["integer_distance"] = std::abs(total - nearest);
  body["pairs"] = std::move(pairs);
  o["t2"] = std::move(body);
  o["warnings"] = warnings;

  std::string pretty = "t2 corollary total: " + format_double(total) + " (nearest integer " +
                       std::to_string(static_cast<long long>(nearest)) + ", distance " +
                       format_double(std::abs(total - nearest)) + ")\n";
  pretty += pretty_warnings(warnings);
  return finish(std::move(o), std::move(pretty), 0);
}

}  // namespace

RunResult run(Command cmd, const InputConfig& config) {
  switch (cmd) {
    case Command::closed_form: return run_closed_form(config);
    case Command::spectral: return run_spectral_command(config);
    case Command::oracle: return run_oracle(config);
    case Command::verify: return run_verify(config);
    case Command::t2_corollary: return run_t2(config);
  }
  throw Error(ErrorCode::Internal, "unknown command");
}

std::string error_json(const Error& e) {
  ojson o;
  ojson body;
  body["code"] = to_string(e.code());
  body["message"] = e.what();
  o["error"] = std::move(body);
  return render(o) + "\n";
}

}  // namespace io
}  // namespace torus_link
