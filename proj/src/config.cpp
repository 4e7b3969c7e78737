#include "lieorb/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>

#include "lieorb/errors.hpp"

namespace lieorb {

namespace {

struct Scalar {
  double value;
  std::optional<Rational> exact;
};

Scalar parse_scalar(const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    const auto v = j.get<std::int64_t>();
    return {static_cast<double>(v), Rational(v)};
  }
  if (j.is_number()) return {j.get<double>(), std::nullopt};
  if (j.is_string()) {
    const Rational r = parse_rational(j.get<std::string>());
    return {to_double(r), r};
  }
  throw ConfigError(where + ": expected a number or a \"p/q\" string");
}

DiagEntry parse_entry(const Json& j, std::size_t i) {
  const std::string where = "c[" + std::to_string(i) + "]";
  if (j.is_object()) {
    for (const auto& [key, _] : j.items())
      if (key != "re" && key != "im") throw ConfigError(where + ": unknown key '" + key + "'");
    const Scalar re = j.contains("re") ? parse_scalar(j.at("re"), where + ".re") : Scalar{0.0, Rational(0)};
    const Scalar im = j.contains("im") ? parse_scalar(j.at("im"), where + ".im") : Scalar{0.0, Rational(0)};
    DiagEntry e{cplx(re.value, im.value), std::nullopt};
    if (im.value == 0.0 && im.exact) e.exact = re.exact;
    return e;
  }
  const Scalar s = parse_scalar(j, where);
  return {cplx(s.value, 0.0), s.exact};
}

double tolerance_field(const Json& t, const char* key, double fallback) {
  if (!t.contains(key)) return fallback;
  if (!t.at(key).is_number() || !(t.at(key).get<double>() > 0))
    throw ConfigError(std::string("tolerances.") + key + " must be a positive number");
  return t.at(key).get<double>();
}

}  // namespace

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names{"roots", "parabolic", "kk", "flow", "symplecto", "arnold"};
  return names;
}

bool RunConfig::c_real() const {
  return std::all_of(c.begin(), c.end(), [](const DiagEntry& e) { return e.value.imag() == 0.0; });
}

bool RunConfig::c_imaginary() const {
  return std::all_of(c.begin(), c.end(), [](const DiagEntry& e) { return e.value.real() == 0.0; });
}

std::vector<double> RunConfig::c_real_parts() const {
  std::vector<double> v;
  for (const auto& e : c) v.push_back(e.value.real());
  return v;
}

std::vector<double> RunConfig::c_imag_parts() const {
  std::vector<double> v;
  for (const auto& e : c) v.push_back(e.value.imag());
  return v;
}

std::vector<cplx> RunConfig::c_values() const {
  std::vector<cplx> v;
  for (const auto& e : c) v.push_back(e.value);
  return v;
}

std::optional<std::vector<Rational>> RunConfig::c_exact() const {
  std::vector<Rational> v;
  for (const auto& e : c) {
    if (!e.exact) return std::nullopt;
    v.push_back(*e.exact);
  }
  return v;
}

std::vector<std::string> RunConfig::c_labels() const {
  std::vector<std::string> out;
  for (const auto& e : c) {
    if (e.exact) {
      out.push_back(to_string(*e.exact));
    } else {
      Json j = e.value.imag() == 0.0 ? Json(e.value.real()) : Json{{"re", e.value.real()}, {"im", e.value.imag()}};
      out.push_back(j.dump());
    }
  }
  return out;
}

RunConfig parse_config(const Json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  RunConfig cfg;
  if (!j.contains("algebra") || !j.at("algebra").is_object()) throw ConfigError("missing 'algebra' object");
  const Json& a = j.at("algebra");
  if (a.value("family", std::string("sl")) != "sl") throw ConfigError("unsupported algebra family");
  if (!a.contains("n") || !a.at("n").is_number_integer()) throw ConfigError("algebra.n must be an integer");
  cfg.algebra.n = a.at("n").get<int>();
  if (cfg.algebra.n < 2 || cfg.algebra.n > 8) throw ConfigError("algebra.n must lie in [2, 8]");
  const std::string field = a.value("field", std::string("R"));
  if (field == "R") {
    cfg.algebra.field = Field::real;
  } else if (field == "C") {
    cfg.algebra.field = Field::complex_realified;
  } else {
    throw ConfigError("algebra.field must be \"R\" or \"C\"");
  }

  if (j.contains("c")) {
    if (!j.at("c").is_array()) throw ConfigError("'c' must be an array");
    const Json& arr = j.at("c");
    for (std::size_t i = 0; i < arr.size(); ++i) cfg.c.push_back(parse_entry(arr[i], i));
    if (static_cast<int>(cfg.c.size()) != cfg.algebra.n)
      throw ConfigError("'c' must have exactly n = " + std::to_string(cfg.algebra.n) + " entries");
    if (cfg.algebra.field == Field::real && !cfg.c_real())
      throw ConfigError("complex entries in 'c' need field \"C\"");
    if (auto ex = cfg.c_exact()) {
      Rational sum(0);
      for (const auto& r : *ex) sum += r;
      if (sum != Rational(0)) throw ConfigError("'c' is not traceless");
    } else {
      cplx sum(0.0);
      double scale = 1.0;
      for (const auto& e : cfg.c) {
        sum += e.value;
        scale = std::max(scale, std::abs(e.value));
      }
      if (std::abs(sum) > 1e-12 * scale) throw ConfigError("'c' is not traceless");
    }
    std::stable_sort(cfg.c.begin(), cfg.c.end(), [](const DiagEntry& x, const DiagEntry& y) {
      if (x.value.real() != y.value.real()) return x.value.real() > y.value.real();
      return x.value.imag() > y.value.imag();
    });
  }

  if (j.contains("checks")) {
    if (!j.at("checks").is_array() || j.at("checks").empty()) throw ConfigError("'checks' must be a non-empty array");
    for (const auto& c : j.at("checks")) {
      if (!c.is_string()) throw ConfigError("'checks' entries must be strings");
      const auto name = c.get<std::string>();
      if (std::find(known_checks().begin(), known_checks().end(), name) == known_checks().end())
        throw ConfigError("unknown check '" + name + "'");
      if (std::find(cfg.checks.begin(), cfg.checks.end(), name) == cfg.checks.end()) cfg.checks.push_back(name);
    }
  }

  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned()) throw ConfigError("'seed' must be a non-negative integer");
    cfg.seed = j.at("seed").get<std::uint64_t>();
  }
  if (j.contains("tolerances")) {
    const Json& t = j.at("tolerances");
    if (!t.is_object()) throw ConfigError("'tolerances' must be an object");
    for (const auto& [key, _] : t.items())
      if (key != "structural" && key != "decomposition" && key != "eigen" && key != "finite_difference")
        throw ConfigError("unknown tolerance '" + key + "'");
    cfg.tol.structural = tolerance_field(t, "structural", cfg.tol.structural);
    cfg.tol.decomposition = tolerance_field(t, "decomposition", cfg.tol.decomposition);
    cfg.tol.eigen = tolerance_field(t, "eigen", cfg.tol.eigen);
    cfg.tol.finite_difference = tolerance_field(t, "finite_difference", cfg.tol.finite_difference);
  }
  if (j.contains("output_path")) {
    if (!j.at("output_path").is_string()) throw ConfigError("'output_path' must be a string");
    cfg.output_path = j.at("output_path").get<std::string>();
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw ConfigError("config '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_config(j);
}

std::uint64_t resolve_seed(const RunConfig& cfg, std::optional<std::uint64_t> cli_seed) {
  if (cli_seed) return *cli_seed;
  if (const char* env = std::getenv("LIEORB_SEED"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == nullptr || *end != '\0') throw ConfigError("LIEORB_SEED is not a non-negative integer");
    return v;
  }
  return cfg.seed;
}

}  // namespace lieorb
