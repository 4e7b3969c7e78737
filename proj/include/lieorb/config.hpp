#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lieorb/liecore.hpp"
#include "lieorb/rational.hpp"
#include "lieorb/tolerances.hpp"

namespace lieorb {

using Json = nlohmann::json;

struct DiagEntry {
  cplx value;
  std::optional<Rational> exact;  // set for integer or "p/q" real input
};

struct RunConfig {
  AlgebraSpec algebra;
  std::vector<DiagEntry> c;  // already sorted into the closed chamber
  std::vector<std::string> checks;
  std::uint64_t seed = 0;
  Tolerances tol;
  std::string output_path;

  bool has_c() const { return !c.empty(); }
  bool c_real() const;
  bool c_imaginary() const;
  std::vector<double> c_real_parts() const;
  std::vector<double> c_imag_parts() const;
  std::vector<cplx> c_values() const;
  std::optional<std::vector<Rational>> c_exact() const;
  std::vector<std::string> c_labels() const;
};

const std::vector<std::string>& known_checks();

// Throws ConfigError on any malformed field.
RunConfig parse_config(const Json& j);
RunConfig load_config(const std::string& path);

// --seed beats LIEORB_SEED beats the config file.
std::uint64_t resolve_seed(const RunConfig& cfg, std::optional<std::uint64_t> cli_seed);

}  // namespace lieorb
