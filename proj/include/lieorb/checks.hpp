#pragma once

#include <string>

#include "lieorb/config.hpp"

namespace lieorb {

struct Report {
  Json meta;  // version, runtime, kernel ISA; excluded from determinism
  Json body;
  bool pass = false;
  Json full() const { return Json{{"meta", meta}, {"body", body}}; }
};

std::string version();

// Runs cfg.checks (all of them when empty) concurrently. `cfg.seed` must
// already be resolved. Throws ConfigError / DomainError on bad input,
// DegeneracyError / InconsistencyError on internal trouble.
Report run(const RunConfig& cfg);

// Seed-independent structural data: structure constants, roots, the
// eigenvalue ladder of c and the frozen conventions.
Json emit_fixture(const RunConfig& cfg);

Json conventions();

// 0 pass, 1 check failure, 2 config or domain error, 3 internal error.
int exit_code(const std::exception& e);

}  // namespace lieorb
