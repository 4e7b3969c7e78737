#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "lieorb/checks.hpp"
#include "lieorb/errors.hpp"

namespace {

void write_json(const lieorb::Json& j, const std::string& path) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw lieorb::ConfigError("cannot write '" + path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structure theory and orbit symplectomorphism checks for sl(n)"};
  app.require_subcommand(1);

  std::string config_path, out_path;
  std::optional<std::uint64_t> seed;

  struct Sub {
    const char* name;
    const char* check;  // nullptr: all checks from the config
    const char* help;
  };
  const Sub subs[] = {
      {"roots", "roots", "restricted roots and structure residuals"},
      {"parabolic", "parabolic", "grading of g by ad(c)"},
      {"kk-check", "kk", "Kostant-Kirillov form properties and exactness verdict"},
      {"flow-check", "flow", "exact polynomial flows against RK4"},
      {"symplecto-verify", "symplecto", "pullback of the orbit form under the cotangent map"},
      {"arnold", "arnold", "cotangent model of a complex orbit"},
      {"run", nullptr, "every check listed in the config"},
      {"fixture", nullptr, "seed-independent golden data"},
  };
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--config", config_path, "JSON config")->required();
    sub->add_option("--seed", seed, "overrides LIEORB_SEED and the config seed");
    sub->add_option("--out", out_path, "output file (default: config output_path, else stdout)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  try {
    lieorb::RunConfig cfg = lieorb::load_config(config_path);
    cfg.seed = lieorb::resolve_seed(cfg, seed);
    const std::string dest = out_path.empty() ? cfg.output_path : out_path;
    if (name == "fixture") {
      write_json(lieorb::emit_fixture(cfg), dest);
      return 0;
    }
    for (const auto& s : subs)
      if (name == s.name && s.check != nullptr) cfg.checks = {s.check};
    const lieorb::Report rep = lieorb::run(cfg);
    write_json(rep.full(), dest);
    return rep.pass ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "lieorb " << name << ": " << e.what() << "\n";
    return lieorb::exit_code(e);
  }
}
