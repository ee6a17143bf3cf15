#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "overring/cli.hpp"

int main(int argc, char** argv) {
  using overring::cli::RunConfig;

  CLI::App app{"Overring lattices, t-linked overrings and strongly divisorial ideals"};
  app.require_subcommand(1);

  std::string gens, preset, file;
  bool json = false, oracle = false;
  int f_max = overring::cli::kDefaultFMax;

  const std::pair<const char*, const char*> commands[] = {
      {"nsg-report", "classification report for k[[S]]"},
      {"nsg-overrings", "oversemigroups of S and the overring lattice"},
      {"nsg-sd", "strongly divisorial ideals of S"},
      {"nsg-phi", "the map from SD ideals to overrings"},
      {"tower-report", "classification report for a tower, Prufer or pullback descriptor"},
      {"check-paper", "run the full acceptance battery"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    if (std::string(name) != "check-paper") {
      sub->add_option("--gens", gens, "generators, e.g. 2,5");
      sub->add_option("--preset", preset, "gs8:N, nls5, tlsd5:N, dtuo5, pvd-over-v, k-plus-xkx");
      sub->add_option("--file", file, "descriptor JSON file");
      sub->add_flag("--oracle", oracle, "append brute-force verification rows");
    }
    sub->add_flag("--json", json, "emit JSON");
    sub->add_option("--f-max", f_max, "largest Frobenius number in exhaustive corpora");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  RunConfig config;
  const auto* chosen = app.get_subcommands().front();
  config.command = *overring::cli::parse_command(chosen->get_name());
  auto given = [&](const char* name) {
    const auto* opt = chosen->get_option_no_throw(name);
    return opt && opt->count() > 0;
  };
  if (given("--gens")) config.gens = gens;
  if (given("--preset")) config.preset = preset;
  if (given("--file")) config.file = file;
  config.format = json ? overring::cli::Format::json : overring::cli::Format::text;
  config.oracle = oracle;
  config.f_max = f_max;
  return overring::cli::run(config, std::cout, std::cerr);
}
