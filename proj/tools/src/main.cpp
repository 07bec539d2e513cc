#include <CLI11.hpp>

#include <iostream>

#include "zgcu/cli.hpp"

int main(int argc, char** argv) {
  using namespace zgcu::cli;
  CLI::App app{"Central units of integral group rings"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "json";
  std::optional<std::string> output;

  const std::pair<const char*, const char*> commands[] = {
      {"group-info", "order, elements and structural predicates"},
      {"classes", "conjugacy, R- and Q-classes with S_g and T_g"},
      {"sspairs", "strong Shoda pairs, idempotents and component parameters"},
      {"bass", "a Bass unit b(k, m, g), or a generalized one with --M"},
      {"centralize", "the conjugate-product central unit of b(k, m, g) with stage checks"},
      {"basis", "central unit basis with verification"},
      {"verify-all", "run every property check on the group"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--group", config.group, "catalog name, table file or permutation generators")->required();
    sub->add_option("--g", config.g, "group element");
    sub->add_option("--k", config.k, "Bass unit exponent k");
    sub->add_option("--m", config.m, "Bass unit exponent m");
    sub->add_option("--M", config.M, "generators of a normal subgroup, ';'-separated");
    sub->add_option("--output", output, "write the report here instead of stdout");
    sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--seed", config.seed, "seed for randomized re-checks");
    sub->add_option("--max-order", config.bounds.max_order, "largest group order accepted");
    sub->add_option("--max-subgroups", config.bounds.max_subgroups, "largest subgroup lattice accepted");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << error_json(zgcu::ErrorKind::InvalidInput, e.what()).dump() << "\n";
    return 3;
  }

  config.command = *parse_command(app.get_subcommands().front()->get_name());
  config.format = format == "text" ? Format::Text : Format::Json;
  if (output) config.output = *output;
  return execute(config, std::cout, std::cerr);
}
