#include <iostream>

#include "CLI11.hpp"
#include "courant_cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace courant::cli;
  CLI::App app{"Checks for regular Courant algebroids given in split form"};
  std::string command, path, format = "text";
  Flags flags;
  int degree = -1;
  std::string kind;
  app.add_option("command", command, "check, axioms, charform, chernweil, pontryagin, coherent, build, roundtrip, "
                                     "transport, shift or naive")
      ->required();
  app.add_option("file", path, "config file")->required();
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", flags.seed, "seed for sampled data");
  auto* degree_opt = app.add_option("--degree", degree, "monomial degree cap of the test family");
  auto* kind_opt = app.add_option("--kind", kind, "shift kind: hoist, omega or central");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (*degree_opt) flags.degree = degree;
  if (*kind_opt) flags.kind = kind;
  try {
    Config config = parse_config_file(path);
    CommandResult result = run_command(command, config, flags);
    std::cout << emit_report(result, format == "json" ? Format::json : Format::text);
    return exit_code(result.report);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
