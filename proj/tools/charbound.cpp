// charbound: exact-arithmetic verification suites for character-degree
// bounds in finite groups of Lie type and double covers of symmetric
// groups.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "charbound/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact verification suites for group-order and character-degree bounds"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  std::string format = "text";
  charbound::report::GridConfig cfg;
  verify->add_option("--suite", suite, "regclasses|crosschar|defchar|symspin|oracle|all")
      ->default_str("all");
  verify->add_option("--rank-max", cfg.rank_max, "largest Lie rank in the grid");
  verify->add_option("--q-max", cfg.q_max, "largest field size in the grid");
  verify->add_option("--p-max", cfg.p_max, "largest prime for the defining-characteristic sums");
  verify->add_option("--l-max", cfg.l_max, "largest staircase index for the spin suite");
  verify->add_option("--n-max", cfg.n_max, "run the spin coverage search up to this n");
  verify->add_option("--format", format, "text|json")->default_str("text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    auto rep = charbound::report::run(suite, cfg);
    std::cout << charbound::report::emit(rep, format);
    return charbound::report::exit_code(rep);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
