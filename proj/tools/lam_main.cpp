#include <iostream>

#include "CLI11.hpp"
#include "enet/lam.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Lam generator checks"};
  app.require_subcommand(1);

  int n = 0;
  auto* c_crystal = app.add_subcommand("crystal", "generators permute the concordance basis");
  c_crystal->add_option("n", n)->required()->check(CLI::Range(2, 5));
  auto* c_invariance = app.add_subcommand("invariance", "pairing invariance under generators");
  c_invariance->add_option("n", n)->required()->check(CLI::Range(2, 5));

  CLI11_PARSE(app, argc, argv);

  try {
    enet::CheckReport rep =
        c_crystal->parsed() ? enet::crystal_check(n) : enet::invariance_check(n);
    std::cout << rep.name << ": " << rep.status << '\n';
    for (auto& w : rep.witnesses) std::cout << "  " << w << '\n';
    return rep.passed() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
