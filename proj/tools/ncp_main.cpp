#include <iostream>

#include "CLI11.hpp"
#include "enet/noncrossing.hpp"
#include "enet/symplectic.hpp"

int main(int argc, char** argv) {
  CLI::App app{"non-crossing partition utilities"};
  app.require_subcommand(1);

  int n = 0;
  std::string text;

  auto* c_list = app.add_subcommand("list", "all non-crossing partitions of [n]");
  c_list->add_option("n", n)->required()->check(CLI::Range(1, 10));
  auto* c_dual = app.add_subcommand("dual", "Kreweras dual");
  auto* c_merge = app.add_subcommand("merge", "merged partition on [2n]");
  auto* c_wedge = app.add_subcommand("wedge", "concordance-vector factorization");
  auto* c_lext = app.add_subcommand("lext", "Lagrangian extension");
  for (auto* sub : {c_dual, c_merge, c_wedge, c_lext}) {
    sub->add_option("partition", text, "text form, e.g. \"1 4 6|2 3|5\"")->required();
    sub->add_option("--n", n, "ground-set size (default: largest element)");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_list->parsed()) {
      for (auto& p : enet::enumerate_nc(n)) std::cout << enet::partition_str(p) << '\n';
      return 0;
    }
    enet::NonCrossingPartition sigma = enet::partition_parse(text, n);
    if (c_dual->parsed()) {
      std::cout << enet::partition_str(enet::dual(sigma)) << '\n';
    } else if (c_merge->parsed()) {
      enet::MergedPartition m = enet::merge(sigma);
      enet::NonCrossingPartition as_partition{2 * m.n, m.blocks};
      std::cout << enet::partition_str(as_partition) << '\n';
    } else if (c_wedge->parsed()) {
      enet::WedgeFactorization f = enet::algorithm_factorization(sigma);
      std::cout << enet::factorization_str(f);
      std::cout << "expanded: " << enet::wedge_str(enet::wedge_expand(f.v_factors));
    } else if (c_lext->parsed()) {
      std::cout << enet::lext_str(enet::lagrangian_extension(sigma)) << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
