#include <iostream>

#include "CLI11.hpp"
#include "enet/symplectic.hpp"

int main(int argc, char** argv) {
  CLI::App app{"symplectic forms and concordance"};
  app.require_subcommand(1);

  int n = 0;
  auto* c_unique = app.add_subcommand("unique-form", "solve for forms annihilating H");
  c_unique->add_option("n", n)->required()->check(CLI::Range(2, 6));
  auto* c_forms = app.add_subcommand("forms", "print the standard forms");
  c_forms->add_option("n", n)->required()->check(CLI::Range(2, 8));

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_unique->parsed()) {
      enet::FormSolution sol = enet::unique_form_solver(n);
      std::cout << "dimension: " << sol.basis.size() << '\n';
      for (auto& b : sol.basis) std::cout << enet::matrix_str(b);
    } else {
      enet::StandardForms f = enet::standard_forms(n);
      std::cout << "lambda:\n" << enet::matrix_str(f.lambda.m);
      std::cout << "lambda-tilde:\n" << enet::matrix_str(f.lambda_tilde.m);
      std::cout << "lambda-bar:\n" << enet::matrix_str(f.lambda_bar.m);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
