#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "enet/embeddings.hpp"
#include "enet/groves.hpp"
#include "enet/verify.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw enet::input_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"planar circular electrical network pipelines"};
  app.require_subcommand(1);

  std::string file;
  std::string map = "lam";
  std::string emit = "omega";
  std::string checks = "all";
  bool json = false;

  auto* c_response = app.add_subcommand("response", "boundary response matrix");
  auto* c_resistance = app.add_subcommand("resistance", "effective resistance matrix");
  auto* c_groves = app.add_subcommand("groves", "grove measurements");
  auto* c_plucker = app.add_subcommand("plucker", "Plucker coordinates from groves");
  auto* c_verify = app.add_subcommand("verify", "run theorem checks");
  auto* c_emit = app.add_subcommand("emit", "print an embedding matrix");
  for (auto* sub : {c_response, c_resistance, c_groves, c_plucker, c_verify, c_emit})
    sub->add_option("file", file, "network file")->required();
  c_plucker->add_option("--map", map)->check(CLI::IsMember({"lam", "cgs", "lagrangian"}));
  c_emit->add_option("--emit", emit)
      ->check(CLI::IsMember({"omega", "omega-v", "omega-r", "cgs", "x"}));
  c_verify->add_option("--checks", checks, "comma separated check names or all");
  c_verify->add_flag("--json", json, "structured report");

  CLI11_PARSE(app, argc, argv);

  try {
    enet::Network net = enet::parse_network(read_file(file));
    if (c_response->parsed()) {
      std::cout << enet::matrix_str(enet::response_matrix(net).m);
    } else if (c_resistance->parsed()) {
      std::cout << enet::matrix_str(
          enet::effective_resistance(enet::response_matrix(net)).m);
    } else if (c_groves->parsed()) {
      std::cout << enet::grove_table_str(enet::grove_measurements(net));
    } else if (c_plucker->parsed()) {
      enet::GroveTable gt = enet::grove_measurements(net);
      enet::WedgeVector w = map == "lam"   ? enet::lam_plucker(gt)
                            : map == "cgs" ? enet::cgs_plucker(gt)
                                           : enet::lagrangian_plucker(gt);
      std::cout << enet::wedge_str(w);
    } else if (c_emit->parsed()) {
      enet::ResponseMatrix mr = enet::response_matrix(net);
      enet::RatMatrix m;
      if (emit == "omega")
        m = enet::omega_matrix(mr);
      else if (emit == "omega-v")
        m = enet::omega_tilde(mr);
      else if (emit == "omega-r")
        m = enet::omega_resistance(enet::effective_resistance(mr));
      else if (emit == "cgs")
        m = enet::cgs_matrix(mr);
      else
        m = enet::x_matrix(mr);
      std::cout << enet::matrix_str(m);
    } else if (c_verify->parsed()) {
      auto reports = enet::verify_network(net, split_commas(checks));
      std::cout << (json ? enet::report_json(reports) : enet::report_text(reports));
      for (auto& r : reports)
        if (r.status == "fail") return 1;
    }
  } catch (const enet::input_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
