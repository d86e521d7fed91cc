#pragma once
#include <string>
#include <vector>

#include "enet/network.hpp"
#include "enet/report.hpp"

namespace enet {

/* known names: point-equality, isotropy, orthogonality, inclusion,
   resistance, dual, dimer, x-matrix.  Empty selection or "all" runs all. */
std::vector<CheckReport> verify_network(const Network& net,
                                        const std::vector<std::string>& selection = {});

std::string report_text(const std::vector<CheckReport>& reports);
std::string report_json(const std::vector<CheckReport>& reports);

}  // namespace enet
