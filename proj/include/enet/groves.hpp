#pragma once
#include <map>
#include <string>
#include <vector>

#include "enet/network.hpp"
#include "enet/noncrossing.hpp"
#include "enet/wedge.hpp"

namespace enet {

struct GroveTable {
  int n = 0;
  std::map<NonCrossingPartition, Rational> entries;

  Rational at(const NonCrossingPartition& s) const {
    auto it = entries.find(s);
    return it == entries.end() ? Rational(0) : it->second;
  }
};

struct Grove {
  std::vector<int> edge_ids;
  NonCrossingPartition partition;
  Rational weight;
};

int max_enumeration_edges();  // ENET_MAX_EDGES, default 24

std::vector<Grove> enumerate_groves(const Network& net);
GroveTable grove_measurements(const Network& net);

WedgeVector lam_plucker(const GroveTable& gt);         // degree n-1, ambient 2n
WedgeVector cgs_plucker(const GroveTable& gt);         // degree n+1, ambient 2n
WedgeVector lagrangian_plucker(const GroveTable& gt);  // degree n-1, ambient 2n-2

std::string grove_table_str(const GroveTable& gt);

}  // namespace enet
