#pragma once
#include <map>
#include <vector>

#include "enet/network.hpp"
#include "enet/wedge.hpp"

namespace enet {

/* bipartite graph of the (dual) Temperley construction */
struct BipartiteNetwork {
  enum class Kind { boundary, vertex_node, face_node, edge_node, stub };
  struct Node {
    Kind kind;
    int ref;      // boundary label 1..2n / vertex id / face index / edge id / stub i
    bool black;
  };
  struct BEdge {
    int a, b;  // node indices
    Rational w;
  };
  int n = 0;
  std::vector<Node> nodes;
  std::vector<BEdge> edges;
  std::vector<int> boundary;  // boundary[j-1] = node index of boundary vertex j, j in [1,2n]
};

BipartiteNetwork dual_temperley(const Network& net);  // N^d: boundary black
BipartiteNetwork temperley(const Network& net);       // N: colors inverted

/* Boundary set of an almost perfect matching: black boundary vertices covered
   together with white boundary vertices left uncovered. */
Rational dimer_partition(const BipartiteNetwork& bip, const IndexSet& I);
std::map<IndexSet, Rational> dimer_table(const BipartiteNetwork& bip);

}  // namespace enet
