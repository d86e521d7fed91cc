#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "enet/matrix.hpp"
#include "enet/noncrossing.hpp"

namespace enet {

struct parse_error : input_error {
  using input_error::input_error;
};
struct topology_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct unsupported_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Edge {
  int id = 0;
  int u = 0, v = 0;
  Rational w;
};

/* Planar circular network as a rotation system.  Boundary vertices 1..n sit
   clockwise on the disk boundary, interior vertices are n+1..n+interior.
   Rotation lists incident edge ids counterclockwise; at a boundary vertex the
   list is anchored at the boundary: the implied full rotation is
   (arc toward i+1, arc toward i-1, listed edges...). */
struct Network {
  int n = 0;
  int interior = 0;
  std::vector<Edge> edges;                    // file order; ids unique
  std::map<int, std::vector<int>> rotation;   // vertex -> ccw incident edge ids
  std::optional<NonCrossingPartition> cactus;

  int vertex_count() const { return n + interior; }
  const Edge& edge_by_id(int id) const;
};

void validate(const Network& net);  // throws parse_error on a bad embedding
bool is_connected(const Network& net);

Network parse_network(const std::string& text);
std::string serialize(const Network& net);

struct ResponseMatrix {
  int n = 0;
  RatMatrix m;  // symmetric n x n, zero row sums
};

struct ResistanceMatrix {
  int n = 0;
  RatMatrix m;  // symmetric, zero diagonal
};

RatMatrix laplacian(const Network& net);
ResponseMatrix response_matrix(const Network& net);
ResistanceMatrix effective_resistance(const ResponseMatrix& mr);

Network dual_network(const Network& net);

Network quotient(const Network& net, const NonCrossingPartition& sigma);
Network hollow_cactus(int n, const NonCrossingPartition& sigma);

/* face structure of the map closed by the boundary arcs; used by the dual
   construction and the bipartite (dimer) constructions */
struct FaceStructure {
  int face_count = 0;                    // inner faces only
  std::vector<int> arc_face;             // arc_face[i] = inner face holding arc (i+1 -> i+2), i in [0,n)
  std::vector<std::pair<int, int>> edge_faces;  // per edge (file order): faces left of u->v and of v->u
  std::vector<std::vector<int>> face_edges;     // per inner face: edge ids in walk order (arcs skipped)
};
FaceStructure faces(const Network& net);  // requires every boundary vertex covered or handles arcs-only faces

}  // namespace enet
