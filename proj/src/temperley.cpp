#include "enet/temperley.hpp"

#include <algorithm>
#include <functional>

namespace enet {

BipartiteNetwork dual_temperley(const Network& net) {
  if (net.cactus) throw unsupported_error("Temperley construction needs an ordinary network");
  if (!is_connected(net)) throw unsupported_error("Temperley construction needs a connected network");
  FaceStructure fs = faces(net);

  BipartiteNetwork bip;
  bip.n = net.n;
  auto add_node = [&](BipartiteNetwork::Kind k, int ref, bool black) {
    bip.nodes.push_back({k, ref, black});
    return int(bip.nodes.size()) - 1;
  };
  auto add_edge = [&](int a, int b, const Rational& w) { bip.edges.push_back({a, b, w}); };

  bip.boundary.resize(2 * net.n);
  for (int j = 1; j <= 2 * net.n; ++j)
    bip.boundary[j - 1] = add_node(BipartiteNetwork::Kind::boundary, j, true);

  std::map<int, int> vertex_node;  // interior vertex -> node
  for (int v = net.n + 1; v <= net.vertex_count(); ++v)
    vertex_node[v] = add_node(BipartiteNetwork::Kind::vertex_node, v, false);
  std::vector<int> face_node(fs.face_count);
  for (int f = 0; f < fs.face_count; ++f)
    face_node[f] = add_node(BipartiteNetwork::Kind::face_node, f, false);
  std::vector<int> stub(net.n);
  for (int i = 1; i <= net.n; ++i) stub[i - 1] = add_node(BipartiteNetwork::Kind::stub, i, false);
  std::map<int, int> edge_node;
  for (auto& e : net.edges) edge_node[e.id] = add_node(BipartiteNetwork::Kind::edge_node, e.id, true);

  for (size_t k = 0; k < net.edges.size(); ++k) {
    const Edge& e = net.edges[k];
    for (int end : {e.u, e.v}) {
      if (end > net.n)
        add_edge(vertex_node[end], edge_node[e.id], e.w);
      else
        add_edge(stub[end - 1], edge_node[e.id], e.w);
    }
    add_edge(edge_node[e.id], face_node[fs.edge_faces[k].first], 1);
    add_edge(edge_node[e.id], face_node[fs.edge_faces[k].second], 1);
  }
  for (int i = 1; i <= net.n; ++i) {
    add_edge(stub[i - 1], bip.boundary[2 * i - 2], 1);                      // odd vertex 2i-1
    add_edge(bip.boundary[2 * i - 1], face_node[fs.arc_face[i - 1]], 1);    // even vertex 2i
  }
  return bip;
}

BipartiteNetwork temperley(const Network& net) {
  BipartiteNetwork bip = dual_temperley(net);
  for (auto& node : bip.nodes) node.black = !node.black;
  return bip;
}

std::map<IndexSet, Rational> dimer_table(const BipartiteNetwork& bip) {
  int N = int(bip.nodes.size());
  std::vector<std::vector<int>> inc(N);  // incident edge indices
  for (size_t k = 0; k < bip.edges.size(); ++k) {
    inc[bip.edges[k].a].push_back(int(k));
    inc[bip.edges[k].b].push_back(int(k));
  }
  std::vector<char> matched(N, 0);
  std::map<IndexSet, Rational> table;

  bool boundary_black = !bip.boundary.empty() && bip.nodes[bip.boundary[0]].black;

  std::function<void(int, Rational)> rec = [&](int v, Rational wt) {
    while (v < N && (matched[v] || bip.nodes[v].kind == BipartiteNetwork::Kind::boundary)) ++v;
    if (v == N) {
      IndexSet I;
      for (int j = 1; j <= 2 * bip.n; ++j) {
        bool covered = matched[bip.boundary[j - 1]];
        if (covered == boundary_black) I.push_back(j);
      }
      auto [it, fresh] = table.try_emplace(I, wt);
      if (!fresh) it->second += wt;
      return;
    }
    for (int k : inc[v]) {
      int other = bip.edges[k].a == v ? bip.edges[k].b : bip.edges[k].a;
      if (matched[other]) continue;
      matched[v] = matched[other] = 1;
      rec(v + 1, wt * bip.edges[k].w);
      matched[v] = matched[other] = 0;
    }
  };
  rec(0, Rational(1));
  return table;
}

Rational dimer_partition(const BipartiteNetwork& bip, const IndexSet& I) {
  auto table = dimer_table(bip);
  auto it = table.find(I);
  return it == table.end() ? Rational(0) : it->second;
}

}  // namespace enet
