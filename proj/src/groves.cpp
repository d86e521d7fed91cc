#include "enet/groves.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>

namespace enet {

int max_enumeration_edges() {
  if (const char* env = std::getenv("ENET_MAX_EDGES")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 24;
}

namespace {

int uf_find(std::vector<int>& p, int x) { return p[x] == x ? x : p[x] = uf_find(p, p[x]); }

}  // namespace

std::vector<Grove> enumerate_groves(const Network& net) {
  validate(net);
  if (int(net.edges.size()) > max_enumeration_edges())
    throw unsupported_error("too many edges for exhaustive grove enumeration");

  // quotient classes: identified boundary labels collapse to one vertex
  int V = net.vertex_count();
  std::vector<int> cls(V + 1);
  std::iota(cls.begin(), cls.end(), 0);
  if (net.cactus)
    for (auto& b : net.cactus->blocks)
      for (int x : b) cls[x] = b[0];

  std::vector<Grove> out;
  std::vector<int> chosen;
  std::vector<int> parent(V + 1);
  std::iota(parent.begin(), parent.end(), 0);

  std::function<void(size_t, std::vector<int>, Rational)> rec =
      [&](size_t k, std::vector<int> uf, Rational wt) {
        if (k == net.edges.size()) {
          // every component must touch the boundary
          std::vector<char> has_boundary(V + 1, 0);
          for (int b = 1; b <= net.n; ++b) has_boundary[uf_find(uf, cls[b])] = 1;
          for (int v = net.n + 1; v <= V; ++v)
            if (!has_boundary[uf_find(uf, cls[v])]) return;
          std::vector<std::vector<int>> by_root(V + 1);
          for (int b = 1; b <= net.n; ++b) by_root[uf_find(uf, cls[b])].push_back(b);
          std::vector<std::vector<int>> blocks;
          for (auto& blk : by_root)
            if (!blk.empty()) blocks.push_back(blk);
          out.push_back(Grove{chosen, make_partition(net.n, std::move(blocks)), wt});
          return;
        }
        const Edge& e = net.edges[k];
        rec(k + 1, uf, wt);  // skip edge
        int ru = uf_find(uf, cls[e.u]), rv = uf_find(uf, cls[e.v]);
        if (ru != rv) {  // take edge unless it closes a cycle in the quotient
          uf[rv] = ru;
          chosen.push_back(e.id);
          rec(k + 1, std::move(uf), wt * e.w);
          chosen.pop_back();
        }
      };
  rec(0, parent, Rational(1));
  return out;
}

GroveTable grove_measurements(const Network& net) {
  GroveTable gt;
  gt.n = net.n;
  for (auto& g : enumerate_groves(net)) {
    auto [it, fresh] = gt.entries.try_emplace(g.partition, g.weight);
    if (!fresh) it->second += g.weight;
  }
  return gt;
}

WedgeVector lam_plucker(const GroveTable& gt) {
  int n = gt.n;
  WedgeVector w(2 * n, n - 1);
  for (const IndexSet& I : all_index_sets(2 * n, n - 1)) {
    Rational acc = 0;
    for (auto& [sigma, L] : gt.entries)
      if (is_concordant(I, sigma)) acc += L;
    w.add(I, acc);
  }
  return w;
}

WedgeVector cgs_plucker(const GroveTable& gt) {
  int n = gt.n;
  WedgeVector w(2 * n, n + 1);
  for (const IndexSet& I : all_index_sets(2 * n, n + 1)) {
    Rational acc = 0;
    for (auto& [sigma, L] : gt.entries)
      if (is_coconcordant(I, sigma)) acc += L;
    w.add(I, acc);
  }
  return w;
}

WedgeVector lagrangian_plucker(const GroveTable& gt) {
  int n = gt.n;
  WedgeVector w(2 * n - 2, n - 1);
  for (const IndexSet& I : all_index_sets(2 * n - 2, n - 1)) {
    Rational acc = 0;
    for (auto& [sigma, L] : gt.entries)
      if (is_lagrangian_concordant(I, sigma)) acc += L;
    w.add(I, acc);
  }
  return w;
}

std::string grove_table_str(const GroveTable& gt) {
  std::ostringstream out;
  for (auto& [sigma, L] : gt.entries) out << partition_str(sigma) << " : " << rat_str(L) << '\n';
  return out.str();
}

}  // namespace enet
