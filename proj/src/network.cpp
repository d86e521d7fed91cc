#include "enet/network.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace enet {

const Edge& Network::edge_by_id(int id) const {
  for (auto& e : edges)
    if (e.id == id) return e;
  throw input_error("unknown edge id " + std::to_string(id));
}

namespace {

/* Dart model of the map closed by the boundary arcs.  Edge k (by position)
   owns darts 2k (u->v) and 2k+1 (v->u); arc i in [0,n) joins boundary
   vertices i+1 and i%n+2 and owns darts 2E+2i (increasing) and 2E+2i+1. */
struct Map {
  const Network* net;
  int E, n;
  std::vector<int> tail, head;
  std::vector<std::vector<int>> rot;     // per vertex (1-based), ccw outgoing darts
  std::vector<int> rot_vertex, rot_pos;  // dart -> location in rot

  int reverse(int d) const { return d ^ 1; }
  int ccw_next(int d) const {
    const auto& r = rot[rot_vertex[d]];
    return r[(rot_pos[d] + 1) % r.size()];
  }
  int face_next(int d) const { return ccw_next(reverse(d)); }
  bool is_arc(int d) const { return d >= 2 * E; }
  int arc_index(int d) const { return (d - 2 * E) / 2; }
  bool arc_increasing(int d) const { return d >= 2 * E && (d - 2 * E) % 2 == 0; }
};

Map build_map(const Network& net) {
  Map m;
  m.net = &net;
  m.E = int(net.edges.size());
  m.n = net.n;
  int D = 2 * m.E + 2 * m.n;
  m.tail.resize(D);
  m.head.resize(D);
  for (int k = 0; k < m.E; ++k) {
    m.tail[2 * k] = net.edges[k].u;
    m.head[2 * k] = net.edges[k].v;
    m.tail[2 * k + 1] = net.edges[k].v;
    m.head[2 * k + 1] = net.edges[k].u;
  }
  for (int i = 0; i < m.n; ++i) {
    int a = 2 * m.E + 2 * i;
    m.tail[a] = i + 1;
    m.head[a] = i % m.n + 2;
    m.tail[a + 1] = m.head[a];
    m.head[a + 1] = m.tail[a];
  }

  std::map<int, int> edge_pos;
  for (int k = 0; k < m.E; ++k) edge_pos[net.edges[k].id] = k;

  m.rot.resize(net.vertex_count() + 1);
  auto listed = [&](int v) -> std::vector<int> {
    auto it = net.rotation.find(v);
    std::vector<int> darts;
    if (it == net.rotation.end()) return darts;
    for (int id : it->second) {
      auto ep = edge_pos.find(id);
      if (ep == edge_pos.end()) throw parse_error("rotation mentions unknown edge " + std::to_string(id));
      const Edge& e = net.edges[ep->second];
      if (e.u == v)
        darts.push_back(2 * ep->second);
      else if (e.v == v)
        darts.push_back(2 * ep->second + 1);
      else
        throw parse_error("rotation at vertex " + std::to_string(v) + " lists non-incident edge " +
                          std::to_string(id));
    }
    return darts;
  };
  for (int v = 1; v <= m.n; ++v) {
    int arc_out = 2 * m.E + 2 * (v - 1);                       // toward v+1
    int arc_back = 2 * m.E + 2 * ((v - 2 + m.n) % m.n) + 1;    // toward v-1
    m.rot[v] = {arc_out, arc_back};
    for (int d : listed(v)) m.rot[v].push_back(d);
  }
  for (int v = m.n + 1; v <= net.vertex_count(); ++v) m.rot[v] = listed(v);

  m.rot_vertex.assign(D, 0);
  m.rot_pos.assign(D, -1);
  for (int v = 1; v <= net.vertex_count(); ++v)
    for (size_t p = 0; p < m.rot[v].size(); ++p) {
      int d = m.rot[v][p];
      if (m.rot_pos[d] != -1) throw parse_error("dart listed twice in rotations");
      m.rot_vertex[d] = v;
      m.rot_pos[d] = int(p);
    }
  for (int d = 0; d < D; ++d)
    if (m.rot_pos[d] == -1)
      throw parse_error("rotation missing for an incident edge at vertex " + std::to_string(m.tail[d]));
  return m;
}

std::vector<std::vector<int>> face_orbits(const Map& m) {
  int D = int(m.tail.size());
  std::vector<char> seen(D, 0);
  std::vector<std::vector<int>> orbits;
  for (int d0 = 0; d0 < D; ++d0) {
    if (seen[d0]) continue;
    std::vector<int> orbit;
    int d = d0;
    do {
      seen[d] = 1;
      orbit.push_back(d);
      d = m.face_next(d);
    } while (d != d0);
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

struct UF {
  std::vector<int> p;
  explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

void validate(const Network& net) {
  if (net.n < 2) throw parse_error("need at least 2 boundary vertices");
  if (net.interior < 0) throw parse_error("negative interior count");
  std::vector<int> ids;
  for (auto& e : net.edges) {
    if (e.u < 1 || e.u > net.vertex_count() || e.v < 1 || e.v > net.vertex_count())
      throw parse_error("edge " + std::to_string(e.id) + " endpoint out of range");
    if (e.u == e.v) throw parse_error("self-loop at edge " + std::to_string(e.id));
    if (e.w <= 0) throw parse_error("conductance must be positive at edge " + std::to_string(e.id));
    ids.push_back(e.id);
  }
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) throw parse_error("duplicate edge id");

  // each vertex's rotation must be a permutation of its incident edges
  std::map<int, std::vector<int>> incident;
  for (auto& e : net.edges) {
    incident[e.u].push_back(e.id);
    incident[e.v].push_back(e.id);
  }
  for (int v = 1; v <= net.vertex_count(); ++v) {
    std::vector<int> want = incident.count(v) ? incident[v] : std::vector<int>{};
    auto it = net.rotation.find(v);
    std::vector<int> got = it == net.rotation.end() ? std::vector<int>{} : it->second;
    std::sort(want.begin(), want.end());
    std::vector<int> gs = got;
    std::sort(gs.begin(), gs.end());
    if (want != gs)
      throw parse_error("rotation at vertex " + std::to_string(v) + " does not match incident edges");
  }
  for (auto& [v, r] : net.rotation)
    if (v < 1 || v > net.vertex_count()) throw parse_error("rotation for unknown vertex " + std::to_string(v));
  if (net.cactus && net.cactus->n != net.n) throw parse_error("cactus partition size mismatch");

  Map m = build_map(net);
  auto orbits = face_orbits(m);

  // the orbit through a decreasing arc dart must be the outer face: exactly the
  // n decreasing arc darts, which also pins the clockwise boundary order
  int outer_start = 2 * m.E + 1;  // decreasing dart of arc 0
  for (auto& orb : orbits) {
    if (std::find(orb.begin(), orb.end(), outer_start) == orb.end()) continue;
    if (int(orb.size()) != net.n) throw parse_error("outer face walk broken: not a disk embedding");
    for (int d : orb)
      if (!m.is_arc(d) || m.arc_increasing(d))
        throw parse_error("outer face walk enters the network: not a disk embedding");
  }

  // per-component Euler characteristic (genus 0 everywhere)
  UF uf(net.vertex_count() + 1);
  for (auto& e : net.edges) uf.unite(e.u, e.v);
  for (int i = 1; i <= net.n; ++i) uf.unite(i, i % net.n + 1);
  std::map<int, std::array<int, 3>> vef;  // component -> V, E(+arcs), F
  for (int v = 1; v <= net.vertex_count(); ++v) vef[uf.find(v)][0]++;
  for (auto& e : net.edges) vef[uf.find(e.u)][1]++;
  for (int i = 1; i <= net.n; ++i) vef[uf.find(i)][1]++;
  for (auto& orb : orbits) vef[uf.find(m.tail[orb[0]])][2]++;
  for (auto& [c, x] : vef) {
    int faces = x[1] == 0 ? 1 : x[2];  // isolated vertex: one face
    if (x[0] - x[1] + faces != 2) throw parse_error("Euler check failed: rotation system is not planar");
  }
}

bool is_connected(const Network& net) {
  if (net.vertex_count() == 0) return true;
  UF uf(net.vertex_count() + 1);
  for (auto& e : net.edges) uf.unite(e.u, e.v);
  for (int v = 2; v <= net.vertex_count(); ++v)
    if (uf.find(v) != uf.find(1)) return false;
  return true;
}

Network parse_network(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  Network net;
  bool have_header = false, have_n = false;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw parse_error("line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (!have_header) {
      int ver;
      if (kw != "enet" || !(ls >> ver) || ver != 1) fail("expected header 'enet 1'");
      have_header = true;
    } else if (kw == "n") {
      if (!(ls >> net.n)) fail("bad n line");
      have_n = true;
    } else if (kw == "interior") {
      if (!(ls >> net.interior)) fail("bad interior line");
    } else if (kw == "edge") {
      Edge e;
      std::string w;
      if (!(ls >> e.id >> e.u >> e.v >> w)) fail("bad edge line");
      try {
        e.w = rat_parse(w);
      } catch (const input_error& err) {
        fail(err.what());
      }
      net.edges.push_back(e);
    } else if (kw == "rotation") {
      int v;
      std::string colon;
      if (!(ls >> v >> colon) || colon != ":") fail("bad rotation line");
      std::vector<int> order;
      int id;
      while (ls >> id) order.push_back(id);
      if (net.rotation.count(v)) fail("duplicate rotation line for vertex " + std::to_string(v));
      net.rotation[v] = order;
    } else if (kw == "cactus") {
      std::string rest;
      std::getline(ls, rest);
      if (!have_n) fail("cactus line before n");
      try {
        net.cactus = partition_parse(rest, net.n);
      } catch (const input_error& err) {
        fail(err.what());
      }
    } else {
      fail("unknown keyword '" + kw + "'");
    }
  }
  if (!have_header) throw parse_error("missing 'enet 1' header");
  if (!have_n) throw parse_error("missing 'n' line");
  validate(net);
  return net;
}

std::string serialize(const Network& net) {
  std::ostringstream out;
  out << "enet 1\n";
  out << "n " << net.n << "\n";
  out << "interior " << net.interior << "\n";
  for (auto& e : net.edges)
    out << "edge " << e.id << ' ' << e.u << ' ' << e.v << ' ' << rat_str(e.w) << "\n";
  for (auto& [v, r] : net.rotation) {
    if (r.empty()) continue;
    out << "rotation " << v << " :";
    for (int id : r) out << ' ' << id;
    out << "\n";
  }
  if (net.cactus) out << "cactus " << partition_str(*net.cactus) << "\n";
  return out.str();
}

RatMatrix laplacian(const Network& net) {
  int V = net.vertex_count();
  RatMatrix L(V, V);
  for (auto& e : net.edges) {
    L.at(e.u, e.u) += e.w;
    L.at(e.v, e.v) += e.w;
    L.at(e.u, e.v) -= e.w;
    L.at(e.v, e.u) -= e.w;
  }
  return L;
}

ResponseMatrix response_matrix(const Network& net) {
  if (net.cactus) throw unsupported_error("response matrix undefined for cactus networks");
  if (!is_connected(net)) throw topology_error("network must be connected");
  RatMatrix L = laplacian(net);
  int n = net.n, k = net.interior;
  RatMatrix mr(n, n);
  if (k == 0) {
    mr = L;
  } else {
    RatMatrix Lbb(n, n), Lbi(n, k), Lii(k, k);
    for (int r = 1; r <= n; ++r)
      for (int c = 1; c <= n; ++c) Lbb.at(r, c) = L.at(r, c);
    for (int r = 1; r <= n; ++r)
      for (int c = 1; c <= k; ++c) Lbi.at(r, c) = L.at(r, n + c);
    for (int r = 1; r <= k; ++r)
      for (int c = 1; c <= k; ++c) Lii.at(r, c) = L.at(n + r, n + c);
    RatMatrix Lii_inv;
    try {
      Lii_inv = inverse(Lii);
    } catch (const rank_error&) {
      throw topology_error("interior block singular");
    }
    mr = Lbb - Lbi * Lii_inv * Lbi.transpose();
  }
  return ResponseMatrix{n, std::move(mr)};
}

ResistanceMatrix effective_resistance(const ResponseMatrix& mr) {
  int n = mr.n;
  for (int r = 1; r <= n; ++r) {
    Rational s = 0;
    for (int c = 1; c <= n; ++c) s += mr.m.at(r, c);
    if (s != 0) throw input_error("response matrix rows must sum to zero");
  }
  if (rank(mr.m) != n - 1) throw topology_error("response matrix is not that of a connected network");
  RatMatrix Mp(n - 1, n - 1);  // ground vertex n
  for (int r = 1; r < n; ++r)
    for (int c = 1; c < n; ++c) Mp.at(r, c) = mr.m.at(r, c);
  RatMatrix inv = inverse(Mp);
  RatMatrix R(n, n);
  for (int i = 1; i < n; ++i) {
    R.at(i, n) = R.at(n, i) = inv.at(i, i);
    for (int j = 1; j < n; ++j)
      if (i != j) R.at(i, j) = inv.at(i, i) + inv.at(j, j) - 2 * inv.at(i, j);
  }
  return ResistanceMatrix{n, std::move(R)};
}

FaceStructure faces(const Network& net) {
  validate(net);
  Map m = build_map(net);
  auto orbits = face_orbits(m);

  FaceStructure fs;
  fs.arc_face.assign(net.n, -1);
  fs.edge_faces.assign(net.edges.size(), {-1, -1});

  int outer_start = 2 * m.E + 1;
  for (auto& orb : orbits) {
    if (std::find(orb.begin(), orb.end(), outer_start) != orb.end()) continue;  // outer face
    int f = fs.face_count++;
    std::vector<int> along;
    for (int d : orb) {
      if (m.is_arc(d)) {
        fs.arc_face[m.arc_index(d)] = f;
      } else {
        int k = d / 2;
        (d % 2 == 0 ? fs.edge_faces[k].first : fs.edge_faces[k].second) = f;
        along.push_back(net.edges[k].id);
      }
    }
    fs.face_edges.push_back(std::move(along));
  }
  return fs;
}

Network dual_network(const Network& net) {
  if (net.cactus) throw unsupported_error("dual of a cactus network is unsupported");
  if (!is_connected(net)) throw unsupported_error("dual needs a connected network");
  std::map<int, int> degree;
  for (auto& e : net.edges) {
    degree[e.u]++;
    degree[e.v]++;
  }
  for (int v = 1; v <= net.n; ++v)
    if (!degree.count(v)) throw unsupported_error("dual needs every boundary vertex used");

  Map m = build_map(net);
  auto orbits = face_orbits(m);
  int outer_start = 2 * m.E + 1;

  // assign dual vertex numbers: face with arc i (0-based) -> boundary i+1
  std::vector<std::vector<int>> inner;
  for (auto& orb : orbits)
    if (std::find(orb.begin(), orb.end(), outer_start) == orb.end()) inner.push_back(orb);
  std::vector<int> dual_vertex(inner.size(), 0);
  for (size_t f = 0; f < inner.size(); ++f) {
    int arcs = 0, arc_id = -1;
    for (int d : inner[f])
      if (m.is_arc(d)) {
        ++arcs;
        arc_id = m.arc_index(d);
      }
    if (arcs > 1) throw unsupported_error("a face touches several boundary arcs; dual undefined");
    if (arcs == 1) dual_vertex[f] = arc_id + 1;
  }
  int next_interior = net.n;
  for (size_t f = 0; f < inner.size(); ++f)
    if (!dual_vertex[f]) dual_vertex[f] = ++next_interior;

  std::vector<int> face_of_dart(m.tail.size(), -1);
  for (size_t f = 0; f < inner.size(); ++f)
    for (int d : inner[f]) face_of_dart[d] = int(f);

  Network d;
  d.n = net.n;
  d.interior = next_interior - net.n;
  for (size_t k = 0; k < net.edges.size(); ++k) {
    int f1 = face_of_dart[2 * k], f2 = face_of_dart[2 * k + 1];
    if (f1 < 0 || f2 < 0 || f1 == f2) throw unsupported_error("dual would contain a self-loop");
    d.edges.push_back(Edge{net.edges[k].id, dual_vertex[f1], dual_vertex[f2], 1 / net.edges[k].w});
  }
  /* dual rotation: the face walk crosses the dual edges in clockwise order
     around the dual vertex, so reverse it for a counterclockwise list; for a
     boundary face start just after the arc dart */
  for (size_t f = 0; f < inner.size(); ++f) {
    std::vector<int> walk = inner[f];
    int start = 0;
    for (size_t p = 0; p < walk.size(); ++p)
      if (m.is_arc(walk[p])) start = int(p) + 1;
    std::vector<int> order;
    for (size_t p = 0; p < walk.size(); ++p) {
      int dd = walk[(start + p) % walk.size()];
      if (!m.is_arc(dd)) order.push_back(net.edges[dd / 2].id);
    }
    std::reverse(order.begin(), order.end());
    d.rotation[dual_vertex[f]] = order;
  }
  validate(d);
  return d;
}

Network quotient(const Network& net, const NonCrossingPartition& sigma) {
  if (net.cactus) throw unsupported_error("network already carries a cactus identification");
  if (sigma.n != net.n) throw input_error("quotient: partition size mismatch");
  Network q = net;
  bool trivial = std::all_of(sigma.blocks.begin(), sigma.blocks.end(),
                             [](const std::vector<int>& b) { return b.size() == 1; });
  if (!trivial) q.cactus = sigma;
  return q;
}

Network hollow_cactus(int n, const NonCrossingPartition& sigma) {
  Network net;
  net.n = n;
  net.interior = 0;
  validate(net);
  return quotient(net, sigma);
}

}  // namespace enet
