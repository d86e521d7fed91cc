#pragma once
#include <cmath>
#include <random>
#include <vector>

#include "enet/network.hpp"

namespace fx {

inline enet::Network triangle() {
  return enet::parse_network(
      "enet 1\n"
      "n 3\n"
      "interior 0\n"
      "edge 1 1 2 3\n"
      "edge 2 2 3 1/2\n"
      "edge 3 1 3 2\n"
      "rotation 1 : 3 1\n"
      "rotation 2 : 1 2\n"
      "rotation 3 : 2 3\n");
}

inline enet::Network star() {
  return enet::parse_network(
      "enet 1\n"
      "n 3\n"
      "interior 1\n"
      "edge 1 1 4 2\n"
      "edge 2 2 4 3/2\n"
      "edge 3 3 4 1\n"
      "rotation 1 : 1\n"
      "rotation 2 : 2\n"
      "rotation 3 : 3\n"
      "rotation 4 : 2 1 3\n");
}

inline enet::Network single_edge() {
  return enet::parse_network(
      "enet 1\n"
      "n 2\n"
      "interior 0\n"
      "edge 1 1 2 5/3\n"
      "rotation 1 : 1\n"
      "rotation 2 : 1\n");
}

/* geometric generator: boundary on the unit circle (clockwise labels),
   interior points inside; straight edges accepted greedily when they stay
   clear of other vertices and cross nothing.  Floating point is confined to
   the generator; the emitted networks carry exact rational weights. */
namespace detail {

struct Pt {
  double x = 0, y = 0;
};

inline double cross(Pt o, Pt a, Pt b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

inline bool segments_cross(Pt a, Pt b, Pt c, Pt d) {
  double d1 = cross(a, b, c), d2 = cross(a, b, d);
  double d3 = cross(c, d, a), d4 = cross(c, d, b);
  return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

inline double point_segment_dist(Pt p, Pt a, Pt b) {
  double vx = b.x - a.x, vy = b.y - a.y;
  double t = ((p.x - a.x) * vx + (p.y - a.y) * vy) / (vx * vx + vy * vy);
  t = std::max(0.0, std::min(1.0, t));
  double dx = p.x - (a.x + t * vx), dy = p.y - (a.y + t * vy);
  return std::sqrt(dx * dx + dy * dy);
}

}  // namespace detail

inline std::vector<enet::Network> random_networks(int count = 20, unsigned seed = 20240817) {
  using namespace detail;
  std::mt19937 rng(seed);
  std::vector<enet::Network> out;
  const double pi = std::acos(-1.0);

  while (int(out.size()) < count) {
    int n = 3 + int(rng() % 3);
    int interior = int(rng() % 3);
    int V = n + interior;

    std::vector<Pt> pos(V + 1);
    bool placed = true;
    for (int i = 1; i <= n; ++i) {
      double th = pi / 2 - 2 * pi * (i - 1) / n;
      pos[i] = {std::cos(th), std::sin(th)};
    }
    std::uniform_real_distribution<double> unit(-0.6, 0.6);
    for (int v = n + 1; v <= V && placed; ++v) {
      for (int attempt = 0;; ++attempt) {
        if (attempt == 40) {
          placed = false;
          break;
        }
        Pt p{unit(rng), unit(rng)};
        bool ok = true;
        for (int w = 1; w < v; ++w) {
          double dx = p.x - pos[w].x, dy = p.y - pos[w].y;
          if (dx * dx + dy * dy < 0.15 * 0.15) ok = false;
        }
        if (ok) {
          pos[v] = p;
          break;
        }
      }
    }
    if (!placed) continue;

    std::vector<std::pair<int, int>> candidates;
    for (int u = 1; u <= V; ++u)
      for (int v = u + 1; v <= V; ++v) candidates.push_back({u, v});
    std::shuffle(candidates.begin(), candidates.end(), rng);

    int cap = 3 + int(rng() % 10);
    std::vector<std::pair<int, int>> accepted;
    for (auto [u, v] : candidates) {
      if (int(accepted.size()) == cap || int(accepted.size()) == 12) break;
      bool ok = true;
      for (int w = 1; w <= V && ok; ++w)
        if (w != u && w != v && point_segment_dist(pos[w], pos[u], pos[v]) < 0.05) ok = false;
      for (auto [a, b] : accepted) {
        if (!ok) break;
        if (a == u || a == v || b == u || b == v) continue;
        if (segments_cross(pos[u], pos[v], pos[a], pos[b])) ok = false;
      }
      if (ok) accepted.push_back({u, v});
    }

    // connectivity over all vertices
    std::vector<int> comp(V + 1);
    for (int v = 1; v <= V; ++v) comp[v] = v;
    auto find = [&](int x) {
      while (comp[x] != x) x = comp[x] = comp[comp[x]];
      return x;
    };
    for (auto [u, v] : accepted) comp[find(u)] = find(v);
    bool connected = true;
    for (int v = 2; v <= V; ++v)
      if (find(v) != find(1)) connected = false;
    if (!connected) continue;

    enet::Network net;
    net.n = n;
    net.interior = interior;
    std::vector<std::vector<std::pair<double, int>>> incident(V + 1);
    for (size_t k = 0; k < accepted.size(); ++k) {
      auto [u, v] = accepted[k];
      int num = 1 + int(rng() % 7), den = 1 + int(rng() % 7);
      net.edges.push_back({int(k) + 1, u, v, enet::Rational(num, den)});
      double ang_uv = std::atan2(pos[v].y - pos[u].y, pos[v].x - pos[u].x);
      incident[u].push_back({ang_uv, int(k) + 1});
      incident[v].push_back({ang_uv > 0 ? ang_uv - pi : ang_uv + pi, int(k) + 1});
    }
    for (int v = 1; v <= V; ++v) {
      double anchor = 0;
      if (v <= n) {
        // counterclockwise start just after the arc toward vertex v-1
        double th = pi / 2 - 2 * pi * (v - 1) / n;
        anchor = th + pi / 2;
      }
      auto& inc = incident[v];
      std::sort(inc.begin(), inc.end(), [&](auto& a, auto& b) {
        auto rel = [&](double x) {
          double r = std::fmod(x - anchor, 2 * pi);
          return r < 1e-9 ? r + 2 * pi : r;
        };
        return rel(a.first) < rel(b.first);
      });
      auto& rot = net.rotation[v];
      for (auto& [ang, id] : inc) rot.push_back(id);
    }
    try {
      enet::validate(net);
    } catch (const std::exception&) {
      continue;  // defensive: drop degenerate samples
    }
    out.push_back(std::move(net));
  }
  return out;
}

}  // namespace fx
