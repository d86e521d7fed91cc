#include "enet/noncrossing.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace enet {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[y] = x;
    return true;
  }
};

std::vector<std::vector<int>> canonical_blocks(int n, std::vector<std::vector<int>> blocks) {
  std::vector<int> seen(n + 1, 0);
  for (auto& b : blocks) {
    if (b.empty()) throw input_error("empty block");
    std::sort(b.begin(), b.end());
    for (int x : b) {
      if (x < 1 || x > n) throw input_error("block element out of range");
      if (seen[x]++) throw input_error("repeated block element");
    }
  }
  for (int x = 1; x <= n; ++x)
    if (!seen[x]) throw input_error("blocks do not cover the ground set");
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return blocks;
}

std::vector<std::vector<int>> blocks_of_uf(int n, UnionFind& uf) {
  std::vector<std::vector<int>> by_root(n);
  for (int x = 0; x < n; ++x) by_root[uf.find(x)].push_back(x + 1);
  std::vector<std::vector<int>> blocks;
  for (auto& b : by_root)
    if (!b.empty()) blocks.push_back(std::move(b));
  return blocks;
}

/* Kreweras complement on a circle of n points: complement point i sits between
   primal points i and i+1; points i and j are joined iff the primal stretch
   {i+1,...,j} is a union of primal blocks. */
std::vector<std::vector<int>> circle_complement(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> block_of(n + 1);
  for (size_t b = 0; b < blocks.size(); ++b)
    for (int x : blocks[b]) block_of[x] = int(b);
  UnionFind uf(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      std::vector<char> inside(blocks.size(), 0);
      for (int x = i + 1; x <= j; ++x) inside[block_of[x]] = 1;
      bool whole = true;
      for (size_t b = 0; b < blocks.size() && whole; ++b)
        if (inside[b])
          for (int x : blocks[b])
            if (x <= i || x > j) whole = false;
      if (whole) uf.unite(i - 1, j - 1);
    }
  return blocks_of_uf(n, uf);
}

}  // namespace

NonCrossingPartition make_partition(int n, std::vector<std::vector<int>> blocks) {
  NonCrossingPartition p{n, canonical_blocks(n, std::move(blocks))};
  if (!is_noncrossing(p)) throw input_error("partition is crossing");
  return p;
}

bool is_noncrossing(const NonCrossingPartition& p) {
  std::vector<int> block_of(p.n + 1, -1);
  for (size_t b = 0; b < p.blocks.size(); ++b)
    for (int x : p.blocks[b]) block_of[x] = int(b);
  for (int i = 1; i <= p.n; ++i)
    for (int j = i + 1; j <= p.n; ++j)
      for (int k = j + 1; k <= p.n; ++k)
        for (int l = k + 1; l <= p.n; ++l)
          if (block_of[i] == block_of[k] && block_of[j] == block_of[l] &&
              block_of[i] != block_of[j])
            return false;
  return true;
}

Integer catalan(int n) {
  Integer c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

std::vector<NonCrossingPartition> enumerate_nc(int n) {
  if (n < 1 || n > 10) throw input_error("enumerate_nc: n out of range [1,10]");
  // grow element by element, keeping only non-crossing prefixes
  std::vector<NonCrossingPartition> out;
  std::vector<int> block_of(n + 1, -1);
  std::function<void(int, int)> rec = [&](int x, int nblocks) {
    if (x > n) {
      std::vector<std::vector<int>> blocks(nblocks);
      for (int y = 1; y <= n; ++y) blocks[block_of[y]].push_back(y);
      NonCrossingPartition p{n, std::move(blocks)};
      if (is_noncrossing(p)) out.push_back(std::move(p));
      return;
    }
    for (int b = 0; b <= nblocks; ++b) {
      block_of[x] = b;
      rec(x + 1, std::max(nblocks, b + 1));
    }
    block_of[x] = -1;
  };
  rec(1, 0);
  std::sort(out.begin(), out.end(),
            [](const NonCrossingPartition& a, const NonCrossingPartition& b) {
              return a.blocks < b.blocks;
            });
  return out;
}

NonCrossingPartition dual(const NonCrossingPartition& sigma) {
  return NonCrossingPartition{sigma.n, canonical_blocks(sigma.n, circle_complement(sigma.n, sigma.blocks))};
}

NonCrossingPartition dual_inverse(const NonCrossingPartition& sigma_tilde) {
  /* bar i sits between tilde i-1 and tilde i, so the complement of the tilde
     circle lands on bars shifted by one */
  int n = sigma_tilde.n;
  auto comp = circle_complement(n, sigma_tilde.blocks);
  for (auto& b : comp)
    for (int& x : b) x = x % n + 1;
  return NonCrossingPartition{n, canonical_blocks(n, std::move(comp))};
}

MergedPartition merge(const NonCrossingPartition& sigma) {
  NonCrossingPartition st = dual(sigma);
  std::vector<std::vector<int>> blocks;
  for (auto b : sigma.blocks) {
    for (int& x : b) x = 2 * x - 1;
    blocks.push_back(std::move(b));
  }
  for (auto b : st.blocks) {
    for (int& x : b) x = 2 * x;
    blocks.push_back(std::move(b));
  }
  return MergedPartition{sigma.n, canonical_blocks(2 * sigma.n, std::move(blocks))};
}

NonCrossingPartition sigma_of(const MergedPartition& m) {
  std::vector<std::vector<int>> blocks;
  for (auto& b : m.blocks)
    if (b[0] % 2 == 1) {
      std::vector<int> nb;
      for (int x : b) nb.push_back((x + 1) / 2);
      blocks.push_back(std::move(nb));
    }
  return NonCrossingPartition{m.n, canonical_blocks(m.n, std::move(blocks))};
}

NonCrossingPartition sigma_tilde_of(const MergedPartition& m) {
  std::vector<std::vector<int>> blocks;
  for (auto& b : m.blocks)
    if (b[0] % 2 == 0) {
      std::vector<int> nb;
      for (int x : b) nb.push_back(x / 2);
      blocks.push_back(std::move(nb));
    }
  return NonCrossingPartition{m.n, canonical_blocks(m.n, std::move(blocks))};
}

bool is_concordant(const IndexSet& I, const NonCrossingPartition& sigma) {
  if (int(I.size()) != sigma.n - 1) throw input_error("is_concordant: |I| must be n-1");
  std::vector<char> in_I(2 * sigma.n + 1, 0);
  for (int x : I) {
    if (x < 1 || x > 2 * sigma.n) throw input_error("is_concordant: index out of range");
    in_I[x] = 1;
  }
  for (auto& b : merge(sigma).blocks) {
    int outside = 0;
    for (int x : b) outside += !in_I[x];
    if (outside != 1) return false;
  }
  return true;
}

bool is_coconcordant(const IndexSet& I, const NonCrossingPartition& sigma) {
  if (int(I.size()) != sigma.n + 1) throw input_error("is_coconcordant: |I| must be n+1");
  std::vector<char> in_I(2 * sigma.n + 1, 0);
  for (int x : I) {
    if (x < 1 || x > 2 * sigma.n) throw input_error("is_coconcordant: index out of range");
    in_I[x] = 1;
  }
  for (auto& b : merge(sigma).blocks) {
    int hits = 0;
    for (int x : b) hits += in_I[x];
    if (hits != 1) return false;
  }
  return true;
}

MergedPartition isolate(const MergedPartition& m, int i) {
  if (i < 1 || i > 2 * m.n) throw input_error("isolate: vertex out of range");
  if (i % 2 == 1) {
    NonCrossingPartition s = sigma_of(m);
    int k = (i + 1) / 2;
    std::vector<std::vector<int>> blocks{{k}};
    for (auto b : s.blocks) {
      b.erase(std::remove(b.begin(), b.end(), k), b.end());
      if (!b.empty()) blocks.push_back(std::move(b));
    }
    return merge(NonCrossingPartition{m.n, canonical_blocks(m.n, std::move(blocks))});
  }
  NonCrossingPartition st = sigma_tilde_of(m);
  int k = i / 2;
  std::vector<std::vector<int>> blocks{{k}};
  for (auto b : st.blocks) {
    b.erase(std::remove(b.begin(), b.end(), k), b.end());
    if (!b.empty()) blocks.push_back(std::move(b));
  }
  NonCrossingPartition st2{m.n, canonical_blocks(m.n, std::move(blocks))};
  return merge(dual_inverse(st2));
}

int pairing(const NonCrossingPartition& tau, const NonCrossingPartition& sigma) {
  if (tau.n != sigma.n) throw input_error("pairing: size mismatch");
  if (int(tau.blocks.size() + sigma.blocks.size()) != tau.n + 1) return 0;
  UnionFind uf(tau.n);
  for (auto* p : {&tau, &sigma})
    for (auto& b : p->blocks)
      for (size_t i = 1; i < b.size(); ++i) uf.unite(b[0] - 1, b[i] - 1);
  for (int x = 1; x < tau.n; ++x)
    if (uf.find(x) != uf.find(0)) return 0;
  return 1;
}

namespace {

/* ext of a chord (p,q), p<q, of a bar block: odd ambient indices 2p-1..2q-3;
   of a tilde block: even indices 2p..2q-2 */
std::vector<int> chord_ext(int p, int q, bool bar) {
  std::vector<int> e;
  int lo = bar ? 2 * p - 1 : 2 * p;
  int hi = bar ? 2 * q - 3 : 2 * q - 2;
  for (int x = lo; x <= hi; x += 2) e.push_back(x);
  return e;
}

}  // namespace

LagrangianExtension lagrangian_extension(const NonCrossingPartition& sigma) {
  MergedPartition m = merge(sigma);
  NonCrossingPartition st = sigma_tilde_of(m);

  auto run = [&](const std::vector<std::vector<int>>& blocks, bool bar,
                 std::vector<std::vector<int>>& out) {
    // enveloped-block extensions to subtract: block b2 is enveloped by chord
    // (p,q) of another block of the same kind iff b2 lies strictly inside (p,q)
    for (auto& b : blocks) {
      if (b.size() < 2) continue;
      for (size_t l = 0; l + 1 < b.size(); ++l) {
        int p = b[l], q = b[l + 1];
        std::vector<char> drop(2 * sigma.n, 0);
        for (auto& b2 : blocks) {
          if (&b2 == &b) continue;
          if (b2.front() > p && b2.back() < q)
            for (size_t l2 = 0; l2 + 1 < b2.size(); ++l2)
              for (int x : chord_ext(b2[l2], b2[l2 + 1], bar)) drop[x] = 1;
        }
        std::vector<int> sub;
        for (int x : chord_ext(p, q, bar))
          if (!drop[x]) sub.push_back(x);
        out.push_back(std::move(sub));
      }
    }
  };

  LagrangianExtension ext;
  run(sigma.blocks, true, ext.sub_components);
  run(st.blocks, false, ext.sub_components);
  std::sort(ext.sub_components.begin(), ext.sub_components.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return ext;
}

bool is_lagrangian_concordant(const IndexSet& I, const NonCrossingPartition& sigma) {
  if (int(I.size()) != sigma.n - 1) throw input_error("is_lagrangian_concordant: |I| must be n-1");
  LagrangianExtension ext = lagrangian_extension(sigma);
  std::vector<char> in_I(2 * sigma.n - 1, 0);
  for (int x : I) {
    if (x < 1 || x > 2 * sigma.n - 2) throw input_error("is_lagrangian_concordant: index out of range");
    in_I[x] = 1;
  }
  size_t hits_total = 0;
  for (auto& sub : ext.sub_components) {
    int hits = 0;
    for (int x : sub) hits += in_I[x];
    if (hits != 1) return false;
    hits_total += hits;
  }
  return hits_total == I.size();  // no element of I outside the sub-components
}

std::string partition_str(const NonCrossingPartition& p) {
  std::ostringstream out;
  for (size_t b = 0; b < p.blocks.size(); ++b) {
    if (b) out << '|';
    for (size_t i = 0; i < p.blocks[b].size(); ++i) {
      if (i) out << ' ';
      out << p.blocks[b][i];
    }
  }
  return out.str();
}

NonCrossingPartition partition_parse(const std::string& text, int n) {
  std::vector<std::vector<int>> blocks;
  std::istringstream in(text);
  std::string part;
  int maxel = 0;
  while (std::getline(in, part, '|')) {
    std::istringstream ps(part);
    std::vector<int> block;
    int x;
    while (ps >> x) {
      block.push_back(x);
      maxel = std::max(maxel, x);
    }
    if (!block.empty()) blocks.push_back(std::move(block));
  }
  if (n == 0) n = maxel;
  return make_partition(n, std::move(blocks));
}

std::string lext_str(const LagrangianExtension& e) {
  std::ostringstream out;
  for (auto& sub : e.sub_components) {
    out << '(';
    for (size_t i = 0; i < sub.size(); ++i) {
      if (i) out << ',';
      out << sub[i];
    }
    out << ')';
  }
  return out.str();
}

}  // namespace enet
