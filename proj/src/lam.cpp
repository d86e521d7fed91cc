#include "enet/lam.hpp"

#include <map>
#include <sstream>

#include "enet/embeddings.hpp"
#include "enet/symplectic.hpp"

namespace enet {

namespace {

RatMatrix elementary(int dim, int r, int c, const Rational& t) {
  RatMatrix m = RatMatrix::identity(dim);
  m.at(r, c) += t;
  return m;
}

}  // namespace

RatMatrix x_gen(int n, int i, const Rational& t) {
  if (i < 1 || i > 2 * n) throw input_error("generator index out of range");
  if (i < 2 * n) return elementary(2 * n, i, i + 1, t);
  RatMatrix s = cyclic_shift(n);
  return s * elementary(2 * n, 1, 2, t) * inverse(s);
}

RatMatrix y_gen(int n, int i, const Rational& t) {
  if (i < 1 || i > 2 * n) throw input_error("generator index out of range");
  if (i < 2 * n) return elementary(2 * n, i + 1, i, t);
  RatMatrix s = cyclic_shift(n);
  return s * elementary(2 * n, 2, 1, t) * inverse(s);
}

LamGenerator generator(int n, int i, const Rational& t) {
  LamGenerator g;
  g.n = n;
  g.i = i;
  g.t = t;
  int prev = i == 1 ? 2 * n : i - 1;
  g.u = x_gen(n, i, t) * y_gen(n, prev, t);
  g.nil = x_gen(n, i, 1) * y_gen(n, prev, 1) - RatMatrix::identity(2 * n);
  return g;
}

RatMatrix restrict_to_V_operator(const RatMatrix& u) {
  if (u.rows != u.cols || u.rows % 2 != 0 || u.rows < 4)
    throw input_error("operator must be square of even dimension >= 4");
  int n = u.rows / 2;
  try {
    return to_v_basis(basis_matrix(n) * u);
  } catch (const input_error&) {
    throw input_error("V is not invariant under the operator");
  }
}

WedgeVector act_on_wedge(const RatMatrix& a, const WedgeVector& w, ActionMode mode) {
  if (a.rows != a.cols || a.rows != w.ambient) throw input_error("act_on_wedge: size mismatch");
  WedgeVector out(w.ambient, w.degree);
  for (auto& [I, c] : w.coeffs) {
    if (mode == ActionMode::group) {
      std::vector<std::vector<Rational>> factors;
      for (int i : I) factors.push_back(a.row(i));
      out = out + wedge_expand(factors).scaled(c);
    } else {
      for (size_t p = 0; p < I.size(); ++p) {
        std::vector<Rational> img = a.row(I[p]);
        for (int j = 1; j <= w.ambient; ++j) {
          if (img[j - 1] == 0) continue;
          IndexSet J = I;
          J[p] = j;
          int sgn = normalize_index_set(J);
          if (sgn != 0) out.add(J, c * img[j - 1] * sgn);
        }
      }
    }
  }
  return out;
}

namespace {

/* all noncrossing partitions obtained by merging the singleton {k} into
   another block of sigma */
std::vector<NonCrossingPartition> single_merges(const NonCrossingPartition& sigma, int k) {
  std::vector<NonCrossingPartition> out;
  for (size_t b = 0; b < sigma.blocks.size(); ++b) {
    if (sigma.blocks[b] == std::vector<int>{k}) continue;
    std::vector<std::vector<int>> blocks;
    for (size_t j = 0; j < sigma.blocks.size(); ++j) {
      if (sigma.blocks[j] == std::vector<int>{k}) continue;
      blocks.push_back(sigma.blocks[j]);
      if (j == b) blocks.back().push_back(k);
    }
    NonCrossingPartition kappa = make_partition(sigma.n, std::move(blocks));
    if (is_noncrossing(kappa)) out.push_back(std::move(kappa));
  }
  return out;
}

bool vertex_isolated(const NonCrossingPartition& sigma, int k) {
  for (auto& b : sigma.blocks)
    if (b == std::vector<int>{k}) return true;
  return false;
}

}  // namespace

GroveTable grove_coordinate_action(const GroveTable& gt, int i, const Rational& a) {
  int n = gt.n;
  if (i < 1 || i > 2 * n) throw input_error("generator index out of range");
  GroveTable out;
  out.n = n;
  for (auto& sigma : enumerate_nc(n)) {
    Rational v = gt.at(sigma);
    int k = (i + 1) / 2;
    if (i % 2 == 1) {
      if (vertex_isolated(sigma, k))
        for (auto& kappa : single_merges(sigma, k)) v += a * gt.at(kappa);
    } else {
      NonCrossingPartition st = dual(sigma);
      if (vertex_isolated(st, k))
        for (auto& kt : single_merges(st, k)) v += a * gt.at(dual_inverse(kt));
    }
    if (v != 0) out.entries[sigma] = v;
  }
  return out;
}

CheckReport crystal_check(int n) {
  CheckReport rep;
  rep.name = "crystal";
  auto sigmas = enumerate_nc(n);
  std::map<NonCrossingPartition, WedgeVector> basis;
  for (auto& s : sigmas) basis[s] = concordance_vector(s);
  for (int i = 1; i <= 2 * n; ++i) {
    RatMatrix nil = generator(n, i, 1).nil;
    for (auto& sigma : sigmas) {
      WedgeVector got = act_on_wedge(nil, basis[sigma], ActionMode::derivation);
      MergedPartition m = merge(sigma);
      bool isolated = false;
      for (auto& b : m.blocks)
        if (b == std::vector<int>{i}) isolated = true;
      std::ostringstream ctx;
      ctx << "sigma=" << partition_str(sigma) << " i=" << i;
      if (isolated) {
        if (!got.is_zero()) rep.fail(ctx.str() + ": expected 0, got " + wedge_str(got));
      } else {
        NonCrossingPartition target = sigma_of(isolate(m, i));
        if (got != basis[target])
          rep.fail(ctx.str() + ": expected w_{" + partition_str(target) + "}, got " +
                   wedge_str(got));
      }
    }
  }
  return rep;
}

CheckReport invariance_check(int n) {
  CheckReport rep;
  rep.name = "invariance";
  auto sigmas = enumerate_nc(n);
  // crystal outcome per (sigma, i): -1 for zero, else index of g_i sigma
  std::map<NonCrossingPartition, int> index;
  for (size_t k = 0; k < sigmas.size(); ++k) index[sigmas[k]] = int(k);
  std::vector<std::vector<int>> outcome(sigmas.size(), std::vector<int>(2 * n + 1, -1));
  for (size_t k = 0; k < sigmas.size(); ++k) {
    MergedPartition m = merge(sigmas[k]);
    for (int i = 1; i <= 2 * n; ++i) {
      bool isolated = false;
      for (auto& b : m.blocks)
        if (b == std::vector<int>{i}) isolated = true;
      if (!isolated) outcome[k][i] = index[sigma_of(isolate(m, i))];
    }
  }
  for (int i = 1; i <= 2 * n; ++i)
    for (size_t t = 0; t < sigmas.size(); ++t)
      for (size_t s = 0; s < sigmas.size(); ++s) {
        int lhs = outcome[t][i] < 0 ? 0 : pairing(sigmas[outcome[t][i]], sigmas[s]);
        int rhs = outcome[s][i] < 0 ? 0 : pairing(sigmas[t], sigmas[outcome[s][i]]);
        if (lhs != rhs) {
          std::ostringstream ctx;
          ctx << "tau=" << partition_str(sigmas[t]) << " sigma=" << partition_str(sigmas[s])
              << " i=" << i << ": <u w_tau, w_sigma>=" << lhs << " but <w_tau, u w_sigma>=" << rhs;
          rep.fail(ctx.str());
        }
      }
  return rep;
}

}  // namespace enet
