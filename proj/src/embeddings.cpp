#include "enet/embeddings.hpp"

#include "enet/groves.hpp"
#include "enet/wedge.hpp"

namespace enet {

RatMatrix omega_full(const ResponseMatrix& mr) {
  int n = mr.n;
  if (n < 2) throw input_error("omega needs n >= 2");
  RatMatrix O(n, 2 * n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      int sgn = (i + j) % 2 == 0 ? 1 : -1;
      O.at(i, 2 * j - 1) = sgn * mr.m.at(i, j);
    }
    if (i == 1) {
      O.at(1, 2) = 1;
      O.at(1, 2 * n) = n % 2 == 0 ? 1 : -1;  // (-1)^n closes the wrap
    } else {
      O.at(i, 2 * (i - 1)) = 1;
      O.at(i, 2 * i) = 1;
    }
  }
  return O;
}

RatMatrix omega_matrix(const ResponseMatrix& mr) {
  RatMatrix O = omega_full(mr);
  RatMatrix Op(mr.n - 1, 2 * mr.n);
  std::copy(O.a.begin(), O.a.begin() + Op.a.size(), Op.a.begin());
  return Op;
}

RatMatrix basis_matrix(int n) {
  RatMatrix B(2 * n - 2, 2 * n);
  for (int i = 1; i <= 2 * n - 2; ++i) {
    B.at(i, i) = 1;
    B.at(i, i + 2) = 1;
  }
  return B;
}

RatMatrix to_v_basis(const RatMatrix& M) {
  if (M.cols < 4 || M.cols % 2 != 0) throw input_error("to_v_basis: ambient must be even >= 4");
  int m = M.cols;
  RatMatrix X(M.rows, m - 2);
  for (int r = 1; r <= M.rows; ++r) {
    // c_i = row_i - c_{i-2} against v_i = e_i + e_{i+2}; the last two columns
    // must close up exactly, which is V-membership
    for (int i = 1; i <= m - 2; ++i)
      X.at(r, i) = M.at(r, i) - (i > 2 ? X.at(r, i - 2) : Rational(0));
    if (X.at(r, m - 3) != M.at(r, m - 1) || X.at(r, m - 2) != M.at(r, m))
      throw input_error("to_v_basis: row " + std::to_string(r) + " is not in V");
  }
  return X;
}

RatMatrix omega_tilde(const ResponseMatrix& mr) { return to_v_basis(omega_matrix(mr)); }

RatMatrix omega_resistance(const ResistanceMatrix& R) {
  int n = R.n;
  if (n < 2) throw input_error("omega_resistance needs n >= 2");
  auto r = [&](int i, int j) { return R.m.at((i - 1) % n + 1, (j - 1) % n + 1); };
  ResponseMatrix m_like{n, RatMatrix(n, n)};
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      m_like.m.at(i, j) = -(r(i, j) + r(i + 1, j + 1) - r(i, j + 1) - r(i + 1, j)) / 2;
  return omega_full(m_like) * cyclic_shift(n);
}

RatMatrix cgs_S(const ResponseMatrix& mr, bool first_gauge) {
  int n = mr.n;
  for (int r = 1; r <= n; ++r) {
    Rational s = 0;
    for (int c = 1; c <= n; ++c) s += mr.m.at(r, c);
    if (s != 0) throw input_error("gauge error: response rows must sum to zero");
    for (int c = 1; c <= n; ++c)
      if (mr.m.at(r, c) != mr.m.at(c, r)) throw input_error("gauge error: response must be symmetric");
  }
  // S_{i,k} telescopes against columns of M_R; the free constant per column is
  // fixed by S_{i,n}=0 (default) or S_{i,1}=0
  RatMatrix S(n, n);
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k) {
      Rational acc = 0;
      for (int j = (first_gauge ? 2 : 1); j <= k; ++j) acc += mr.m.at(j, i);
      S.at(i, k) = acc;
    }
  return S;
}

RatMatrix cgs_M(const ResponseMatrix& mr, bool first_gauge) {
  int n = mr.n;
  RatMatrix S = cgs_S(mr, first_gauge);
  RatMatrix M(n + 1, 2 * n);
  for (int j = 1; j <= n; ++j) M.at(1, 2 * j) = 1;
  for (int i = 1; i <= n; ++i) {
    M.at(i + 1, 2 * i - 1) = 1;
    for (int k = 1; k <= n; ++k) M.at(i + 1, 2 * k) = S.at(i, k);
  }
  return M;
}

RatMatrix cgs_D(int n) {
  std::vector<Rational> d(2 * n);
  for (int j = 1; j <= n; ++j) {
    int sgn = j % 2 == 1 ? 1 : -1;
    d[2 * j - 2] = sgn;
    d[2 * j - 1] = sgn;
  }
  return RatMatrix::diagonal(d);
}

RatMatrix cgs_matrix(const ResponseMatrix& mr, bool first_gauge) {
  return cgs_M(mr, first_gauge) * cgs_D(mr.n);
}

RatMatrix x_matrix(const ResponseMatrix& mr) { return cgs_matrix(mr); }

RatMatrix d_tilde(int n) {
  std::vector<Rational> d(2 * n);
  for (int i = 1; i <= 2 * n; ++i) d[i - 1] = i % 2 == 1 ? -1 : 1;
  return RatMatrix::diagonal(d);
}

RatMatrix cyclic_shift(int n) {
  RatMatrix s(2 * n, 2 * n);
  for (int i = 1; i < 2 * n; ++i) s.at(i, i + 1) = 1;
  s.at(2 * n, 1) = n % 2 == 0 ? 1 : -1;
  return s;
}

bool dual_point_check(const Network& net) {
  Network d = dual_network(net);
  RatMatrix od = omega_matrix(response_matrix(d));
  RatMatrix shifted = omega_matrix(response_matrix(net)) * inverse(cyclic_shift(net.n));
  return proportionality_ratio(plucker_of_rowspace(od), plucker_of_rowspace(shifted)).has_value();
}

}  // namespace enet
