#include "enet/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace enet {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> init) {
  rows = int(init.size());
  cols = rows ? int(init.begin()->size()) : 0;
  for (auto& r : init) {
    if (int(r.size()) != cols) throw input_error("ragged matrix initializer");
    a.insert(a.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix M(n, n);
  for (int i = 1; i <= n; ++i) M.at(i, i) = 1;
  return M;
}

RatMatrix RatMatrix::diagonal(const std::vector<Rational>& d) {
  RatMatrix M(int(d.size()), int(d.size()));
  for (int i = 0; i < int(d.size()); ++i) M.at(i + 1, i + 1) = d[i];
  return M;
}

bool RatMatrix::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix T(cols, rows);
  for (int r = 1; r <= rows; ++r)
    for (int c = 1; c <= cols; ++c) T.at(c, r) = at(r, c);
  return T;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols != o.rows) throw input_error("matrix product shape mismatch");
  RatMatrix P(rows, o.cols);
  for (int r = 1; r <= rows; ++r)
    for (int k = 1; k <= cols; ++k) {
      const Rational& x = at(r, k);
      if (x == 0) continue;
      for (int c = 1; c <= o.cols; ++c) P.at(r, c) += x * o.at(k, c);
    }
  return P;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  if (rows != o.rows || cols != o.cols) throw input_error("matrix sum shape mismatch");
  RatMatrix S = *this;
  for (size_t i = 0; i < a.size(); ++i) S.a[i] += o.a[i];
  return S;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  if (rows != o.rows || cols != o.cols) throw input_error("matrix difference shape mismatch");
  RatMatrix S = *this;
  for (size_t i = 0; i < a.size(); ++i) S.a[i] -= o.a[i];
  return S;
}

RatMatrix RatMatrix::scaled(const Rational& t) const {
  RatMatrix S = *this;
  for (auto& x : S.a) x *= t;
  return S;
}

std::vector<Rational> RatMatrix::row(int r) const {
  return std::vector<Rational>(a.begin() + size_t(r - 1) * cols, a.begin() + size_t(r) * cols);
}

/* Bareiss fraction-free elimination on an integer matrix obtained by clearing
   row denominators; the cleared factors divide back out at the end. */
Rational minor_det(const RatMatrix& M, const IndexSet& rows, const IndexSet& cols) {
  if (rows.size() != cols.size()) throw input_error("minor: row/col count mismatch");
  int k = int(rows.size());
  for (int r : rows)
    if (r < 1 || r > M.rows) throw input_error("minor: row index out of range");
  for (int c : cols)
    if (c < 1 || c > M.cols) throw input_error("minor: col index out of range");
  if (k == 0) return 1;

  std::vector<std::vector<Integer>> m(k, std::vector<Integer>(k));
  Rational scale = 1;
  for (int i = 0; i < k; ++i) {
    Integer lcm = 1;
    for (int j = 0; j < k; ++j) {
      const Rational& x = M.at(rows[i], cols[j]);
      lcm = boost::multiprecision::lcm(lcm, denominator(x));
    }
    for (int j = 0; j < k; ++j) {
      const Rational& x = M.at(rows[i], cols[j]);
      m[i][j] = numerator(x) * (lcm / denominator(x));
    }
    scale /= lcm;
  }

  Integer prev = 1;
  int sign = 1;
  for (int p = 0; p < k - 1; ++p) {
    if (m[p][p] == 0) {
      int q = p + 1;
      while (q < k && m[q][p] == 0) ++q;
      if (q == k) return 0;
      std::swap(m[p], m[q]);
      sign = -sign;
    }
    for (int i = p + 1; i < k; ++i)
      for (int j = p + 1; j < k; ++j)
        m[i][j] = (m[i][j] * m[p][p] - m[i][p] * m[p][j]) / prev;
    prev = m[p][p];
  }
  return scale * sign * m[k - 1][k - 1];
}

Rational det(const RatMatrix& M) {
  if (M.rows != M.cols) throw input_error("det of non-square matrix");
  IndexSet all(M.rows);
  for (int i = 0; i < M.rows; ++i) all[i] = i + 1;
  return minor_det(M, all, all);
}

static Rational det_cof_rec(const RatMatrix& M, std::vector<int>& rows, std::vector<int>& cols) {
  size_t k = rows.size();
  if (k == 1) return M.at(rows[0], cols[0]);
  Rational acc = 0;
  int r = rows.back();
  rows.pop_back();
  for (size_t j = 0; j < k; ++j) {
    int c = cols[j];
    if (M.at(r, c) == 0) continue;
    cols.erase(cols.begin() + j);
    Rational sub = det_cof_rec(M, rows, cols);
    cols.insert(cols.begin() + j, c);
    int sgn = ((k - 1 + j) % 2 == 0) ? 1 : -1;
    acc += sgn * M.at(r, c) * sub;
  }
  rows.push_back(r);
  return acc;
}

Rational det_cofactor(const RatMatrix& M) {
  if (M.rows != M.cols) throw input_error("det of non-square matrix");
  if (M.rows > 5) throw input_error("cofactor oracle limited to dimension 5");
  if (M.rows == 0) return 1;
  std::vector<int> rows(M.rows), cols(M.rows);
  for (int i = 0; i < M.rows; ++i) rows[i] = cols[i] = i + 1;
  return det_cof_rec(M, rows, cols);
}

std::vector<int> rref(RatMatrix& M) {
  std::vector<int> pivots;
  int r = 1;
  for (int c = 1; c <= M.cols && r <= M.rows; ++c) {
    int p = 0;
    for (int i = r; i <= M.rows; ++i)
      if (M.at(i, c) != 0) {
        p = i;
        break;
      }
    if (!p) continue;
    if (p != r)
      for (int j = 1; j <= M.cols; ++j) std::swap(M.at(p, j), M.at(r, j));
    Rational inv = Rational(1) / M.at(r, c);
    for (int j = c; j <= M.cols; ++j) M.at(r, j) *= inv;
    for (int i = 1; i <= M.rows; ++i) {
      if (i == r || M.at(i, c) == 0) continue;
      Rational f = M.at(i, c);
      for (int j = c; j <= M.cols; ++j) M.at(i, j) -= f * M.at(r, j);
    }
    pivots.push_back(c - 1);
    ++r;
  }
  return pivots;
}

int rank(const RatMatrix& M) {
  RatMatrix W = M;
  return int(rref(W).size());
}

std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& M) {
  RatMatrix W = M;
  std::vector<int> pivots = rref(W);
  std::vector<bool> is_pivot(M.cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (int c = 0; c < M.cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rational> v(M.cols);
    v[c] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -W.at(int(i) + 1, c + 1);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool solve_row(const RatMatrix& M, const std::vector<Rational>& b, std::vector<Rational>* coeffs) {
  if (int(b.size()) != M.cols) throw input_error("solve_row: length mismatch");
  // augment M^T with b^T and reduce
  RatMatrix W(M.cols, M.rows + 1);
  for (int r = 1; r <= M.rows; ++r)
    for (int c = 1; c <= M.cols; ++c) W.at(c, r) = M.at(r, c);
  for (int c = 1; c <= M.cols; ++c) W.at(c, M.rows + 1) = b[c - 1];
  std::vector<int> pivots = rref(W);
  for (int p : pivots)
    if (p == M.rows) return false;  // b independent of rows of M
  if (coeffs) {
    coeffs->assign(M.rows, Rational(0));
    for (size_t i = 0; i < pivots.size(); ++i) (*coeffs)[pivots[i]] = W.at(int(i) + 1, M.rows + 1);
  }
  return true;
}

RatMatrix inverse(const RatMatrix& M) {
  if (M.rows != M.cols) throw input_error("inverse of non-square matrix");
  int n = M.rows;
  RatMatrix W(n, 2 * n);
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) W.at(r, c) = M.at(r, c);
    W.at(r, n + r) = 1;
  }
  std::vector<int> pivots = rref(W);
  if (int(pivots.size()) != n || pivots.back() != n - 1) throw rank_error("matrix not invertible");
  RatMatrix I(n, n);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) I.at(r, c) = W.at(r, n + c);
  return I;
}

RatMatrix vstack(const RatMatrix& A, const RatMatrix& B) {
  if (A.cols != B.cols) throw input_error("vstack column mismatch");
  RatMatrix S(A.rows + B.rows, A.cols);
  std::copy(A.a.begin(), A.a.end(), S.a.begin());
  std::copy(B.a.begin(), B.a.end(), S.a.begin() + A.a.size());
  return S;
}

SubspaceRel subspace_relation(const RatMatrix& A, const RatMatrix& B) {
  if (A.cols != B.cols) throw input_error("subspace_relation column mismatch");
  int ra = rank(A), rb = rank(B), rs = rank(vstack(A, B));
  if (rs == ra && rs == rb) return SubspaceRel::equal;
  if (rs == rb) return SubspaceRel::A_in_B;
  if (rs == ra) return SubspaceRel::B_in_A;
  return SubspaceRel::incomparable;
}

std::string matrix_str(const RatMatrix& M) {
  std::ostringstream out;
  for (int r = 1; r <= M.rows; ++r) {
    for (int c = 1; c <= M.cols; ++c) {
      if (c > 1) out << ' ';
      out << rat_str(M.at(r, c));
    }
    out << '\n';
  }
  return out.str();
}

RatMatrix matrix_parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<Rational>> rows;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<Rational> row;
    std::string tok;
    while (ls >> tok) row.push_back(rat_parse(tok));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) return RatMatrix();
  RatMatrix M(int(rows.size()), int(rows[0].size()));
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows[0].size()) throw input_error("ragged matrix text");
    for (size_t c = 0; c < rows[r].size(); ++c) M.at(int(r) + 1, int(c) + 1) = rows[r][c];
  }
  return M;
}

}  // namespace enet
