#pragma once
#include <initializer_list>
#include <string>
#include <vector>

#include "enet/rational.hpp"

namespace enet {

struct RatMatrix {
  int rows = 0, cols = 0;
  std::vector<Rational> a;  // row-major

  RatMatrix() = default;
  RatMatrix(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> init);

  Rational& at(int r, int c) { return a[size_t(r - 1) * cols + (c - 1)]; }
  const Rational& at(int r, int c) const { return a[size_t(r - 1) * cols + (c - 1)]; }

  bool operator==(const RatMatrix& o) const = default;

  static RatMatrix identity(int n);
  static RatMatrix diagonal(const std::vector<Rational>& d);
  bool is_zero() const;
  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix scaled(const Rational& t) const;
  std::vector<Rational> row(int r) const;
};

using IndexSet = std::vector<int>;  // strictly increasing, 1-based

/* determinant of the square submatrix picked by rows/cols, via fraction-free
   Bareiss elimination on the denominator-cleared integer matrix */
Rational minor_det(const RatMatrix& M, const IndexSet& rows, const IndexSet& cols);
Rational det(const RatMatrix& M);
/* cofactor-expansion oracle, dimension <= 5 */
Rational det_cofactor(const RatMatrix& M);

int rank(const RatMatrix& M);
/* Gauss-Jordan; returns pivot column list (0-based), M transformed in place */
std::vector<int> rref(RatMatrix& M);
/* basis of the right null space; deterministic, one vector per free column */
std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& M);
/* solve x * M = b for a row vector b in the row space; empty optional if none */
bool solve_row(const RatMatrix& M, const std::vector<Rational>& b, std::vector<Rational>* coeffs);
RatMatrix inverse(const RatMatrix& M);  // throws rank_error if singular

enum class SubspaceRel { equal, A_in_B, B_in_A, incomparable };
SubspaceRel subspace_relation(const RatMatrix& A, const RatMatrix& B);  // of row spaces
RatMatrix vstack(const RatMatrix& A, const RatMatrix& B);

std::string matrix_str(const RatMatrix& M);
RatMatrix matrix_parse(const std::string& text);

}  // namespace enet
