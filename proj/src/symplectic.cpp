#include "enet/symplectic.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace enet {

SkewForm skew_form(RatMatrix m) {
  if (m.rows != m.cols) throw input_error("skew form must be square");
  for (int i = 1; i <= m.rows; ++i)
    for (int j = 1; j <= m.cols; ++j)
      if (m.at(i, j) != -m.at(j, i)) throw input_error("form is not antisymmetric");
  SkewForm f;
  f.dim = m.rows;
  f.m = std::move(m);
  return f;
}

RatMatrix lambda_tridiag(int dim) {
  RatMatrix L(dim, dim);
  for (int i = 1; i < dim; ++i) {
    int s = i % 2 == 1 ? 1 : -1;
    L.at(i, i + 1) = s;
    L.at(i + 1, i) = -s;
  }
  return L;
}

StandardForms standard_forms(int n) {
  if (n < 2) throw input_error("standard_forms needs n >= 2");
  StandardForms out;
  out.lambda = skew_form(lambda_tridiag(2 * n - 2));

  RatMatrix T(2 * n, 2 * n);
  for (int i = 1; i <= n; ++i) {
    T.at(2 * i - 1, 2 * i) += 1;
    T.at(2 * i, 2 * i - 1) -= 1;
  }
  for (int j = 1; j <= n - 1; ++j) {
    T.at(2 * j + 1, 2 * j) += 1;
    T.at(2 * j, 2 * j + 1) -= 1;
  }
  int s = n % 2 == 0 ? 1 : -1;
  T.at(1, 2 * n) += s;
  T.at(2 * n, 1) -= s;
  out.lambda_tilde = skew_form(std::move(T));

  out.lambda_bar = skew_form(inverse(lambda_tridiag(2 * n)));
  return out;
}

WedgeVector convolve(const SkewForm& form, const WedgeVector& w) {
  if (form.dim != w.ambient) throw input_error("convolve: dimension mismatch");
  if (w.degree < 2) throw input_error("convolve needs degree >= 2");
  WedgeVector out(w.ambient, w.degree - 2);
  for (auto& [I, c] : w.coeffs)
    for (size_t p = 0; p < I.size(); ++p)
      for (size_t q = p + 1; q < I.size(); ++q) {
        Rational f = form(I[p], I[q]);
        if (f == 0) continue;
        int sgn = (p + q) % 2 == 0 ? -1 : 1;  // (-1)^{(p+1)+(q+1)-1}
        IndexSet K;
        for (size_t r = 0; r < I.size(); ++r)
          if (r != p && r != q) K.push_back(I[r]);
        out.add(K, c * f * sgn);
      }
  return out;
}

WedgeVector concordance_vector(const NonCrossingPartition& sigma) {
  int n = sigma.n;
  WedgeVector w(2 * n, n - 1);
  for (const IndexSet& I : all_index_sets(2 * n, n - 1))
    if (is_concordant(I, sigma)) w.add(I, 1);
  return w;
}

ConcordanceBasis concordance_vectors(int n) {
  if (n > 8) throw input_error("concordance basis limited to n <= 8");
  ConcordanceBasis cb;
  cb.n = n;
  cb.sigmas = enumerate_nc(n);
  auto sets = all_index_sets(2 * n, n - 1);
  cb.a = RatMatrix(int(sets.size()), int(cb.sigmas.size()));
  for (size_t c = 0; c < cb.sigmas.size(); ++c) {
    WedgeVector w = concordance_vector(cb.sigmas[c]);
    cb.vectors.push_back(w);
    for (size_t r = 0; r < sets.size(); ++r) cb.a.at(int(r) + 1, int(c) + 1) = w.coeff(sets[r]);
  }
  return cb;
}

WedgeFactorization algorithm_factorization(const NonCrossingPartition& sigma) {
  int n = sigma.n;
  WedgeFactorization f;
  f.n = n;
  MergedPartition m = merge(sigma);
  for (auto& b : m.blocks)
    for (size_t l = 0; l + 1 < b.size(); ++l) f.step2.push_back({b[l], b[l + 1]});

  for (auto [p, q] : f.step2) {
    // sign rule: "+" iff the count of same-parity integers strictly inside
    // (p,q) is even; that count is (q-p)/2 - 1
    int between = (q - p) / 2 - 1;
    f.brackets.push_back({p, q, between % 2 == 0 ? 1 : -1});
  }
  std::sort(f.brackets.begin(), f.brackets.end(),
            [](const WedgeFactorization::Bracket& a, const WedgeFactorization::Bracket& b) {
              return a.p < b.p;
            });

  for (auto& br : f.brackets) {
    std::vector<Rational> e(2 * n);
    e[br.p - 1] = 1;
    e[br.q - 1] = br.sign;
    f.e_factors.push_back(std::move(e));
    std::vector<Rational> v(2 * n - 2);
    int s = 1;
    for (int i = br.p; i <= br.q - 2; i += 2, s = -s) v[i - 1] = s;
    f.v_factors.push_back(std::move(v));
  }
  return f;
}

WedgeVector restrict_to_V(const WedgeVector& w) {
  int m = w.ambient;
  if (m < 4 || m % 2 != 0) throw input_error("restrict_to_V: ambient must be even >= 4");
  RatMatrix C(m, m);
  for (int i = 1; i <= m - 2; ++i) {
    C.at(i, i) = 1;
    C.at(i, i + 2) = 1;
  }
  for (int j = 1; j <= m; j += 2) C.at(m - 1, j) = (j / 2) % 2 == 0 ? 1 : -1;
  for (int j = 2; j <= m; j += 2) C.at(m, j) = (j / 2) % 2 == 1 ? 1 : -1;
  RatMatrix P = inverse(C);

  WedgeVector acc(m, w.degree);
  for (auto& [I, c] : w.coeffs) {
    std::vector<std::vector<Rational>> factors;
    for (int i : I) factors.push_back(P.row(i));
    acc = acc + wedge_expand(factors).scaled(c);
  }
  WedgeVector out(m - 2, w.degree);
  for (auto& [I, c] : acc.coeffs) {
    if (!I.empty() && I.back() > m - 2)
      throw input_error("restrict_to_V: vector is not in wedge of V");
    out.add(I, c);
  }
  return out;
}

FormSolution unique_form_solver(int n) {
  if (n > 6) throw input_error("unique_form_solver limited to n <= 6");
  int d = 2 * n - 2;
  std::map<std::pair<int, int>, int> col;
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) col[{i, j}] = int(col.size());
  int m = int(col.size());

  std::vector<std::vector<Rational>> rows;
  for (auto& sigma : enumerate_nc(n)) {
    WedgeVector w = wedge_expand(algorithm_factorization(sigma).v_factors);
    std::map<IndexSet, std::vector<Rational>> by_target;
    for (auto& [I, c] : w.coeffs)
      for (size_t p = 0; p < I.size(); ++p)
        for (size_t q = p + 1; q < I.size(); ++q) {
          IndexSet K;
          for (size_t r = 0; r < I.size(); ++r)
            if (r != p && r != q) K.push_back(I[r]);
          auto [it, fresh] = by_target.try_emplace(K, std::vector<Rational>(m));
          int sgn = (p + q) % 2 == 0 ? -1 : 1;
          it->second[col[{I[p], I[q]}]] += c * sgn;
        }
    for (auto& [K, row] : by_target)
      if (std::any_of(row.begin(), row.end(), [](const Rational& x) { return x != 0; }))
        rows.push_back(row);
  }

  FormSolution sol;
  sol.n = n;
  sol.constraints = RatMatrix(std::max<int>(1, int(rows.size())), m);
  for (size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < m; ++c) sol.constraints.at(int(r) + 1, c + 1) = rows[r][c];
  for (auto& v : kernel_basis(sol.constraints)) {
    RatMatrix F(d, d);
    for (auto& [ij, k] : col) {
      F.at(ij.first, ij.second) = v[k];
      F.at(ij.second, ij.first) = -v[k];
    }
    sol.basis.push_back(std::move(F));
  }
  return sol;
}

RatMatrix hollow_point_matrix(const NonCrossingPartition& sigma) {
  WedgeFactorization f = algorithm_factorization(sigma);
  RatMatrix M(int(f.e_factors.size()), 2 * sigma.n);
  for (size_t r = 0; r < f.e_factors.size(); ++r)
    for (int c = 1; c <= 2 * sigma.n; ++c) M.at(int(r) + 1, c) = f.e_factors[r][c - 1];
  return M;
}

std::string factorization_str(const WedgeFactorization& f) {
  std::ostringstream out;
  out << "step2:";
  for (auto [p, q] : f.step2) out << " (" << p << ' ' << q << ')';
  out << "\nstep3:";
  for (auto& b : f.brackets) out << " (e" << b.p << (b.sign > 0 ? "+" : "-") << 'e' << b.q << ')';
  out << "\nstep4:";
  for (auto& v : f.v_factors) {
    out << " (";
    bool first = true;
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      if (!first) out << (v[i] > 0 ? "+" : "-");
      else if (v[i] < 0)
        out << '-';
      out << 'v' << i + 1;
      first = false;
    }
    out << ')';
  }
  out << '\n';
  return out.str();
}

}  // namespace enet
