#pragma once
#include <string>
#include <vector>

#include "enet/matrix.hpp"
#include "enet/noncrossing.hpp"
#include "enet/wedge.hpp"

namespace enet {

struct SkewForm {
  int dim = 0;
  RatMatrix m;

  Rational operator()(int i, int j) const { return m.at(i, j); }
};

SkewForm skew_form(RatMatrix m);  // validates antisymmetry

/* alternating tridiagonal form: (i,i+1) = (-1)^{i+1} */
RatMatrix lambda_tridiag(int dim);

struct StandardForms {
  SkewForm lambda;        // Lambda_{2n-2}
  SkewForm lambda_tilde;  // degenerate form on Q^{2n}
  SkewForm lambda_bar;    // Lambda_{2n}^{-1}
};
StandardForms standard_forms(int n);

/* Q(x_1^...^x_k) = sum_{i<j} w(x_i,x_j)(-1)^{i+j-1} x_1^...^x^_i^...^x^_j^...,
   extended linearly over basis monomials */
WedgeVector convolve(const SkewForm& form, const WedgeVector& w);

struct ConcordanceBasis {
  int n = 0;
  std::vector<NonCrossingPartition> sigmas;  // enumerate_nc order
  std::vector<WedgeVector> vectors;          // w_sigma per column
  RatMatrix a;  // rows: all_index_sets(2n, n-1); cols: sigmas; 0/1 entries
};
WedgeVector concordance_vector(const NonCrossingPartition& sigma);
ConcordanceBasis concordance_vectors(int n);

/* decomposition of w_sigma into a pure wedge of n-1 chain vectors */
struct WedgeFactorization {
  int n = 0;
  struct Bracket {
    int p = 0, q = 0;  // chain chord of the merged partition, p < q in [2n]
    int sign = 1;      // e_p + sign * e_q
  };
  std::vector<std::pair<int, int>> step2;        // chords in merged-block order
  std::vector<Bracket> brackets;                 // ordered by p, all p distinct
  std::vector<std::vector<Rational>> e_factors;  // in Q^{2n}
  std::vector<std::vector<Rational>> v_factors;  // in Q^{2n-2}, v-basis coords
};
WedgeFactorization algorithm_factorization(const NonCrossingPartition& sigma);

/* rewrite a wedge over Q^{2n} in the v-basis of V; membership is required */
WedgeVector restrict_to_V(const WedgeVector& w);

/* the linear system {Q_w(w_sigma|_V) = 0 for all sigma} in the unknown skew
   form entries w(i,j), i < j; basis holds the kernel as skew matrices */
struct FormSolution {
  int n = 0;
  RatMatrix constraints;
  std::vector<RatMatrix> basis;
};
FormSolution unique_form_solver(int n);

/* rows are the step-3 chain vectors e_p + sign*e_q */
RatMatrix hollow_point_matrix(const NonCrossingPartition& sigma);

std::string factorization_str(const WedgeFactorization& f);

}  // namespace enet
