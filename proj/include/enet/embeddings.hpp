#pragma once
#include "enet/matrix.hpp"
#include "enet/network.hpp"

namespace enet {

/* the point of Gr(n-1,2n) attached to a response matrix: signed x_{ij} entries
   interleaved with a 0/1 column pattern; row n is dependent and omitted */
RatMatrix omega_matrix(const ResponseMatrix& mr);  // (n-1) x 2n
RatMatrix omega_full(const ResponseMatrix& mr);    // all n rows (tests only)

RatMatrix basis_matrix(int n);                 // B_n, rows v_i = e_i + e_{i+2}
RatMatrix to_v_basis(const RatMatrix& M);      // unique X with M = X * B_n
RatMatrix omega_tilde(const ResponseMatrix& mr);

RatMatrix omega_resistance(const ResistanceMatrix& R);  // n x 2n; rows 2.. form the primed matrix

RatMatrix cgs_S(const ResponseMatrix& mr, bool first_gauge = false);  // n x n
RatMatrix cgs_M(const ResponseMatrix& mr, bool first_gauge = false);  // (n+1) x 2n
RatMatrix cgs_D(int n);                                               // diag(1,1,-1,-1,...)
RatMatrix cgs_matrix(const ResponseMatrix& mr, bool first_gauge = false);  // MD
RatMatrix x_matrix(const ResponseMatrix& mr);                              // same formula as MD

RatMatrix d_tilde(int n);       // diag(-1,1,-1,1,...), size 2n
RatMatrix cyclic_shift(int n);  // s: (i,i+1)=1, (2n,1)=(-1)^n

bool dual_point_check(const Network& net);

}  // namespace enet
