#pragma once
#include <string>
#include <vector>

#include "enet/groves.hpp"
#include "enet/matrix.hpp"
#include "enet/noncrossing.hpp"
#include "enet/report.hpp"
#include "enet/wedge.hpp"

namespace enet {

/* elementary generators acting on row vectors from the right; indices wrap
   through conjugation by the shift s */
RatMatrix x_gen(int n, int i, const Rational& t);  // Id + t E_{i,i+1}, i in [1,2n]
RatMatrix y_gen(int n, int i, const Rational& t);  // Id + t E_{i+1,i}, i in [1,2n]

struct LamGenerator {
  int n = 0;
  int i = 0;
  Rational t;
  RatMatrix u;    // u_i(t) = x_i(t) y_{i-1}(t)
  RatMatrix nil;  // u_i(1) - Id, squares to zero
};
LamGenerator generator(int n, int i, const Rational& t);

/* the unique W with B_n * U = W * B_n; throws if V is not U-invariant */
RatMatrix restrict_to_V_operator(const RatMatrix& u);

enum class ActionMode { group, derivation };
/* group: induced action on wedge^k of the right action e_i -> e_i A;
   derivation: Leibniz extension sum_k x_1 ^ ... ^ x_k A ^ ... ^ x_m */
WedgeVector act_on_wedge(const RatMatrix& a, const WedgeVector& w, ActionMode mode);

/* grove-coordinate form of the action of u_i(a) */
GroveTable grove_coordinate_action(const GroveTable& gt, int i, const Rational& a);

CheckReport crystal_check(int n);
CheckReport invariance_check(int n);

}  // namespace enet
