#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "enet/embeddings.hpp"
#include "enet/groves.hpp"
#include "enet/symplectic.hpp"
#include "fixtures.hpp"

using namespace enet;

namespace {

Rational alt_sum(const std::vector<Rational>& row, int start) {
  Rational s = 0;
  int sign = 1;
  for (size_t j = start - 1; j < row.size(); j += 2, sign = -sign) s += sign * row[j];
  return s;
}

}  // namespace

TEST_CASE("omega rows live in the subspace V") {
  for (auto& net : fx::random_networks(4, 5)) {
    ResponseMatrix mr = response_matrix(net);
    RatMatrix full = omega_full(mr);
    CHECK(full.rows == mr.n);
    CHECK(full.cols == 2 * mr.n);
    // V is cut out by the two alternating-sum functionals
    for (int r = 1; r <= full.rows; ++r) {
      CHECK(alt_sum(full.row(r), 1) == 0);
      CHECK(alt_sum(full.row(r), 2) == 0);
    }
    CHECK(rank(full) == mr.n - 1);
    RatMatrix trimmed = omega_matrix(mr);
    CHECK(trimmed.rows == mr.n - 1);
    for (int r = 1; r <= trimmed.rows; ++r) CHECK(trimmed.row(r) == full.row(r));
  }
}

TEST_CASE("point equality on the triangle") {
  GroveTable gt = grove_measurements(fx::triangle());
  ResponseMatrix mr = response_matrix(fx::triangle());
  WedgeVector lam = lam_plucker(gt);
  WedgeVector pl = plucker_of_rowspace(omega_matrix(mr));
  CHECK(pl.scaled(gt.at(partition_parse("1|2|3"))) == lam);
}

TEST_CASE("v-basis transport") {
  RatMatrix b = basis_matrix(3);
  CHECK(b.rows == 4);
  CHECK(b.cols == 6);
  CHECK(b.at(1, 1) == 1);
  CHECK(b.at(1, 3) == 1);
  CHECK(b.at(4, 4) == 1);
  CHECK(b.at(4, 6) == 1);

  ResponseMatrix mr = response_matrix(fx::star());
  RatMatrix om = omega_matrix(mr);
  RatMatrix ot = omega_tilde(mr);
  CHECK(ot * b == om);
  CHECK(to_v_basis(om) == ot);
  // a vector outside V is rejected
  RatMatrix outside(1, 6);
  outside.at(1, 1) = 1;
  CHECK_THROWS_AS(to_v_basis(outside), input_error);
}

TEST_CASE("resistance embedding matches the grove point") {
  for (auto* fix : {&fx::triangle, &fx::star}) {
    Network net = (*fix)();
    GroveTable gt = grove_measurements(net);
    ResponseMatrix mr = response_matrix(net);
    RatMatrix orr = omega_resistance(effective_resistance(mr));
    CHECK(orr.rows == net.n);
    RatMatrix primed(net.n - 1, 2 * net.n);
    for (int r = 2; r <= net.n; ++r)
      for (int c = 1; c <= 2 * net.n; ++c) primed.at(r - 1, c) = orr.at(r, c);
    Rational l_full = gt.at(partition_parse(net.n == 3 ? "1 2 3" : "1 2"));
    CHECK(plucker_of_rowspace(primed).scaled(l_full) == lam_plucker(gt));
  }
}

TEST_CASE("cgs gauges") {
  ResponseMatrix mr = response_matrix(fx::triangle());
  RatMatrix s_last = cgs_S(mr);
  RatMatrix s_first = cgs_S(mr, true);
  for (int i = 1; i <= 3; ++i) {
    CHECK(s_last.at(i, 3) == 0);
    CHECK(s_first.at(i, 1) == 0);
    // the two gauges differ by a per-row constant
    Rational d = s_last.at(i, 1) - s_first.at(i, 1);
    for (int j = 2; j <= 3; ++j) CHECK(s_last.at(i, j) - s_first.at(i, j) == d);
  }
  // the gauge does not move the point of the Grassmannian
  CHECK(subspace_relation(cgs_matrix(mr), cgs_matrix(mr, true)) == SubspaceRel::equal);
  CHECK(x_matrix(mr) == cgs_matrix(mr));
  CHECK(cgs_D(3) == RatMatrix::diagonal({1, 1, -1, -1, 1, 1}));
}

TEST_CASE("isotropy and orthogonality on fixtures") {
  for (auto* fix : {&fx::triangle, &fx::star, &fx::single_edge}) {
    Network net = (*fix)();
    int n = net.n;
    ResponseMatrix mr = response_matrix(net);
    StandardForms forms = standard_forms(n);
    RatMatrix full = omega_full(mr);
    CHECK((full * forms.lambda_bar.m * full.transpose()).is_zero());
    RatMatrix ot = omega_tilde(mr);
    CHECK((ot * forms.lambda.m * ot.transpose()).is_zero());
    RatMatrix x = x_matrix(mr);
    CHECK((x * forms.lambda_tilde.m * x.transpose()).is_zero());
    CHECK((x * (full * d_tilde(n)).transpose()).is_zero());
  }
}

TEST_CASE("inclusion complement reproduces the structural rows") {
  ResponseMatrix mr = response_matrix(fx::triangle());
  RatMatrix x = x_matrix(mr);
  RatMatrix k = lambda_tridiag(6) * x.transpose();
  CHECK(k.rows == 6);
  CHECK(k.cols == 4);
  // the even-indexed rows do not depend on the network at all
  CHECK(k.row(2) == std::vector<Rational>{0, -1, 1, 0});
  CHECK(k.row(4) == std::vector<Rational>{0, 0, 1, -1});
  CHECK(k.row(6) == std::vector<Rational>{0, 0, 0, -1});
  // the odd rows carry the S entries and their consecutive differences
  RatMatrix s = cgs_S(mr);
  CHECK(k.row(1) == std::vector<Rational>{1, s.at(1, 1), s.at(2, 1), s.at(3, 1)});
  CHECK(k.row(3) == std::vector<Rational>{0, s.at(1, 1) - s.at(1, 2), s.at(2, 1) - s.at(2, 2),
                                          s.at(3, 1) - s.at(3, 2)});
  CHECK(k.row(5) == std::vector<Rational>{0, s.at(1, 3) - s.at(1, 2), s.at(2, 3) - s.at(2, 2),
                                          s.at(3, 3) - s.at(3, 2)});
  // rowspace inclusion
  RatMatrix od = omega_full(mr) * d_tilde(3);
  auto rel = subspace_relation(od, k.transpose());
  CHECK((rel == SubspaceRel::A_in_B || rel == SubspaceRel::equal));
}

TEST_CASE("shift and sign matrices") {
  RatMatrix s3 = cyclic_shift(3);
  RatMatrix p = RatMatrix::identity(6);
  for (int k = 0; k < 6; ++k) p = p * s3;
  CHECK(p == RatMatrix::identity(6).scaled(-1));  // s^{2n} = (-1)^n
  RatMatrix s4 = cyclic_shift(4);
  RatMatrix q = RatMatrix::identity(8);
  for (int k = 0; k < 8; ++k) q = q * s4;
  CHECK(q == RatMatrix::identity(8));
  CHECK(d_tilde(2) == RatMatrix::diagonal({-1, 1, -1, 1}));
}

TEST_CASE("duality of grove points") {
  CHECK(dual_point_check(fx::triangle()));
  CHECK(dual_point_check(fx::star()));
  CHECK(dual_point_check(fx::single_edge()));
}

TEST_CASE("triangle cgs rowspace equals the closed-form matrix") {
  ResponseMatrix mr = response_matrix(fx::triangle());
  Rational a = 3, b = Rational(1, 2), c = 2;
  RatMatrix mb{{1, 0, 0, a, 0, -(a + c)},
               {0, 1, 0, -1, 0, 1},
               {0, 0, 1, b + a, 0, -a},
               {0, 0, 0, b, 1, c}};
  CHECK(subspace_relation(x_matrix(mr), mb) == SubspaceRel::equal);
  // its Pluckers agree with the co-concordance expansion of the grove table
  GroveTable gt = grove_measurements(fx::triangle());
  auto ratio = proportionality_ratio(plucker_of_rowspace(x_matrix(mr)), cgs_plucker(gt));
  CHECK(ratio.has_value());
}
