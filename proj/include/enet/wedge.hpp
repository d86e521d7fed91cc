#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "enet/matrix.hpp"

namespace enet {

/* element of wedge^k Q^m; keys are strictly increasing index sets, zero
   coefficients never stored.  degree 0 uses the single empty key. */
struct WedgeVector {
  int ambient = 0;
  int degree = 0;
  std::map<IndexSet, Rational> coeffs;

  WedgeVector() = default;
  WedgeVector(int m, int k) : ambient(m), degree(k) {}

  bool operator==(const WedgeVector& o) const = default;

  bool is_zero() const { return coeffs.empty(); }
  Rational coeff(const IndexSet& I) const {
    auto it = coeffs.find(I);
    return it == coeffs.end() ? Rational(0) : it->second;
  }
  void add(const IndexSet& I, const Rational& c);  // accumulate, drop zeros
  WedgeVector operator+(const WedgeVector& o) const;
  WedgeVector operator-(const WedgeVector& o) const;
  WedgeVector scaled(const Rational& t) const;
  std::vector<IndexSet> support() const;
};

/* sorts I in place, returns the permutation sign, or 0 on a repeat */
int normalize_index_set(IndexSet& I);

WedgeVector wedge_expand(const std::vector<std::vector<Rational>>& factors);
WedgeVector plucker_of_rowspace(const RatMatrix& M);  // throws rank_error

/* w2 = c*w1 for a single nonzero rational c */
std::optional<Rational> proportionality_ratio(const WedgeVector& w1, const WedgeVector& w2);

std::vector<IndexSet> all_index_sets(int m, int k);  // lexicographic

std::string wedge_str(const WedgeVector& w);
WedgeVector wedge_parse(const std::string& text, int ambient, int degree);

}  // namespace enet
