#include "enet/wedge.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace enet {

void WedgeVector::add(const IndexSet& I, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = coeffs.try_emplace(I, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  }
}

WedgeVector WedgeVector::operator+(const WedgeVector& o) const {
  if (ambient != o.ambient || degree != o.degree) throw input_error("wedge sum shape mismatch");
  WedgeVector s = *this;
  for (auto& [I, c] : o.coeffs) s.add(I, c);
  return s;
}

WedgeVector WedgeVector::operator-(const WedgeVector& o) const {
  return *this + o.scaled(-1);
}

WedgeVector WedgeVector::scaled(const Rational& t) const {
  WedgeVector s(ambient, degree);
  if (t == 0) return s;
  for (auto& [I, c] : coeffs) s.coeffs.emplace(I, c * t);
  return s;
}

std::vector<IndexSet> WedgeVector::support() const {
  std::vector<IndexSet> keys;
  keys.reserve(coeffs.size());
  for (auto& [I, c] : coeffs) keys.push_back(I);
  return keys;
}

int normalize_index_set(IndexSet& I) {
  int sign = 1;
  // insertion sort, counting inversions
  for (size_t i = 1; i < I.size(); ++i) {
    int x = I[i];
    size_t j = i;
    while (j > 0 && I[j - 1] > x) {
      I[j] = I[j - 1];
      --j;
      sign = -sign;
    }
    I[j] = x;
  }
  for (size_t i = 1; i < I.size(); ++i)
    if (I[i] == I[i - 1]) return 0;
  return sign;
}

WedgeVector wedge_expand(const std::vector<std::vector<Rational>>& factors) {
  if (factors.empty()) throw input_error("wedge_expand: no factors");
  int m = int(factors[0].size());
  int k = int(factors.size());
  if (k > m) throw input_error("wedge_expand: degree exceeds ambient dimension");
  for (auto& f : factors)
    if (int(f.size()) != m) throw input_error("wedge_expand: factor length mismatch");

  WedgeVector w(m, k);
  IndexSet pick(k);
  std::function<void(int, Rational)> rec = [&](int level, Rational c) {
    if (level == k) {
      IndexSet I = pick;
      int sgn = normalize_index_set(I);
      if (sgn) w.add(I, c * sgn);
      return;
    }
    for (int j = 1; j <= m; ++j) {
      const Rational& x = factors[level][j - 1];
      if (x == 0) continue;
      bool used = false;
      for (int l = 0; l < level; ++l)
        if (pick[l] == j) used = true;
      if (used) continue;
      pick[level] = j;
      rec(level + 1, c * x);
    }
  };
  rec(0, Rational(1));
  return w;
}

WedgeVector plucker_of_rowspace(const RatMatrix& M) {
  if (M.rows > M.cols) throw input_error("plucker_of_rowspace: more rows than columns");
  if (rank(M) != M.rows) throw rank_error("plucker_of_rowspace: rank-deficient matrix");
  WedgeVector w(M.cols, M.rows);
  IndexSet rows(M.rows);
  for (int i = 0; i < M.rows; ++i) rows[i] = i + 1;
  for (const IndexSet& I : all_index_sets(M.cols, M.rows)) w.add(I, minor_det(M, rows, I));
  return w;
}

std::optional<Rational> proportionality_ratio(const WedgeVector& w1, const WedgeVector& w2) {
  if (w1.ambient != w2.ambient || w1.degree != w2.degree) return std::nullopt;
  if (w1.is_zero() || w2.is_zero()) return std::nullopt;
  if (w1.coeffs.size() != w2.coeffs.size()) return std::nullopt;
  auto i1 = w1.coeffs.begin();
  auto i2 = w2.coeffs.begin();
  Rational ratio = i2->second / i1->second;
  for (; i1 != w1.coeffs.end(); ++i1, ++i2) {
    if (i1->first != i2->first) return std::nullopt;
    if (i2->second != ratio * i1->second) return std::nullopt;
  }
  return ratio;
}

std::vector<IndexSet> all_index_sets(int m, int k) {
  std::vector<IndexSet> out;
  if (k < 0 || k > m) return out;
  IndexSet I(k);
  std::function<void(int, int)> rec = [&](int level, int start) {
    if (level == k) {
      out.push_back(I);
      return;
    }
    for (int j = start; j <= m - (k - level - 1); ++j) {
      I[level] = j;
      rec(level + 1, j + 1);
    }
  };
  rec(0, 1);
  return out;
}

std::string wedge_str(const WedgeVector& w) {
  std::ostringstream out;
  for (auto& [I, c] : w.coeffs) {
    for (size_t i = 0; i < I.size(); ++i) {
      if (i) out << ',';
      out << I[i];
    }
    out << " : " << rat_str(c) << '\n';
  }
  return out.str();
}

WedgeVector wedge_parse(const std::string& text, int ambient, int degree) {
  WedgeVector w(ambient, degree);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto colon = line.find(':');
    if (colon == std::string::npos) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw input_error("bad wedge line: " + line);
    }
    IndexSet I;
    std::string idx = line.substr(0, colon);
    std::istringstream is(idx);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      if (tok.find_first_not_of(" \t") == std::string::npos) continue;
      I.push_back(std::stoi(tok));
    }
    if (int(I.size()) != degree) throw input_error("wedge key of wrong degree: " + line);
    std::string val = line.substr(colon + 1);
    val.erase(0, val.find_first_not_of(" \t"));
    val.erase(val.find_last_not_of(" \t\r") + 1);
    w.add(I, rat_parse(val));
  }
  return w;
}

}  // namespace enet
