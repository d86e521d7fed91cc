#include "enet/verify.hpp"

#include <algorithm>
#include <sstream>

#include "enet/embeddings.hpp"
#include "enet/groves.hpp"
#include "enet/symplectic.hpp"
#include "enet/temperley.hpp"
#include "enet/wedge.hpp"

#include "json.hpp"

namespace enet {

namespace {

NonCrossingPartition singletons(int n) {
  std::vector<std::vector<int>> blocks;
  for (int i = 1; i <= n; ++i) blocks.push_back({i});
  return make_partition(n, std::move(blocks));
}

NonCrossingPartition full_block(int n) {
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i + 1;
  return make_partition(n, {all});
}

RatMatrix drop_first_row(const RatMatrix& m) {
  RatMatrix out(m.rows - 1, m.cols);
  for (int r = 2; r <= m.rows; ++r)
    for (int c = 1; c <= m.cols; ++c) out.at(r - 1, c) = m.at(r, c);
  return out;
}

WedgeVector table_to_wedge(const std::map<IndexSet, Rational>& table, int ambient, int degree) {
  WedgeVector w(ambient, degree);
  for (auto& [I, v] : table)
    if (int(I.size()) == degree) w.add(I, v);
  return w;
}

std::string diff_witness(const WedgeVector& expected, const WedgeVector& got) {
  for (const IndexSet& I : expected.support())
    if (got.coeff(I) != expected.coeff(I)) {
      std::ostringstream out;
      out << "I={";
      for (size_t k = 0; k < I.size(); ++k) out << (k ? "," : "") << I[k];
      out << "} expected " << rat_str(expected.coeff(I)) << " got " << rat_str(got.coeff(I));
      return out.str();
    }
  for (const IndexSet& I : got.support())
    if (got.coeff(I) != expected.coeff(I)) {
      std::ostringstream out;
      out << "I={";
      for (size_t k = 0; k < I.size(); ++k) out << (k ? "," : "") << I[k];
      out << "} expected " << rat_str(expected.coeff(I)) << " got " << rat_str(got.coeff(I));
      return out.str();
    }
  return "no difference";
}

}  // namespace

std::vector<CheckReport> verify_network(const Network& net,
                                        const std::vector<std::string>& selection) {
  auto wants = [&](const std::string& name) {
    if (selection.empty()) return true;
    for (auto& s : selection)
      if (s == "all" || s == name) return true;
    return false;
  };

  validate(net);
  int n = net.n;
  GroveTable gt = grove_measurements(net);
  WedgeVector lam = lam_plucker(gt);
  WedgeVector cgs = cgs_plucker(gt);
  Rational l_unc = gt.at(singletons(n));

  bool have_response = !net.cactus.has_value();
  ResponseMatrix mr;
  if (have_response) {
    try {
      mr = response_matrix(net);
    } catch (const std::exception&) {
      have_response = false;
    }
  }

  std::vector<CheckReport> reports;
  auto skip_unless_response = [&](CheckReport& rep) {
    if (!have_response) {
      rep.skip(net.cactus ? "cactus network has no response matrix" : "response matrix undefined");
      return true;
    }
    return false;
  };

  if (wants("point-equality")) {
    CheckReport rep;
    rep.name = "point-equality";
    if (!skip_unless_response(rep)) {
      WedgeVector got = plucker_of_rowspace(omega_matrix(mr)).scaled(l_unc);
      if (got != lam) rep.fail(diff_witness(lam, got));
    }
    reports.push_back(rep);
  }

  if (wants("isotropy")) {
    CheckReport rep;
    rep.name = "isotropy";
    if (!skip_unless_response(rep)) {
      StandardForms forms = standard_forms(n);
      RatMatrix of = omega_full(mr);
      if (!(of * forms.lambda_bar.m * of.transpose()).is_zero())
        rep.fail("Omega_n is not isotropic for inverse(Lambda_2n)");
      RatMatrix ot = omega_tilde(mr);
      if (!(ot * forms.lambda.m * ot.transpose()).is_zero())
        rep.fail("restricted Omega is not isotropic for Lambda_{2n-2}");
      RatMatrix x = cgs_matrix(mr);
      if (!(x * forms.lambda_tilde.m * x.transpose()).is_zero())
        rep.fail("MD is not isotropic for the degenerate 2n form");
    }
    reports.push_back(rep);
  }

  if (wants("orthogonality")) {
    CheckReport rep;
    rep.name = "orthogonality";
    if (!skip_unless_response(rep)) {
      RatMatrix x = cgs_matrix(mr);
      RatMatrix od = omega_full(mr) * d_tilde(n);
      if (!(x * od.transpose()).is_zero()) rep.fail("MD (Omega_n D~)^T != 0");
    }
    reports.push_back(rep);
  }

  if (wants("inclusion")) {
    CheckReport rep;
    rep.name = "inclusion";
    if (!skip_unless_response(rep)) {
      RatMatrix od = omega_full(mr) * d_tilde(n);
      RatMatrix complement = (lambda_tridiag(2 * n) * cgs_matrix(mr).transpose()).transpose();
      SubspaceRel rel = subspace_relation(od, complement);
      if (rel != SubspaceRel::A_in_B && rel != SubspaceRel::equal)
        rep.fail("rowspace(Omega_n D~) not inside colspace(Lambda_2n (MD)^T)");
    }
    reports.push_back(rep);
  }

  if (wants("resistance")) {
    CheckReport rep;
    rep.name = "resistance";
    if (!skip_unless_response(rep)) {
      try {
        ResistanceMatrix R = effective_resistance(mr);
        RatMatrix opr = drop_first_row(omega_resistance(R));
        Rational l_full = gt.at(full_block(n));
        WedgeVector got = plucker_of_rowspace(opr).scaled(l_full);
        if (got != lam) rep.fail(diff_witness(lam, got));
      } catch (const std::exception& e) {
        rep.skip(std::string("effective resistance unavailable: ") + e.what());
      }
    }
    reports.push_back(rep);
  }

  if (wants("dual")) {
    CheckReport rep;
    rep.name = "dual";
    if (!skip_unless_response(rep)) {
      try {
        if (!dual_point_check(net)) rep.fail("plucker(Omega(dual)) not prop. plucker(Omega s^-1)");
      } catch (const std::exception& e) {
        rep.skip(std::string("dual unavailable: ") + e.what());
      }
    }
    reports.push_back(rep);
  }

  if (wants("dimer")) {
    CheckReport rep;
    rep.name = "dimer";
    if (net.cactus) {
      rep.skip("cactus network");
    } else {
      try {
        WedgeVector bullet = table_to_wedge(dimer_table(temperley(net)), 2 * n, n - 1);
        if (bullet != lam) rep.fail("N matchings: " + diff_witness(lam, bullet));
        WedgeVector circ = table_to_wedge(dimer_table(dual_temperley(net)), 2 * n, n + 1);
        if (circ != cgs) rep.fail("N^d matchings: " + diff_witness(cgs, circ));
      } catch (const std::exception& e) {
        rep.skip(std::string("bipartite construction unavailable: ") + e.what());
      }
    }
    reports.push_back(rep);
  }

  if (wants("x-matrix")) {
    CheckReport rep;
    rep.name = "x-matrix";
    if (!skip_unless_response(rep)) {
      WedgeVector minors = plucker_of_rowspace(x_matrix(mr));
      if (!proportionality_ratio(minors, cgs).has_value())
        rep.fail("minors of X are not proportional to the co-concordance coordinates");
    }
    reports.push_back(rep);
  }

  return reports;
}

std::string report_text(const std::vector<CheckReport>& reports) {
  std::ostringstream out;
  for (auto& r : reports) {
    out << r.name << ": " << r.status << '\n';
    for (auto& w : r.witnesses) out << "  " << w << '\n';
  }
  return out.str();
}

std::string report_json(const std::vector<CheckReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (auto& r : reports) {
    nlohmann::json item;
    item["name"] = r.name;
    item["status"] = r.status;
    item["witnesses"] = r.witnesses;
    arr.push_back(item);
  }
  return arr.dump(2) + "\n";
}

}  // namespace enet
