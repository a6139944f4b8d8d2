#pragma once

#include <cstdio>
#include <string>

#include <json.hpp>

#include "su2kit/classical.hpp"
#include "su2kit/coset.hpp"
#include "su2kit/haar.hpp"
#include "su2kit/operators.hpp"
#include "su2kit/spectra.hpp"

namespace su2kit {

using Json = nlohmann::ordered_json;

inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline Json to_json(const ComplexRational& z) {
  return Json{{"re", to_fraction_string(z.re)}, {"im", to_fraction_string(z.im)}};
}

/// "p/q" for real values, "p/q+p/qi" otherwise (Gram entries, constants).
inline std::string scalar_string(const ComplexRational& z) {
  return z.is_real() ? to_fraction_string(z.re) : to_string(z);
}

inline Json to_json(const GroupPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    terms.push_back(Json{{"m", Json{m.e[0], m.e[1], m.e[2], m.e[3]}},
                         {"re", to_fraction_string(c.re)},
                         {"im", to_fraction_string(c.im)}});
  }
  return Json{{"terms", std::move(terms)}};
}

inline Json to_json(const InvariantPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back(Json{{"e", Json{e[0], e[1], e[2]}},
                         {"re", to_fraction_string(c.re)},
                         {"im", to_fraction_string(c.im)}});
  }
  return Json{{"terms", std::move(terms)}};
}

inline Json to_json(const IdentityReport& rep) {
  Json j{{"identity", rep.identity},
         {"max_degree", rep.max_degree},
         {"status", rep.pass ? "pass" : "fail"}};
  if (rep.counterexample) {
    j["counterexample"] = Json{{"m", Json{rep.counterexample->e[0], rep.counterexample->e[1],
                                          rep.counterexample->e[2], rep.counterexample->e[3]}},
                               {"image", to_json(rep.counterexample_image)}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

inline Json to_json(const ConventionAudit& audit) {
  Json variants = Json::array();
  for (const auto& [id, holds] : audit.hamiltonian_variants) {
    variants.push_back(Json{{"identity", id}, {"holds", holds}});
  }
  return Json{{"axis_r", audit.axis_r},
              {"axis_l", audit.axis_l},
              {"seed", to_json(audit.seed)},
              {"h_eigenvalue", to_fraction_string(audit.h_eigenvalue)},
              {"r_eigenvalue", to_fraction_string(audit.r_eigenvalue)},
              {"l_eigenvalue", to_fraction_string(audit.l_eigenvalue)},
              {"r_plus_raises", audit.r_plus_raises},
              {"l_plus_raises", audit.l_plus_raises},
              {"hamiltonian_variants", std::move(variants)},
              {"holding_variants", audit.holding_variants()}};
}

inline Json to_json(const SpinLabel& s) {
  return Json{{"j", to_fraction_string(s.j())},
              {"l", to_fraction_string(s.l())},
              {"r", to_fraction_string(s.r())}};
}

inline Json spectrum_to_json(const std::vector<SpectrumRow>& rows) {
  Json out = Json::array();
  for (const SpectrumRow& row : rows) {
    out.push_back(Json{{"j", to_fraction_string(row.label.j())},
                       {"l", to_fraction_string(row.label.l())},
                       {"r", to_fraction_string(row.label.r())},
                       {"E", to_fraction_string(row.energy)},
                       {"degree", row.degree},
                       {"verified", row.verified}});
  }
  return Json{{"rows", std::move(out)}};
}

inline std::string spectrum_to_csv(const std::vector<SpectrumRow>& rows) {
  std::string s = "j,l,r,E,degree,verified\n";
  for (const SpectrumRow& row : rows) {
    s += to_fraction_string(row.label.j()) + "," + to_fraction_string(row.label.l()) + "," +
         to_fraction_string(row.label.r()) + "," + to_fraction_string(row.energy) + "," +
         std::to_string(row.degree) + "," + (row.verified ? "true" : "false") + "\n";
  }
  return s;
}

inline Json to_json(const HermiticityReport& rep) {
  Json j{{"op", rep.op},
         {"samples", rep.sample_count},
         {"status", rep.pass ? "pass" : "fail"}};
  if (rep.witness) {
    j["witness"] = Json{{"left_index", rep.witness->first}, {"right_index", rep.witness->second}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

inline Json to_json(const GramReport& rep) {
  Json labels = Json::array();
  for (const SpinLabel& l : rep.labels) labels.push_back(to_json(l));
  Json matrix = Json::array();
  for (const auto& row : rep.matrix) {
    Json r = Json::array();
    for (const ComplexRational& v : row) r.push_back(scalar_string(v));
    matrix.push_back(std::move(r));
  }
  return Json{{"labels", std::move(labels)},
              {"matrix", std::move(matrix)},
              {"diagonal", rep.diagonal},
              {"positive_diagonal", rep.positive_diagonal}};
}

inline Json to_json(const QuadratureResult& q) {
  return Json{{"estimate", Json{{"re", q.estimate.real()}, {"im", q.estimate.imag()}}},
              {"std_error", q.std_error},
              {"samples", q.samples},
              {"seed", q.seed}};
}

inline Json to_json(const PoissonReport& rep) {
  return Json{{"tolerance", rep.tolerance},
              {"max_residual_RR", rep.max_residual_rr},
              {"max_residual_LL", rep.max_residual_ll},
              {"max_residual_RL", rep.max_residual_rl},
              {"max_residual_Rg", rep.max_residual_rg},
              {"max_residual_Lg", rep.max_residual_lg},
              {"status", rep.pass ? "pass" : "fail"}};
}

inline Json to_json(const ConservationReport& rep) {
  return Json{{"samples", rep.samples},
              {"max_drift_R", rep.max_drift_R},
              {"mean_drift_R", rep.mean_drift_R},
              {"max_drift_L", rep.max_drift_L},
              {"mean_drift_L", rep.mean_drift_L},
              {"max_drift_energy", rep.max_drift_energy},
              {"mean_drift_energy", rep.mean_drift_energy}};
}

inline Json to_json(const IndependenceReport& rep) {
  return Json{{"two_j", rep.two_j},
              {"expected_rank", rep.expected_rank},
              {"computed_rank", rep.computed_rank},
              {"status", rep.pass ? "pass" : "fail"}};
}

inline Json to_json(const MatchReport& rep) {
  Json j{{"j", rep.j}, {"r", rep.r}};
  j["constant"] = to_json(rep.constant);
  j["status"] = rep.proportional ? "proportional" : "fail";
  j["m"] = rep.matched_m ? Json(*rep.matched_m) : Json(nullptr);
  return j;
}

inline Json to_json(const ConstraintFilterReport& rep) {
  Json survivors = Json::array();
  for (const SpinLabel& l : rep.survivors) survivors.push_back(to_json(l));
  return Json{{"labels_checked", rep.labels_checked},
              {"survivors", std::move(survivors)},
              {"verified", rep.verified}};
}

inline Json trajectory_sample_json(double t, const ClassicalState& s, const NoetherSample& n) {
  const MatrixC& g = s.g.m;
  return Json{{"t", t},
              {"g",
               Json{{"re_g11", g.at(0, 0).real()}, {"im_g11", g.at(0, 0).imag()},
                    {"re_g12", g.at(0, 1).real()}, {"im_g12", g.at(0, 1).imag()},
                    {"re_g21", g.at(1, 0).real()}, {"im_g21", g.at(1, 0).imag()},
                    {"re_g22", g.at(1, 1).real()}, {"im_g22", g.at(1, 1).imag()}}},
              {"R", Json{n.r.c[0], n.r.c[1], n.r.c[2]}},
              {"L", Json{n.l.c[0], n.l.c[1], n.l.c[2]}},
              {"energy", kinetic_energy(n.r)}};
}

inline Json trajectory_to_json(const Trajectory& traj) {
  const std::vector<NoetherSample> charges = noether_charges(traj);
  Json samples = Json::array();
  for (std::size_t i = 0; i < traj.states.size(); ++i) {
    samples.push_back(trajectory_sample_json(traj.times[i], traj.states[i], charges[i]));
  }
  return Json{{"integrator", to_string(traj.method)},
              {"step", traj.step},
              {"projection", traj.projection},
              {"samples", std::move(samples)},
              {"conservation", to_json(conservation_report(traj))}};
}

inline std::string trajectory_to_csv(const Trajectory& traj) {
  const std::vector<NoetherSample> charges = noether_charges(traj);
  std::string s =
      "t,re_g11,im_g11,re_g12,im_g12,re_g21,im_g21,re_g22,im_g22,R1,R2,R3,L1,L2,L3,energy\n";
  for (std::size_t i = 0; i < traj.states.size(); ++i) {
    const MatrixC& g = traj.states[i].g.m;
    s += format_double(traj.times[i]);
    for (const auto& z : g.e) {
      s += "," + format_double(z.real()) + "," + format_double(z.imag());
    }
    for (double v : charges[i].r.c) s += "," + format_double(v);
    for (double v : charges[i].l.c) s += "," + format_double(v);
    s += "," + format_double(kinetic_energy(charges[i].r)) + "\n";
  }
  const ConservationReport rep = conservation_report(traj);
  s += "# max_drift_R=" + format_double(rep.max_drift_R) +
       " max_drift_L=" + format_double(rep.max_drift_L) +
       " max_drift_energy=" + format_double(rep.max_drift_energy) + "\n";
  return s;
}

inline Json reduced_trajectory_to_json(const ReducedTrajectory& red,
                                       const std::vector<double>& gauge) {
  Json samples = Json::array();
  for (std::size_t i = 0; i < red.x.size(); ++i) {
    samples.push_back(Json{{"t", red.times[i]},
                           {"x", Json{red.x[i][0], red.x[i][1], red.x[i][2]}},
                           {"b", gauge[i]}});
  }
  return Json{{"samples", std::move(samples)},
              {"kinetic_energy", red.kinetic_energy},
              {"max_norm_residual", red.max_norm_residual},
              {"ke_relative_variation", red.ke_relative_variation}};
}

inline std::string reduced_trajectory_to_csv(const ReducedTrajectory& red,
                                             const std::vector<double>& gauge) {
  std::string s = "t,x1,x2,x3,b\n";
  for (std::size_t i = 0; i < red.x.size(); ++i) {
    s += format_double(red.times[i]) + "," + format_double(red.x[i][0]) + "," +
         format_double(red.x[i][1]) + "," + format_double(red.x[i][2]) + "," +
         format_double(gauge[i]) + "\n";
  }
  s += "# max_norm_residual=" + format_double(red.max_norm_residual) +
       " ke_relative_variation=" + format_double(red.ke_relative_variation) + "\n";
  return s;
}

inline Json eigenfunction_to_json(const Eigenfunction& f) {
  return Json{{"label", to_json(f.label)},
              {"energy", to_fraction_string(f.energy)},
              {"r_eigenvalue", to_fraction_string(f.r_eigenvalue)},
              {"l_eigenvalue", to_fraction_string(f.l_eigenvalue)},
              {"degree", f.poly.degree()},
              {"norm_squared", to_fraction_string(norm_squared(f.poly))},
              {"polynomial", to_json(f.poly)}};
}

}  // namespace su2kit
