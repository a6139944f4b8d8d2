#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "su2kit/rng.hpp"
#include "su2kit/su2.hpp"

namespace su2kit {

/// Phase-space point of the first-order formalism: configuration g and
/// body-frame velocity R = g^{-1} g-dot (constant along geodesics).
struct ClassicalState {
  GroupPoint g;
  AlgebraElement R;
};

enum class IntegrationMethod { exact, rk4_projected };

inline std::string to_string(IntegrationMethod m) {
  return m == IntegrationMethod::exact ? "exact" : "rk4_projected";
}

struct Trajectory {
  std::vector<double> times;
  std::vector<ClassicalState> states;
  IntegrationMethod method = IntegrationMethod::exact;
  double step = 0.0;
  std::string projection = "none";
};

/// g(t) = g0 * exp(t R): the flow with constant body velocity, satisfying
/// g-dot = g R.
inline GroupPoint geodesic_exact(const GroupPoint& g0, const AlgebraElement& r, double t) {
  return GroupPoint{g0.m * exp_su2(t * r).m};
}

inline MatrixC matrix_inverse(const MatrixC& m) {
  const std::complex<double> d = m.det();
  return {m.at(1, 1) / d, -m.at(0, 1) / d, -m.at(1, 0) / d, m.at(0, 0) / d};
}

namespace detail {
/// Rows orthonormalized (normalize first, Gram-Schmidt second), then the
/// second row is rotated by the residual determinant phase so det lands on 1.
inline MatrixC project_to_group(const MatrixC& m) {
  std::complex<double> r0a = m.at(0, 0), r0b = m.at(0, 1);
  std::complex<double> r1a = m.at(1, 0), r1b = m.at(1, 1);
  const double n0 = std::sqrt(std::norm(r0a) + std::norm(r0b));
  r0a /= n0;
  r0b /= n0;
  const std::complex<double> overlap = std::conj(r0a) * r1a + std::conj(r0b) * r1b;
  r1a -= overlap * r0a;
  r1b -= overlap * r0b;
  const double n1 = std::sqrt(std::norm(r1a) + std::norm(r1b));
  r1a /= n1;
  r1b /= n1;
  MatrixC out(r0a, r0b, r1a, r1b);
  const std::complex<double> d = out.det();
  out.at(1, 0) /= d;
  out.at(1, 1) /= d;
  return out;
}
}  // namespace detail

/// Exact method: per-step right multiplication by exp(dt R).  rk4_projected:
/// classical 4th-order steps on the matrix equation g-dot = g R with re-
/// projection to the group after every step.
inline Trajectory integrate(const GroupPoint& g0, const AlgebraElement& r0, double dt, int steps,
                            IntegrationMethod method) {
  if (!(dt > 0.0)) throw std::invalid_argument("integrate: dt must be positive");
  if (steps < 1) throw std::invalid_argument("integrate: steps must be >= 1");
  Trajectory traj;
  traj.method = method;
  traj.step = dt;
  traj.projection =
      method == IntegrationMethod::rk4_projected ? "row-normalize+gram-schmidt+det-phase" : "none";
  traj.times.reserve(steps + 1);
  traj.states.reserve(steps + 1);
  traj.times.push_back(0.0);
  traj.states.push_back(ClassicalState{g0, r0});

  MatrixC g = g0.m;
  const MatrixC rm = r0.to_matrix();
  const MatrixC step_factor = exp_su2(dt * r0).m;
  for (int k = 1; k <= steps; ++k) {
    if (method == IntegrationMethod::exact) {
      g = g * step_factor;
    } else {
      const std::complex<double> h(dt), half(dt / 2.0), sixth(dt / 6.0), two(2.0);
      const MatrixC k1 = g * rm;
      const MatrixC k2 = (g + half * k1) * rm;
      const MatrixC k3 = (g + half * k2) * rm;
      const MatrixC k4 = (g + h * k3) * rm;
      g = g + sixth * (k1 + two * k2 + two * k3 + k4);
      g = detail::project_to_group(g);
    }
    traj.times.push_back(k * dt);
    traj.states.push_back(ClassicalState{GroupPoint{g}, r0});
  }
  return traj;
}

struct NoetherSample {
  AlgebraElement r;  // body frame, components <Tn R>
  AlgebraElement l;  // space frame, components <Tn g R g^{-1}>
};

/// Computed directly from the definitions, without su(2) membership gating,
/// so drifting trajectories can be measured rather than rejected.
inline std::vector<NoetherSample> noether_charges(const Trajectory& traj) {
  if (traj.states.size() < 2) {
    throw std::invalid_argument("noether_charges: need at least 2 samples");
  }
  std::vector<NoetherSample> out;
  out.reserve(traj.states.size());
  for (const ClassicalState& s : traj.states) {
    const MatrixC l = s.g.m * s.R.to_matrix() * matrix_inverse(s.g.m);
    NoetherSample ns;
    ns.r = s.R;
    for (int n = 1; n <= 3; ++n) {
      ns.l.c[n - 1] = normalized_trace(l * basis_element<std::complex<double>>(n)).real();
    }
    out.push_back(ns);
  }
  return out;
}

inline double kinetic_energy(const AlgebraElement& r) {
  return 0.5 * (r.c[0] * r.c[0] + r.c[1] * r.c[1] + r.c[2] * r.c[2]);
}

struct ConservationReport {
  double max_drift_R = 0.0;
  double mean_drift_R = 0.0;
  double max_drift_L = 0.0;
  double mean_drift_L = 0.0;
  double max_drift_energy = 0.0;
  double mean_drift_energy = 0.0;
  std::size_t samples = 0;
};

/// Absolute drift of each conserved quantity relative to the first sample.
inline ConservationReport conservation_report(const Trajectory& traj) {
  if (traj.states.empty()) throw std::invalid_argument("conservation_report: empty trajectory");
  ConservationReport rep;
  rep.samples = traj.states.size();
  if (traj.states.size() < 2) return rep;
  const std::vector<NoetherSample> charges = noether_charges(traj);
  const NoetherSample& first = charges.front();
  const double e0 = kinetic_energy(first.r);
  double sum_r = 0.0, sum_l = 0.0, sum_e = 0.0;
  for (const NoetherSample& s : charges) {
    double dr = 0.0, dl = 0.0;
    for (int n = 0; n < 3; ++n) {
      dr = std::max(dr, std::abs(s.r.c[n] - first.r.c[n]));
      dl = std::max(dl, std::abs(s.l.c[n] - first.l.c[n]));
    }
    const double de = std::abs(kinetic_energy(s.r) - e0);
    rep.max_drift_R = std::max(rep.max_drift_R, dr);
    rep.max_drift_L = std::max(rep.max_drift_L, dl);
    rep.max_drift_energy = std::max(rep.max_drift_energy, de);
    sum_r += dr;
    sum_l += dl;
    sum_e += de;
  }
  rep.mean_drift_R = sum_r / static_cast<double>(charges.size());
  rep.mean_drift_L = sum_l / static_cast<double>(charges.size());
  rep.mean_drift_energy = sum_e / static_cast<double>(charges.size());
  return rep;
}

struct PoissonReport {
  double tolerance = 0.0;
  double max_residual_rr = 0.0;  // {Rn,Rm} - 2 eps Rk
  double max_residual_ll = 0.0;  // {Ln,Lm} + 2 eps Lk
  double max_residual_rl = 0.0;  // {Rn,Lm}
  double max_residual_rg = 0.0;  // {Rn,g} - g Tn
  double max_residual_lg = 0.0;  // {Lm,g} - Tm g
  bool pass = false;
};

/// Pointwise check of the bracket relations from the explicit flows
/// X_n = (dR = [R,Tn], dg = g Tn) and Y_m = (dR = 0, dg = Tm g).  The bracket
/// {F,.} is evaluated as the directional derivative along the field of F.
inline PoissonReport poisson_structure_check(const AlgebraElement& r, const GroupPoint& gp,
                                             double tol = kDefaultTolerance) {
  const ValidationReport val = validate_group_point(gp.m);
  if (val.unitarity_residual > 1e-9 || val.det_residual > 1e-9) {
    throw std::invalid_argument("poisson_structure_check: state is not on the group");
  }
  PoissonReport rep;
  rep.tolerance = tol;
  const MatrixC g = gp.m;
  const MatrixC ginv = matrix_inverse(g);
  const MatrixC rm = r.to_matrix();
  const MatrixC l = g * rm * ginv;

  std::array<MatrixC, 4> t;  // t[n] = Tn for n = 1..3
  for (int n = 1; n <= 3; ++n) t[n] = basis_element<std::complex<double>>(n);

  const auto ntr = [](const MatrixC& m) { return normalized_trace(m).real(); };

  // dL along (dR, dg): dg R g^{-1} + g dR g^{-1} - g R g^{-1} dg g^{-1}
  const auto d_l = [&](const MatrixC& d_r, const MatrixC& dg) {
    return dg * rm * ginv + g * d_r * ginv - l * dg * ginv;
  };

  for (int n = 1; n <= 3; ++n) {
    const MatrixC x_dr = commutator(rm, t[n]);  // R-slot of X_n
    const MatrixC x_dg = g * t[n];              // g-slot of X_n
    const MatrixC y_dg = t[n] * g;              // g-slot of Y_n (R-slot is 0)

    for (int m = 1; m <= 3; ++m) {
      // {Rn, Rm} = <Tm [R,Tn]> vs 2 eps_nmk Rk
      double expected = 0.0;
      for (int k = 1; k <= 3; ++k) expected += 2.0 * epsilon(n, m, k) * ntr(t[k] * rm);
      rep.max_residual_rr =
          std::max(rep.max_residual_rr, std::abs(ntr(t[m] * x_dr) - expected));

      // {Ln, Lm} = dLm along Y_n vs -2 eps_nmk Lk
      double expected_l = 0.0;
      for (int k = 1; k <= 3; ++k) expected_l += -2.0 * epsilon(n, m, k) * ntr(t[k] * l);
      rep.max_residual_ll = std::max(
          rep.max_residual_ll, std::abs(ntr(t[m] * d_l(MatrixC::zero(), y_dg)) - expected_l));

      // {Rn, Lm} = dLm along X_n vs 0
      rep.max_residual_rl =
          std::max(rep.max_residual_rl, std::abs(ntr(t[m] * d_l(x_dr, x_dg))));
    }
    // {Rn, g} = g-slot of X_n vs g Tn (definition; asserted for completeness)
    rep.max_residual_rg = std::max(rep.max_residual_rg, max_abs_entry(x_dg - g * t[n]));
    // {Ln, g} = g-slot of Y_n vs Tn g
    rep.max_residual_lg = std::max(rep.max_residual_lg, max_abs_entry(y_dg - t[n] * g));
  }
  rep.pass = rep.max_residual_rr <= tol && rep.max_residual_ll <= tol &&
             rep.max_residual_rl <= tol && rep.max_residual_rg <= tol &&
             rep.max_residual_lg <= tol;
  return rep;
}

/// Max-entry residual of (g(t+h) - g(t))/h against g(t) R.
inline double velocity_residual(const GroupPoint& g0, const AlgebraElement& r, double t,
                                double h) {
  const MatrixC gt = geodesic_exact(g0, r, t).m;
  const MatrixC gth = geodesic_exact(g0, r, t + h).m;
  const std::complex<double> inv_h(1.0 / h);
  return max_abs_entry(inv_h * (gth - gt) - gt * r.to_matrix());
}

/// Random phase-space point for property checks: exponential coordinates in
/// [-pi, pi)^3 and velocity components in [-1, 1).
inline ClassicalState random_state(std::mt19937_64& rng) {
  const double pi = 4.0 * std::atan(1.0);
  AlgebraElement coords(uniform_range(rng, -pi, pi), uniform_range(rng, -pi, pi),
                        uniform_range(rng, -pi, pi));
  AlgebraElement r(uniform_range(rng, -1.0, 1.0), uniform_range(rng, -1.0, 1.0),
                   uniform_range(rng, -1.0, 1.0));
  return ClassicalState{exp_su2(coords), r};
}

}  // namespace su2kit
