// A guided tour: exact operators on the group's coordinate ring, the
// eigenfunction tower, Haar inner products, geodesic flow, and the reduction
// to the sphere.  Build target: `quickstart`.
#include <iostream>

#include <su2kit/reports.hpp>
#include <su2kit/suites.hpp>

using namespace su2kit;

int main() {
  std::cout << "== basis algebra ==\n";
  const MatrixQ t1 = basis_element<ComplexRational>(1);
  const MatrixQ t2 = basis_element<ComplexRational>(2);
  std::cout << "<T1 T1> = " << to_string(normalized_trace(t1 * t1))
            << ", <T1 T2> = " << to_string(normalized_trace(t1 * t2)) << "\n";
  std::cout << "[T1,T2] == 2*T3: "
            << (commutator(t1, t2) == ComplexRational(2) * basis_element<ComplexRational>(3))
            << "\n\n";

  std::cout << "== the seed eigenfunction ==\n";
  const GroupPolynomial seed = seed_polynomial();
  std::cout << "seed = " << to_string(seed) << "\n";
  const InvariantOperator h = hamiltonian();
  std::cout << "H seed == (3/4) seed: " << (h.apply(seed) == ComplexRational(Rational(3, 4)) * seed) << "\n";
  std::cout << "R3 seed == (1/2) seed: "
            << (quantum_R(3).apply(seed) == ComplexRational(Rational(1, 2)) * seed) << "\n";
  std::cout << "L3 seed == (-1/2) seed: "
            << (quantum_L(3).apply(seed) == ComplexRational(Rational(-1, 2)) * seed) << "\n\n";

  std::cout << "== operator identities on the degree-4 basis ==\n";
  for (const IdentityReport& rep : commutator_suite(4)) {
    if (!rep.pass) std::cout << "FAILED: " << rep.identity << "\n";
  }
  std::cout << "all 15 generator commutators hold exactly\n";
  const LadderSuiteResult ladders = ladder_suite(4);
  std::cout << "Hamiltonian factorizations that hold verbatim:\n";
  for (const std::string& v : ladders.audit.holding_variants()) {
    std::cout << "  " << v << "\n";
  }
  std::cout << "\n";

  std::cout << "== a spin-1 eigenfunction ==\n";
  const Eigenfunction f = build_eigenfunction(SpinLabel{2, 0, 2});
  std::cout << "psi(j=1, l=0, r=1) = " << to_string(f.poly) << "\n";
  std::cout << "energy " << to_fraction_string(f.energy) << ", Haar norm^2 "
            << to_fraction_string(norm_squared(f.poly)) << "\n\n";

  std::cout << "== geodesic flow ==\n";
  const GroupPoint g0;  // identity
  const AlgebraElement r0(0.2, -0.1, 0.3);
  const Trajectory traj = integrate(g0, r0, 0.01, 2000, IntegrationMethod::exact);
  const ConservationReport cons = conservation_report(traj);
  std::cout << "2000 exact steps: max |R drift| = " << cons.max_drift_R
            << ", max |L drift| = " << cons.max_drift_L
            << ", max |energy drift| = " << cons.max_drift_energy << "\n\n";

  std::cout << "== reduction to the sphere ==\n";
  const ReducedTrajectory red = reduced_trajectory(traj);
  std::cout << "max | ||x(t)|| - 1 | along the orbit = " << red.max_norm_residual << "\n";
  const MatchReport match = spherical_harmonic_match(1, 0);
  std::cout << "psi(j=1, l=0, r=0) vs the Rodrigues harmonic: "
            << (match.proportional ? "proportional, constant " + to_string(match.constant)
                                   : "no match")
            << "\n";
  return 0;
}
