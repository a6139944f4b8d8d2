#pragma once

#include <random>
#include <string>
#include <vector>

#include "su2kit/classical.hpp"
#include "su2kit/haar.hpp"
#include "su2kit/operators.hpp"

namespace su2kit {

/// Exact checks of the 2x2 matrix layer: trace orthonormality, basis
/// products Tn*Tm = -delta + eps*Tk, commutators [Tn,Tm] = 2 eps Tk.
struct MatrixAlgebraReport {
  bool trace_orthonormal = false;
  bool products = false;
  bool commutators = false;
  bool pass = false;
};

inline MatrixAlgebraReport matrix_algebra_check() {
  MatrixAlgebraReport rep;
  rep.trace_orthonormal = true;
  rep.products = true;
  rep.commutators = true;
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 3; ++m) {
      const MatrixQ tn = basis_element<ComplexRational>(n);
      const MatrixQ tm = basis_element<ComplexRational>(m);
      const ComplexRational delta = (n == m) ? ComplexRational(1) : ComplexRational(0);
      if (!(normalized_trace(tn * tm) == delta)) rep.trace_orthonormal = false;

      MatrixQ expect = delta * (ComplexRational(-1) * MatrixQ::identity());
      MatrixQ comm_expect = MatrixQ::zero();
      for (int k = 1; k <= 3; ++k) {
        const int e = epsilon(n, m, k);
        if (e != 0) {
          expect = expect + ComplexRational(e) * basis_element<ComplexRational>(k);
          comm_expect = comm_expect + ComplexRational(2 * e) * basis_element<ComplexRational>(k);
        }
      }
      if (!(tn * tm == expect)) rep.products = false;
      if (!(commutator(tn, tm) == comm_expect)) rep.commutators = false;
    }
  }
  rep.pass = rep.trace_orthonormal && rep.products && rep.commutators;
  return rep;
}

/// The fifteen generator commutator identities: [Rn,Rm] = i eps Rk,
/// [Ln,Lm] = i eps Lk over cyclic pairs, and all nine [Rn,Lm] = 0.
inline std::vector<IdentityReport> commutator_suite(int max_degree) {
  std::vector<IdentityReport> out;
  const std::array<std::array<int, 3>, 3> cyclic = {{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}};
  for (const auto& [n, m, k] : cyclic) {
    out.push_back(verify_identity(
        op_commutator(quantum_R(n), quantum_R(m)), ComplexRational::i() * quantum_R(k),
        max_degree,
        "[R" + std::to_string(n) + ",R" + std::to_string(m) + "] == i*R" + std::to_string(k)));
  }
  for (const auto& [n, m, k] : cyclic) {
    out.push_back(verify_identity(
        op_commutator(quantum_L(n), quantum_L(m)), ComplexRational::i() * quantum_L(k),
        max_degree,
        "[L" + std::to_string(n) + ",L" + std::to_string(m) + "] == i*L" + std::to_string(k)));
  }
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 3; ++m) {
      out.push_back(verify_identity(
          op_commutator(quantum_R(n), quantum_L(m)), InvariantOperator::zero(), max_degree,
          "[R" + std::to_string(n) + ",L" + std::to_string(m) + "] == 0"));
    }
  }
  return out;
}

struct LadderSuiteResult {
  std::vector<IdentityReport> fixed;        // sign-independent identities
  std::vector<IdentityReport> signed_variants;  // both signs of [O3,O+/-]
  ConventionAudit audit;
  bool pass = false;
};

/// Ladder commutators plus the Hamiltonian factorization variants.  Signed
/// commutators are tested both ways; exactly one variant of each pair must
/// hold, and the audit records the surviving forms.
inline LadderSuiteResult ladder_suite(int max_degree) {
  LadderSuiteResult res;
  const InvariantOperator rp = ladder(LadderKind::R, LadderSign::plus);
  const InvariantOperator rm = ladder(LadderKind::R, LadderSign::minus);
  const InvariantOperator lp = ladder(LadderKind::L, LadderSign::plus);
  const InvariantOperator lm = ladder(LadderKind::L, LadderSign::minus);
  const InvariantOperator r3 = quantum_R(3);
  const InvariantOperator l3 = quantum_L(3);

  res.fixed.push_back(verify_identity(op_commutator(rp, rm), ComplexRational(2) * r3,
                                      max_degree, "[R+,R-] == 2*R3"));
  res.fixed.push_back(verify_identity(op_commutator(lp, lm), ComplexRational(2) * l3,
                                      max_degree, "[L+,L-] == 2*L3"));
  for (const auto& [a, b, name] :
       {std::tuple{rp, lp, "[R+,L+] == 0"}, std::tuple{rp, lm, "[R+,L-] == 0"},
        std::tuple{rm, lp, "[R-,L+] == 0"}, std::tuple{rm, lm, "[R-,L-] == 0"}}) {
    res.fixed.push_back(verify_identity(op_commutator(a, b), InvariantOperator::zero(),
                                        max_degree, name));
  }
  res.fixed.push_back(
      verify_identity(hamiltonian(LadderKind::R), hamiltonian(LadderKind::L),
                      max_degree, "H(R) == H(L)"));

  for (const auto& [three, pm, name] :
       {std::tuple{r3, rp, "R+"}, std::tuple{r3, rm, "R-"},
        std::tuple{l3, lp, "L+"}, std::tuple{l3, lm, "L-"}}) {
    const std::string three_name = name[0] == 'R' ? "R3" : "L3";
    res.signed_variants.push_back(
        verify_identity(op_commutator(three, pm), pm, max_degree,
                        "[" + three_name + "," + name + "] == " + std::string(name)));
    res.signed_variants.push_back(
        verify_identity(op_commutator(three, pm), ComplexRational(-1) * pm, max_degree,
                        "[" + three_name + "," + name + "] == -" + std::string(name)));
  }

  res.audit = run_convention_audit(3, 3, std::min(max_degree, 4));

  res.pass = true;
  for (const IdentityReport& r : res.fixed) res.pass = res.pass && r.pass;
  for (std::size_t i = 0; i + 1 < res.signed_variants.size(); i += 2) {
    const bool one_of_two = res.signed_variants[i].pass != res.signed_variants[i + 1].pass;
    res.pass = res.pass && one_of_two;
  }
  res.pass = res.pass && !res.audit.holding_variants().empty();
  return res;
}

struct HermiticitySuiteResult {
  std::vector<HermiticityReport> reports;  // R1..R3, L1..L3
  std::optional<ComplexRational> r_ladder_adjoint_sign;  // s in (R-)^dag = s * R+
  std::optional<ComplexRational> l_ladder_adjoint_sign;  // s in (L-)^dag = s * L+
  bool pass = false;
};

/// Exact hermiticity of all six generators over every normal-form monomial of
/// total degree <= max_degree, plus the measured ladder adjoint pairing sign.
inline HermiticitySuiteResult hermiticity_suite(int max_degree) {
  if (max_degree < 1) throw std::out_of_range("hermiticity_suite: max_degree must be >= 1");
  std::vector<GroupPolynomial> samples;
  for (const EntryMonomial& m : canonical_monomials(max_degree)) {
    samples.push_back(GroupPolynomial::term(m, ComplexRational(1)));
  }
  HermiticitySuiteResult res;
  res.pass = true;
  for (int n = 1; n <= 3; ++n) {
    res.reports.push_back(hermiticity_check(quantum_R(n), samples));
    res.pass = res.pass && res.reports.back().pass;
  }
  for (int m = 1; m <= 3; ++m) {
    res.reports.push_back(hermiticity_check(quantum_L(m), samples));
    res.pass = res.pass && res.reports.back().pass;
  }
  res.r_ladder_adjoint_sign = adjoint_sign(ladder(LadderKind::R, LadderSign::minus),
                                           ladder(LadderKind::R, LadderSign::plus), samples);
  res.l_ladder_adjoint_sign = adjoint_sign(ladder(LadderKind::L, LadderSign::minus),
                                           ladder(LadderKind::L, LadderSign::plus), samples);
  res.pass = res.pass && res.r_ladder_adjoint_sign.has_value() &&
             res.l_ladder_adjoint_sign.has_value();
  return res;
}

struct PoissonSuiteResult {
  std::uint64_t seed = 0;
  int points = 0;
  double tolerance = 0.0;
  PoissonReport worst;  // per-field maxima over all sampled phase points
  bool pass = false;
};

/// Pointwise Poisson bracket relations at `points` seeded random phase points.
inline PoissonSuiteResult poisson_suite(std::uint64_t seed, int points,
                                        double tol = kDefaultTolerance) {
  if (points < 1) throw std::out_of_range("poisson_suite: points must be >= 1");
  PoissonSuiteResult res;
  res.seed = seed;
  res.points = points;
  res.tolerance = tol;
  res.worst.tolerance = tol;
  res.pass = true;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < points; ++i) {
    const ClassicalState s = random_state(rng);
    const PoissonReport rep = poisson_structure_check(s.R, s.g, tol);
    res.worst.max_residual_rr = std::max(res.worst.max_residual_rr, rep.max_residual_rr);
    res.worst.max_residual_ll = std::max(res.worst.max_residual_ll, rep.max_residual_ll);
    res.worst.max_residual_rl = std::max(res.worst.max_residual_rl, rep.max_residual_rl);
    res.worst.max_residual_rg = std::max(res.worst.max_residual_rg, rep.max_residual_rg);
    res.worst.max_residual_lg = std::max(res.worst.max_residual_lg, rep.max_residual_lg);
    res.pass = res.pass && rep.pass;
  }
  res.worst.pass = res.pass;
  return res;
}

}  // namespace su2kit
