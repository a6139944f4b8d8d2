#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "su2kit/exact_linalg.hpp"
#include "su2kit/operators.hpp"

namespace su2kit {

/// (j, l, r) stored as doubled integers so half-integer spins stay exact.
struct SpinLabel {
  int two_j = 0;
  int two_l = 0;
  int two_r = 0;

  bool in_range() const {
    const bool parity = ((two_j - two_l) % 2 == 0) && ((two_j - two_r) % 2 == 0);
    return two_j >= 0 && parity && -two_j <= two_l && two_l <= two_j && -two_j <= two_r &&
           two_r <= two_j;
  }
  Rational j() const { return Rational(two_j, 2); }
  Rational l() const { return Rational(two_l, 2); }
  Rational r() const { return Rational(two_r, 2); }
  Rational energy() const { return Rational(two_j * (two_j + 2), 4); }  // j(j+1)

  auto operator<=>(const SpinLabel&) const = default;
};

inline std::string to_string(const SpinLabel& s) {
  return "(j=" + to_fraction_string(s.j()) + ", l=" + to_fraction_string(s.l()) +
         ", r=" + to_fraction_string(s.r()) + ")";
}

/// Exact simultaneous eigenfunction of (H, R_a, L_b): the polynomial plus its
/// verified eigenvalues.  Unnormalized by construction; the Haar norm lives in
/// the integration layer.
struct Eigenfunction {
  SpinLabel label;
  int axis_r = 3;
  int axis_l = 3;
  GroupPolynomial poly;
  Rational energy;
  Rational r_eigenvalue;
  Rational l_eigenvalue;
};

inline GroupPolynomial seed_function(int a = 3, int b = 3) { return seed_polynomial(a, b); }

/// Builds psi(j,l,r) by laddering the top state seed^{2j} down/up to the
/// requested eigenvalues, with the ladder directions taken from the
/// convention audit, then verifies all three eigen-relations exactly.
/// Throws std::logic_error if any relation fails (that is a bug, not data).
inline Eigenfunction build_eigenfunction(const SpinLabel& label, int a = 3, int b = 3) {
  if (!label.in_range()) {
    throw std::out_of_range("label " + to_string(label) +
                            " violates |l| <= j, |r| <= j or parity");
  }
  const ConventionAudit audit = run_convention_audit(a, b, 1);

  GroupPolynomial psi = audit.seed.pow(label.two_j);
  // Seed eigenvalues are +/-1/2, so seed^{2j} sits at (2j * eig) = +/-j.
  const int start_two_r = (audit.r_eigenvalue > 0) ? label.two_j : -label.two_j;
  const int start_two_l = (audit.l_eigenvalue > 0) ? label.two_j : -label.two_j;

  const auto apply_ladder = [&psi](LadderKind kind, int axis, bool raise, bool plus_raises,
                                   int steps) {
    const LadderSign sign = (raise == plus_raises) ? LadderSign::plus : LadderSign::minus;
    const InvariantOperator op = ladder(kind, sign, axis);
    for (int s = 0; s < steps; ++s) psi = op.apply(psi);
  };
  apply_ladder(LadderKind::R, a, label.two_r > start_two_r, audit.r_plus_raises,
               std::abs(label.two_r - start_two_r) / 2);
  apply_ladder(LadderKind::L, b, label.two_l > start_two_l, audit.l_plus_raises,
               std::abs(label.two_l - start_two_l) / 2);

  Eigenfunction out;
  out.label = label;
  out.axis_r = a;
  out.axis_l = b;
  out.poly = std::move(psi);
  out.energy = label.energy();
  out.r_eigenvalue = label.r();
  out.l_eigenvalue = label.l();

  if (out.poly.is_zero()) {
    throw std::logic_error("eigenfunction " + to_string(label) + " came out zero");
  }
  const auto check = [&](const InvariantOperator& op, const Rational& expected,
                         const char* name) {
    const GroupPolynomial image = op.apply(out.poly);
    if (!(image == ComplexRational(expected) * out.poly)) {
      throw std::logic_error(std::string("eigen-relation ") + name + " failed for " +
                             to_string(label));
    }
  };
  check(hamiltonian(), out.energy, "H");
  check(quantum_R(a), out.r_eigenvalue, "R_a");
  check(quantum_L(b), out.l_eigenvalue, "L_b");
  return out;
}

inline std::vector<Eigenfunction> multiplet(int two_j, int a = 3, int b = 3) {
  std::vector<Eigenfunction> out;
  for (int two_l = -two_j; two_l <= two_j; two_l += 2) {
    for (int two_r = -two_j; two_r <= two_j; two_r += 2) {
      out.push_back(build_eigenfunction(SpinLabel{two_j, two_l, two_r}, a, b));
    }
  }
  return out;
}

struct SpectrumRow {
  SpinLabel label;
  Rational energy;
  int degree = 0;
  bool verified = false;
};

/// One verified row per (j,l,r) with 2j <= two_j_max; row count is
/// sum over j of (2j+1)^2.
inline std::vector<SpectrumRow> spectrum_table(int two_j_max, int a = 3, int b = 3) {
  if (two_j_max < 0 || two_j_max > 6) {
    throw std::out_of_range("spectrum_table: two_j_max must be in 0..6 (degree budget)");
  }
  std::vector<SpectrumRow> rows;
  for (int two_j = 0; two_j <= two_j_max; ++two_j) {
    for (const Eigenfunction& f : multiplet(two_j, a, b)) {
      rows.push_back(SpectrumRow{f.label, f.energy, f.poly.degree(), true});
    }
  }
  return rows;
}

struct IndependenceReport {
  int two_j = 0;
  int expected_rank = 0;
  int computed_rank = 0;
  bool pass = false;
};

/// Exact rank of the multiplet's coefficient vectors over the normal-form
/// monomial basis; full rank means the (2j+1)^2 functions are independent.
inline IndependenceReport multiplet_independence_check(int two_j, int a = 3, int b = 3) {
  const std::vector<Eigenfunction> fns = multiplet(two_j, a, b);
  const std::vector<EntryMonomial> basis = canonical_monomials(two_j);
  std::map<EntryMonomial, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);

  ExactMatrix m(fns.size(), ExactVector(basis.size(), ComplexRational(0)));
  for (std::size_t i = 0; i < fns.size(); ++i) {
    for (const auto& [mono, coeff] : fns[i].poly.terms()) {
      m[i][index.at(mono)] = coeff;
    }
  }
  IndependenceReport rep;
  rep.two_j = two_j;
  rep.expected_rank = (two_j + 1) * (two_j + 1);
  rep.computed_rank = rank(std::move(m));
  rep.pass = rep.computed_rank == rep.expected_rank;
  return rep;
}

}  // namespace su2kit
