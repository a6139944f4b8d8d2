#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "su2kit/classical.hpp"
#include "su2kit/exact_linalg.hpp"
#include "su2kit/haar.hpp"
#include "su2kit/spectra.hpp"

namespace su2kit {

/// x_a = <(g^{-1} T3 g) Ta> as exact degree-2 polynomials; invariant under
/// g -> e^{beta T3} g and satisfying sum x_a^2 = 1 in the ring.
inline std::array<GroupPolynomial, 3> gauge_invariant_coords() {
  const GroupPolynomial u11 = GroupPolynomial::variable(0);
  const GroupPolynomial u12 = GroupPolynomial::variable(1);
  const GroupPolynomial u21 = GroupPolynomial::variable(2);
  const GroupPolynomial u22 = GroupPolynomial::variable(3);
  // g^{-1} is the adjugate since det g = 1.
  const std::array<std::array<GroupPolynomial, 2>, 2> uinv = {{{u22, ComplexRational(-1) * u12},
                                                               {ComplexRational(-1) * u21, u11}}};
  const std::array<std::array<GroupPolynomial, 2>, 2> u = {{{u11, u12}, {u21, u22}}};
  const MatrixQ t3 = basis_element<ComplexRational>(3);

  // X = g^{-1} T3 g, entries as polynomials.
  std::array<std::array<GroupPolynomial, 2>, 2> x;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      GroupPolynomial s;
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          s += t3.at(k, l) * (uinv[i][k] * u[l][j]);
        }
      }
      x[i][j] = s;
    }
  }

  std::array<GroupPolynomial, 3> coords;
  for (int a = 1; a <= 3; ++a) {
    const MatrixQ t = basis_element<ComplexRational>(a);
    // <X Ta> = -1/2 tr(X Ta) = -1/2 sum_ik X_ik (Ta)_ki
    GroupPolynomial s;
    for (int i = 0; i < 2; ++i) {
      for (int k = 0; k < 2; ++k) {
        s += (ComplexRational(Rational(-1, 2)) * t.at(k, i)) * x[i][k];
      }
    }
    coords[a - 1] = s;
  }
  return coords;
}

/// Polynomial in the sphere coordinates x1,x2,x3 modulo x1^2+x2^2+x3^2 = 1,
/// kept canonical by eliminating x3 powers >= 2.
class InvariantPolynomial {
 public:
  using Exponents = std::array<int, 3>;
  using TermMap = std::map<Exponents, ComplexRational>;

  InvariantPolynomial() = default;

  static InvariantPolynomial constant(const ComplexRational& c) {
    InvariantPolynomial p;
    p.add_term({0, 0, 0}, c);
    return p;
  }

  void add_term(const Exponents& e, const ComplexRational& c) {
    if (c.is_zero()) return;
    if (e[2] >= 2) {
      // x3^2 = 1 - x1^2 - x2^2
      add_term({e[0], e[1], e[2] - 2}, c);
      add_term({e[0] + 2, e[1], e[2] - 2}, -c);
      add_term({e[0], e[1] + 2, e[2] - 2}, -c);
      return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
    return d;
  }

  InvariantPolynomial& operator+=(const InvariantPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  friend InvariantPolynomial operator+(InvariantPolynomial a, const InvariantPolynomial& b) {
    return a += b;
  }
  friend InvariantPolynomial operator*(const ComplexRational& s, const InvariantPolynomial& p) {
    InvariantPolynomial out;
    for (const auto& [e, c] : p.terms_) out.add_term(e, s * c);
    return out;
  }
  friend InvariantPolynomial operator*(const InvariantPolynomial& a,
                                       const InvariantPolynomial& b) {
    InvariantPolynomial out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
      }
    }
    return out;
  }
  friend bool operator==(const InvariantPolynomial& a, const InvariantPolynomial& b) {
    return a.terms_ == b.terms_;
  }

 private:
  TermMap terms_;
};

inline std::string to_string(const InvariantPolynomial& p) {
  if (p.is_zero()) return "0";
  static const char* names[3] = {"x1", "x2", "x3"};
  std::string s;
  for (const auto& [e, c] : p.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + to_string(c) + ")";
    for (int k = 0; k < 3; ++k) {
      if (e[k] == 0) continue;
      s += "*";
      s += names[k];
      if (e[k] > 1) s += "^" + std::to_string(e[k]);
    }
  }
  return s;
}

/// If q == c*p for one exact scalar c (p nonzero), returns c.
inline std::optional<ComplexRational> proportionality_constant(const InvariantPolynomial& p,
                                                               const InvariantPolynomial& q) {
  if (p.is_zero()) return std::nullopt;
  if (q.is_zero()) return ComplexRational(0);
  const auto& first = *p.terms().begin();
  const auto it = q.terms().find(first.first);
  if (it == q.terms().end()) return std::nullopt;
  const ComplexRational c = it->second / first.second;
  return (q == c * p) ? std::optional<ComplexRational>(c) : std::nullopt;
}

/// b(t) = -<g-dot g^{-1} T3> = -L3(t) along the trajectory.
inline std::vector<double> gauge_field(const Trajectory& traj) {
  if (traj.states.empty()) throw std::invalid_argument("gauge_field: empty trajectory");
  std::vector<double> out;
  out.reserve(traj.states.size());
  for (const NoetherSample& s : noether_charges(traj)) out.push_back(-s.l.c[2]);
  return out;
}

struct ReducedTrajectory {
  std::vector<double> times;
  std::vector<std::array<double, 3>> x;
  double max_norm_residual = 0.0;      // max | ||x|| - 1 |
  double max_imag_residual = 0.0;      // sanity: coordinates must be real
  std::vector<double> kinetic_energy;  // interior samples, centered differences
  double ke_relative_variation = 0.0;
};

/// x(t) by evaluating the gauge-invariant coordinates along the trajectory;
/// kinetic energy (1/2) x-dot . x-dot from centered differences.
inline ReducedTrajectory reduced_trajectory(const Trajectory& traj) {
  if (traj.states.size() < 3) {
    throw std::invalid_argument("reduced_trajectory: need at least 3 samples");
  }
  const std::array<GroupPolynomial, 3> coords = gauge_invariant_coords();
  ReducedTrajectory out;
  out.times = traj.times;
  out.x.reserve(traj.states.size());
  for (const ClassicalState& s : traj.states) {
    std::array<double, 3> v{};
    for (int a = 0; a < 3; ++a) {
      const std::complex<double> z = evaluate(coords[a], s.g);
      v[a] = z.real();
      out.max_imag_residual = std::max(out.max_imag_residual, std::abs(z.imag()));
    }
    const double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    out.max_norm_residual = std::max(out.max_norm_residual, std::abs(norm - 1.0));
    out.x.push_back(v);
  }
  for (std::size_t i = 1; i + 1 < out.x.size(); ++i) {
    const double dt = out.times[i + 1] - out.times[i - 1];
    double ke = 0.0;
    for (int a = 0; a < 3; ++a) {
      const double v = (out.x[i + 1][a] - out.x[i - 1][a]) / dt;
      ke += 0.5 * v * v;
    }
    out.kinetic_energy.push_back(ke);
  }
  const auto [lo, hi] = std::minmax_element(out.kinetic_energy.begin(), out.kinetic_energy.end());
  const double scale = std::max(std::abs(*hi), 1e-300);
  out.ke_relative_variation = (*hi - *lo) / scale;
  return out;
}

struct ConstraintFilterReport {
  std::vector<SpinLabel> survivors;
  int labels_checked = 0;
  bool verified = false;  // L3 psi == 0 exactly iff the label survived
};

/// Applies the constraint operator L3 to every eigenfunction with
/// 2j <= two_j_max: survivors are exactly the integer-j, l=0 labels.
inline ConstraintFilterReport constraint_filter(int two_j_max) {
  const InvariantOperator l3 = quantum_L(3);
  ConstraintFilterReport rep;
  rep.verified = true;
  for (int two_j = 0; two_j <= two_j_max; ++two_j) {
    for (const Eigenfunction& f : multiplet(two_j)) {
      ++rep.labels_checked;
      const bool annihilated = l3.apply(f.poly).is_zero();
      if (annihilated != (f.label.two_l == 0)) rep.verified = false;
      if (annihilated) rep.survivors.push_back(f.label);
    }
  }
  return rep;
}

/// Expresses an l=0 eigenfunction exactly in the sphere coordinates.  The
/// solve is over the canonical monomials x^e with e3 <= 1 and total degree
/// <= j, which restrict to a basis of functions on the sphere.
inline InvariantPolynomial rewrite_in_sphere_coords(const Eigenfunction& psi) {
  if (!(psi.l_eigenvalue == 0)) {
    throw std::invalid_argument("rewrite_in_sphere_coords: input must have l = 0");
  }
  const int j = psi.label.two_j / 2;
  const std::array<GroupPolynomial, 3> coords = gauge_invariant_coords();

  std::vector<InvariantPolynomial::Exponents> basis;
  std::vector<GroupPolynomial> images;
  for (int e1 = 0; e1 <= j; ++e1) {
    for (int e2 = 0; e1 + e2 <= j; ++e2) {
      for (int e3 = 0; e3 <= 1 && e1 + e2 + e3 <= j; ++e3) {
        basis.push_back({e1, e2, e3});
        GroupPolynomial img = GroupPolynomial::one();
        for (int k = 0; k < e1; ++k) img = img * coords[0];
        for (int k = 0; k < e2; ++k) img = img * coords[1];
        for (int k = 0; k < e3; ++k) img = img * coords[2];
        images.push_back(std::move(img));
      }
    }
  }

  // Row space: every canonical entry monomial seen in the images or the target.
  std::map<EntryMonomial, std::size_t> row_of;
  const auto note_rows = [&row_of](const GroupPolynomial& p) {
    for (const auto& [m, c] : p.terms()) row_of.try_emplace(m, row_of.size());
  };
  for (const GroupPolynomial& img : images) note_rows(img);
  note_rows(psi.poly);

  ExactMatrix a(row_of.size(), ExactVector(basis.size(), ComplexRational(0)));
  ExactVector b(row_of.size(), ComplexRational(0));
  for (std::size_t col = 0; col < images.size(); ++col) {
    for (const auto& [m, c] : images[col].terms()) a[row_of.at(m)][col] = c;
  }
  for (const auto& [m, c] : psi.poly.terms()) b[row_of.at(m)] = c;

  const auto solution = solve_linear_system(std::move(a), std::move(b));
  if (!solution) {
    throw std::logic_error("rewrite_in_sphere_coords: no exact solution for " +
                           to_string(psi.label) + " (input not gauge invariant?)");
  }
  InvariantPolynomial out;
  GroupPolynomial reconstructed;
  for (std::size_t col = 0; col < basis.size(); ++col) {
    out.add_term(basis[col], (*solution)[col]);
    reconstructed += (*solution)[col] * images[col];
  }
  if (!(reconstructed == psi.poly)) {
    throw std::logic_error("rewrite_in_sphere_coords: residual after solve for " +
                           to_string(psi.label));
  }
  return out;
}

/// Coefficients of the degree-j Legendre polynomial from the Rodrigues form
/// P_j(t) = (2^j j!)^{-1} (d/dt)^j (t^2-1)^j; index = power of t.
inline std::vector<Rational> legendre_coefficients(int j) {
  std::vector<Rational> poly(2 * j + 1, Rational(0));
  for (int k = 0; k <= j; ++k) {
    // (t^2 - 1)^j = sum_k C(j,k) t^{2k} (-1)^{j-k}
    const BigInt c = binomial_coefficient(j, k);
    poly[2 * k] = ((j - k) % 2 == 0) ? Rational(c) : Rational(-c);
  }
  for (int pass = 0; pass < j; ++pass) {
    std::vector<Rational> d(poly.size() > 1 ? poly.size() - 1 : 1, Rational(0));
    for (std::size_t p = 1; p < poly.size(); ++p) d[p - 1] = Rational(p) * poly[p];
    poly = std::move(d);
  }
  const Rational scale = Rational(1) / Rational(BigInt(1) << j) / Rational(factorial(j));
  for (Rational& c : poly) c *= scale;
  return poly;
}

inline std::vector<Rational> polynomial_derivative(std::vector<Rational> poly, int times) {
  for (int pass = 0; pass < times; ++pass) {
    std::vector<Rational> d(poly.size() > 1 ? poly.size() - 1 : 1, Rational(0));
    for (std::size_t p = 1; p < poly.size(); ++p) d[p - 1] = Rational(p) * poly[p];
    poly = std::move(d);
  }
  return poly;
}

/// Solid-harmonic oracle: S_j^m = (x1 + sign(m) i x2)^{|m|} P_j^{(|m|)}(x3),
/// built from the Rodrigues form, canonicalized on the sphere.  Only
/// proportionality against it is ever asserted.
inline InvariantPolynomial solid_harmonic(int j, int m) {
  if (j < 0 || std::abs(m) > j) throw std::out_of_range("solid_harmonic: need |m| <= j");
  const int mu = std::abs(m);
  const std::vector<Rational> radial = polynomial_derivative(legendre_coefficients(j), mu);

  InvariantPolynomial axial;
  for (std::size_t p = 0; p < radial.size(); ++p) {
    if (radial[p] != 0) axial.add_term({0, 0, static_cast<int>(p)}, ComplexRational(radial[p]));
  }
  // (x1 +/- i x2)^mu via binomial expansion
  InvariantPolynomial equatorial = InvariantPolynomial::constant(ComplexRational(1));
  const ComplexRational ci = (m >= 0) ? ComplexRational::i() : -ComplexRational::i();
  for (int k = 0; k < mu; ++k) {
    InvariantPolynomial factor;
    factor.add_term({1, 0, 0}, ComplexRational(1));
    factor.add_term({0, 1, 0}, ci);
    equatorial = equatorial * factor;
  }
  return equatorial * axial;
}

struct MatchReport {
  int j = 0;
  int r = 0;
  std::optional<int> matched_m;  // which oracle harmonic matched (m = +/- r)
  ComplexRational constant;
  bool proportional = false;
};

/// Compares the rewritten psi(j, l=0, r) against the solid-harmonic oracle at
/// m = +r and m = -r; the single exact proportionality constant is reported.
inline MatchReport spherical_harmonic_match(int j, int r) {
  if (j < 0 || std::abs(r) > j) {
    throw std::out_of_range("spherical_harmonic_match: need |r| <= j");
  }
  MatchReport rep;
  rep.j = j;
  rep.r = r;
  const Eigenfunction psi = build_eigenfunction(SpinLabel{2 * j, 0, 2 * r});
  const InvariantPolynomial a = rewrite_in_sphere_coords(psi);
  for (const int m : (r == 0) ? std::vector<int>{0} : std::vector<int>{r, -r}) {
    const InvariantPolynomial s = solid_harmonic(j, m);
    if (const auto c = proportionality_constant(s, a); c && !c->is_zero()) {
      rep.matched_m = m;
      rep.constant = *c;
      rep.proportional = true;
      return rep;
    }
  }
  return rep;
}

}  // namespace su2kit
