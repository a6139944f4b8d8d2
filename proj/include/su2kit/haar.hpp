#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "su2kit/rng.hpp"
#include "su2kit/spectra.hpp"

namespace su2kit {

/// Normalized Haar integral of a single entry monomial:
/// nonzero only for a=d, b=c (torus-weight balance), value
/// (-1)^c a! b! / (a+b+1)!.  Valid on arbitrary monomials, normal form or not.
inline Rational monomial_integral(const EntryMonomial& m) {
  const int a = m.e[0], b = m.e[1], c = m.e[2], d = m.e[3];
  if (a != d || b != c) return Rational(0);
  Rational v(factorial(a) * factorial(b), factorial(a + b + 1));
  return (c % 2 == 0) ? v : -v;
}

inline ComplexRational haar_integral(const GroupPolynomial& p) {
  ComplexRational total(0);
  for (const auto& [m, c] : p.terms()) total += monomial_integral(m) * c;
  return total;
}

/// <P|Q> = integral of star(P) * Q; sesquilinear, conjugate-symmetric,
/// positive-definite on canonical forms.
inline ComplexRational inner_product(const GroupPolynomial& p, const GroupPolynomial& q) {
  return haar_integral(star(p) * q);
}

inline Rational norm_squared(const GroupPolynomial& p) {
  const ComplexRational v = inner_product(p, p);
  if (!v.is_real() || v.re < 0) throw std::logic_error("norm_squared came out non-real or negative");
  return v.re;
}

struct HermiticityReport {
  std::string op;
  int sample_count = 0;
  bool pass = false;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // failing sample pair
};

/// Exact check of <op P|Q> == <P|op Q> over all pairs from `samples`.
inline HermiticityReport hermiticity_check(const InvariantOperator& op,
                                           const std::vector<GroupPolynomial>& samples) {
  if (samples.empty()) throw std::invalid_argument("hermiticity_check: empty sample list");
  HermiticityReport rep;
  rep.op = op.label();
  rep.sample_count = static_cast<int>(samples.size());
  rep.pass = true;
  std::vector<GroupPolynomial> images;
  images.reserve(samples.size());
  for (const auto& s : samples) images.push_back(op.apply(s));
  for (std::size_t i = 0; i < samples.size() && rep.pass; ++i) {
    for (std::size_t j = 0; j < samples.size(); ++j) {
      if (inner_product(images[i], samples[j]) != inner_product(samples[i], images[j])) {
        rep.pass = false;
        rep.witness = {i, j};
        break;
      }
    }
  }
  return rep;
}

/// Finds the single scalar s with <A P|Q> == s <P|B Q> across all sample
/// pairs, if one exists.  (The adjoint sign of a ladder pair is an audit
/// result, not an assumption.)
inline std::optional<ComplexRational> adjoint_sign(const InvariantOperator& a,
                                                   const InvariantOperator& b,
                                                   const std::vector<GroupPolynomial>& samples) {
  std::optional<ComplexRational> s;
  for (const auto& p : samples) {
    const GroupPolynomial ap = a.apply(p);
    for (const auto& q : samples) {
      const ComplexRational lhs = inner_product(ap, q);
      const ComplexRational rhs = inner_product(p, b.apply(q));
      if (rhs.is_zero()) {
        if (!lhs.is_zero()) return std::nullopt;
        continue;
      }
      const ComplexRational ratio = lhs / rhs;
      if (!s) {
        s = ratio;
      } else if (*s != ratio) {
        return std::nullopt;
      }
    }
  }
  return s;
}

struct GramReport {
  std::vector<SpinLabel> labels;
  std::vector<std::vector<ComplexRational>> matrix;
  bool diagonal = false;
  bool positive_diagonal = false;
};

/// Exact Gram matrix of all eigenfunctions with 2j <= two_j_max, labels in
/// ascending (j,l,r) order.
inline GramReport gram_matrix(int two_j_max, int a = 3, int b = 3) {
  std::vector<Eigenfunction> fns;
  for (int two_j = 0; two_j <= two_j_max; ++two_j) {
    for (Eigenfunction& f : multiplet(two_j, a, b)) fns.push_back(std::move(f));
  }
  GramReport rep;
  rep.diagonal = true;
  rep.positive_diagonal = true;
  const std::size_t n = fns.size();
  rep.matrix.assign(n, std::vector<ComplexRational>(n, ComplexRational(0)));
  for (std::size_t i = 0; i < n; ++i) rep.labels.push_back(fns[i].label);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      rep.matrix[i][j] = inner_product(fns[i].poly, fns[j].poly);
      if (i == j) {
        if (!rep.matrix[i][j].is_real() || !(rep.matrix[i][j].re > 0)) {
          rep.positive_diagonal = false;
        }
      } else if (!rep.matrix[i][j].is_zero()) {
        rep.diagonal = false;
      }
    }
  }
  return rep;
}

struct QuadratureResult {
  std::complex<double> estimate{0.0, 0.0};
  double std_error = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

/// Monte-Carlo Haar integral over the chart alpha = sqrt(s) e^{i phi1},
/// beta = sqrt(1-s) e^{i phi2}, measure ds dphi1 dphi2 / (4 pi^2); an
/// independent floating oracle for the exact formula.
inline QuadratureResult quadrature_oracle(const GroupPolynomial& p, std::size_t n_samples,
                                          std::uint64_t seed) {
  if (n_samples < 1000) throw std::invalid_argument("quadrature_oracle: need >= 1000 samples");
  std::mt19937_64 rng(seed);
  const double two_pi = 8.0 * std::atan(1.0);
  std::complex<double> mean = 0.0;
  double m2_re = 0.0, m2_im = 0.0;  // Welford accumulators
  for (std::size_t k = 1; k <= n_samples; ++k) {
    const double s = uniform_unit(rng);
    const double phi1 = two_pi * uniform_unit(rng);
    const double phi2 = two_pi * uniform_unit(rng);
    const std::complex<double> alpha = std::sqrt(s) * std::complex<double>(std::cos(phi1), std::sin(phi1));
    const std::complex<double> beta =
        std::sqrt(1.0 - s) * std::complex<double>(std::cos(phi2), std::sin(phi2));
    GroupPoint g;
    g.m = MatrixC(alpha, beta, -std::conj(beta), std::conj(alpha));
    const std::complex<double> v = evaluate(p, g);
    const std::complex<double> delta = v - mean;
    mean += delta / static_cast<double>(k);
    const std::complex<double> delta2 = v - mean;
    m2_re += delta.real() * delta2.real();
    m2_im += delta.imag() * delta2.imag();
  }
  QuadratureResult out;
  out.estimate = mean;
  out.samples = n_samples;
  out.seed = seed;
  if (n_samples > 1) {
    const double var = (m2_re + m2_im) / static_cast<double>(n_samples - 1);
    out.std_error = std::sqrt(std::max(var, 0.0) / static_cast<double>(n_samples));
  }
  return out;
}

/// Exactly representable group elements used for exact bi-invariance checks.
inline std::vector<MatrixQ> exact_group_elements() {
  const MatrixQ id = MatrixQ::identity();
  return {id, ComplexRational(-1) * id, basis_element<ComplexRational>(1),
          basis_element<ComplexRational>(2), basis_element<ComplexRational>(3)};
}

}  // namespace su2kit
