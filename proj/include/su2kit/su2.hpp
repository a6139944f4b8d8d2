#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "su2kit/matrix2.hpp"

namespace su2kit {

inline constexpr double kDefaultTolerance = 1e-12;

/// Orthonormal anti-hermitian basis: T1=[[i,0],[0,-i]], T2=[[0,1],[-1,0]],
/// T3=[[0,i],[i,0]].  Tn*Tm = -delta_nm*I + eps_nmk*Tk, so <Tn Tm> = delta_nm.
template <typename S>
Matrix2<S> basis_element(int n) {
  const S i = imaginary_unit<S>::value();
  switch (n) {
    case 1: return {i, S(0), S(0), -i};
    case 2: return {S(0), S(1), S(-1), S(0)};
    case 3: return {S(0), i, i, S(0)};
    default: throw std::out_of_range("basis_element: index must be 1, 2 or 3");
  }
}

/// <M> = -1/2 Tr(M); makes the basis above orthonormal.
template <typename S>
S normalized_trace(const Matrix2<S>& m) {
  return S(-1) / S(2) * m.trace();
}

/// eps_nmk with eps_123 = +1; zero on repeated indices.
inline int epsilon(int n, int m, int k) {
  if (n == m || m == k || n == k) return 0;
  const bool even = (n == 1 && m == 2 && k == 3) || (n == 2 && m == 3 && k == 1) ||
                    (n == 3 && m == 1 && k == 2);
  return even ? 1 : -1;
}

/// Real 3-vector of su(2) components; A = c[n-1] * Tn summed over n.
struct AlgebraElement {
  std::array<double, 3> c{0.0, 0.0, 0.0};

  AlgebraElement() = default;
  AlgebraElement(double c1, double c2, double c3) : c{c1, c2, c3} {}

  MatrixC to_matrix() const {
    MatrixC m;
    for (int n = 1; n <= 3; ++n) {
      m = m + std::complex<double>(c[n - 1]) * basis_element<std::complex<double>>(n);
    }
    return m;
  }

  double norm() const { return std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]); }

  friend AlgebraElement operator*(double s, const AlgebraElement& a) {
    return {s * a.c[0], s * a.c[1], s * a.c[2]};
  }
  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    return {a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2]};
  }
};

/// Floating 2x2 unitary with unit determinant (validated to tolerance by
/// make_group_point; plain aggregate so integrators can fill it directly).
struct GroupPoint {
  MatrixC m = MatrixC::identity();
};

struct ValidationReport {
  enum class Kind { SU2, su2_algebra, neither };
  Kind kind = Kind::neither;
  double unitarity_residual = 0.0;   // max |(g†g - I)_ij|
  double det_residual = 0.0;         // |det g - 1|
  double anti_hermiticity_residual = 0.0;  // max |(g† + g)_ij|
  double trace_residual = 0.0;       // |tr g|

  std::string kind_name() const {
    switch (kind) {
      case Kind::SU2: return "SU2";
      case Kind::su2_algebra: return "su2_algebra";
      default: return "neither";
    }
  }
};

inline double max_abs_entry(const MatrixC& m) {
  double r = 0.0;
  for (const auto& z : m.e) r = std::max(r, std::abs(z));
  return r;
}

/// Classifies a floating matrix. Anti-hermitian traceless wins over unitary
/// det-1 (the basis matrices belong to both sets and count as algebra).
inline ValidationReport validate_group_point(const MatrixC& m, double tol = kDefaultTolerance) {
  ValidationReport rep;
  rep.unitarity_residual = max_abs_entry(adjoint(m) * m - MatrixC::identity());
  rep.det_residual = std::abs(m.det() - std::complex<double>(1.0));
  rep.anti_hermiticity_residual = max_abs_entry(adjoint(m) + m);
  rep.trace_residual = std::abs(m.trace());
  if (rep.anti_hermiticity_residual <= tol && rep.trace_residual <= tol) {
    rep.kind = ValidationReport::Kind::su2_algebra;
  } else if (rep.unitarity_residual <= tol && rep.det_residual <= tol) {
    rep.kind = ValidationReport::Kind::SU2;
  } else {
    rep.kind = ValidationReport::Kind::neither;
  }
  return rep;
}

inline GroupPoint make_group_point(const MatrixC& m, double tol = kDefaultTolerance) {
  const ValidationReport rep = validate_group_point(m, tol);
  if (rep.unitarity_residual > tol || rep.det_residual > tol) {
    throw std::invalid_argument("matrix is not in SU(2): unitarity residual " +
                                std::to_string(rep.unitarity_residual) + ", det residual " +
                                std::to_string(rep.det_residual));
  }
  return GroupPoint{m};
}

/// A^n = <A Tn>; requires A anti-hermitian and traceless within tol.
inline AlgebraElement project_components(const MatrixC& a, double tol = kDefaultTolerance) {
  const ValidationReport rep = validate_group_point(a, tol);
  if (rep.anti_hermiticity_residual > tol || rep.trace_residual > tol) {
    throw std::invalid_argument("matrix is not in su(2): anti-hermiticity residual " +
                                std::to_string(rep.anti_hermiticity_residual));
  }
  AlgebraElement out;
  for (int n = 1; n <= 3; ++n) {
    out.c[n - 1] = normalized_trace(a * basis_element<std::complex<double>>(n)).real();
  }
  return out;
}

/// Exact projection for exact anti-hermitian traceless input.
inline std::array<Rational, 3> project_components_exact(const MatrixQ& a) {
  if (!(adjoint(a) == -a) || !(a.trace() == ComplexRational(0))) {
    throw std::invalid_argument("matrix is not exactly in su(2)");
  }
  std::array<Rational, 3> out;
  for (int n = 1; n <= 3; ++n) {
    const ComplexRational comp = normalized_trace(a * basis_element<ComplexRational>(n));
    out[n - 1] = comp.re;  // imaginary part vanishes for su(2) input
  }
  return out;
}

/// Closed-form exponential: exp(a^n Tn) = cos|a| I + sinc|a| a^n Tn, using
/// (a^n Tn)^2 = -|a|^2 I.  Series for sinc below the switchover to dodge the
/// sin(x)/x cancellation.
inline GroupPoint exp_su2(const AlgebraElement& a) {
  for (double v : a.c) {
    if (!std::isfinite(v)) throw std::invalid_argument("exp_su2: non-finite component");
  }
  const double r = a.norm();
  const double c = std::cos(r);
  double s;  // sin(r)/r
  if (r < 1e-4) {
    const double r2 = r * r;
    s = 1.0 - r2 / 6.0 + r2 * r2 / 120.0;
  } else {
    s = std::sin(r) / r;
  }
  const std::complex<double> i(0.0, 1.0);
  MatrixC m(c + i * (s * a.c[0]), s * a.c[1] + i * (s * a.c[2]),
            -s * a.c[1] + i * (s * a.c[2]), c - i * (s * a.c[0]));
  return GroupPoint{m};
}

}  // namespace su2kit
