#pragma once

#include <array>
#include <complex>

#include "su2kit/complex_rational.hpp"

namespace su2kit {

inline ComplexRational conj_of(const ComplexRational& z) { return z.conj(); }
inline std::complex<double> conj_of(const std::complex<double>& z) { return std::conj(z); }

template <typename S>
struct imaginary_unit;
template <>
struct imaginary_unit<ComplexRational> {
  static ComplexRational value() { return ComplexRational::i(); }
};
template <>
struct imaginary_unit<std::complex<double>> {
  static std::complex<double> value() { return {0.0, 1.0}; }
};

/// Dense 2x2 matrix over an exact or floating complex scalar. Value type;
/// every operation returns a fresh matrix.
template <typename S>
struct Matrix2 {
  std::array<S, 4> e{};  // row-major: e[0]=m11 e[1]=m12 e[2]=m21 e[3]=m22

  Matrix2() = default;
  Matrix2(S m11, S m12, S m21, S m22) : e{std::move(m11), std::move(m12), std::move(m21), std::move(m22)} {}

  static Matrix2 zero() { return {}; }
  static Matrix2 identity() { return {S(1), S(0), S(0), S(1)}; }

  S& at(int i, int j) { return e[2 * i + j]; }
  const S& at(int i, int j) const { return e[2 * i + j]; }

  S trace() const { return e[0] + e[3]; }
  S det() const { return e[0] * e[3] - e[1] * e[2]; }

  friend Matrix2 operator+(const Matrix2& a, const Matrix2& b) {
    return {a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2], a.e[3] + b.e[3]};
  }
  friend Matrix2 operator-(const Matrix2& a, const Matrix2& b) {
    return {a.e[0] - b.e[0], a.e[1] - b.e[1], a.e[2] - b.e[2], a.e[3] - b.e[3]};
  }
  friend Matrix2 operator-(const Matrix2& a) { return {-a.e[0], -a.e[1], -a.e[2], -a.e[3]}; }
  friend Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
    return {a.e[0] * b.e[0] + a.e[1] * b.e[2], a.e[0] * b.e[1] + a.e[1] * b.e[3],
            a.e[2] * b.e[0] + a.e[3] * b.e[2], a.e[2] * b.e[1] + a.e[3] * b.e[3]};
  }
  friend Matrix2 operator*(const S& s, const Matrix2& a) {
    return {s * a.e[0], s * a.e[1], s * a.e[2], s * a.e[3]};
  }
  friend bool operator==(const Matrix2& a, const Matrix2& b) { return a.e == b.e; }
};

template <typename S>
Matrix2<S> adjoint(const Matrix2<S>& m) {
  return {conj_of(m.e[0]), conj_of(m.e[2]), conj_of(m.e[1]), conj_of(m.e[3])};
}

template <typename S>
Matrix2<S> commutator(const Matrix2<S>& a, const Matrix2<S>& b) {
  return a * b - b * a;
}

using MatrixQ = Matrix2<ComplexRational>;        // exact entries
using MatrixC = Matrix2<std::complex<double>>;   // floating entries

inline MatrixC to_floating(const MatrixQ& m) {
  return {m.e[0].to_complex(), m.e[1].to_complex(), m.e[2].to_complex(), m.e[3].to_complex()};
}

}  // namespace su2kit
