#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace su2kit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Lowest-terms fraction string: "3/2", "-1/4", integers without denominator.
inline std::string to_fraction_string(const Rational& r) { return r.str(); }

/// Parses "p/q" or a bare integer. Throws std::invalid_argument on junk.
inline Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    const BigInt num(s.substr(0, slash));
    const BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Exact Gaussian-rational scalar a + b*i. The coefficient field for all
/// symbolic work in this library; no operation ever rounds.
struct ComplexRational {
  Rational re{0};
  Rational im{0};

  ComplexRational() = default;
  ComplexRational(int v) : re(v) {}  // NOLINT: implicit by design, like int->complex
  explicit ComplexRational(Rational r) : re(std::move(r)) {}
  ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static ComplexRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  ComplexRational conj() const { return {re, -im}; }
  Rational norm_squared() const { return re * re + im * im; }

  std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }

  friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }
  friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexRational operator/(const ComplexRational& a, const ComplexRational& b) {
    const Rational n = b.norm_squared();
    if (n == 0) throw std::domain_error("division by zero ComplexRational");
    const ComplexRational num = a * b.conj();
    return {num.re / n, num.im / n};
  }
  ComplexRational& operator+=(const ComplexRational& o) { return *this = *this + o; }
  ComplexRational& operator-=(const ComplexRational& o) { return *this = *this - o; }
  ComplexRational& operator*=(const ComplexRational& o) { return *this = *this * o; }

  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const ComplexRational& a, const ComplexRational& b) { return !(a == b); }
};

inline ComplexRational operator*(const Rational& s, const ComplexRational& a) {
  return {s * a.re, s * a.im};
}

/// Human-readable form "re+im*i" with exact fractions; for logs and errors.
inline std::string to_string(const ComplexRational& z) {
  if (z.im == 0) return to_fraction_string(z.re);
  std::string s = (z.re == 0) ? "" : to_fraction_string(z.re);
  if (z.im > 0 && !s.empty()) s += "+";
  s += to_fraction_string(z.im) + "i";
  return s;
}

inline BigInt binomial_coefficient(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt result = 1;
  for (int j = 1; j <= k; ++j) {
    result = result * (n - k + j) / j;
  }
  return result;
}

inline BigInt factorial(int n) {
  BigInt result = 1;
  for (int j = 2; j <= n; ++j) result *= j;
  return result;
}

}  // namespace su2kit
