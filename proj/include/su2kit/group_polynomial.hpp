#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <complex>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "su2kit/su2.hpp"

namespace su2kit {

/// u11^a u12^b u21^c u22^d in the entry variables of the group element.
/// Canonical (normal-form) monomials never carry u11 and u22 together.
struct EntryMonomial {
  std::array<int, 4> e{0, 0, 0, 0};  // exponents of u11, u12, u21, u22

  int total_degree() const { return e[0] + e[1] + e[2] + e[3]; }
  bool canonical() const { return e[0] == 0 || e[3] == 0; }

  auto operator<=>(const EntryMonomial&) const = default;
};

inline std::string to_string(const EntryMonomial& m) {
  static const char* names[4] = {"u11", "u12", "u21", "u22"};
  std::string s;
  for (int k = 0; k < 4; ++k) {
    if (m.e[k] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[k];
    if (m.e[k] > 1) s += "^" + std::to_string(m.e[k]);
  }
  return s.empty() ? "1" : s;
}

/// Element of the coordinate ring of the group: polynomial in the four entry
/// variables modulo u11*u22 - u12*u21 = 1.  Always stored in normal form
/// (u11*u22 pairs rewritten away); the zero polynomial is the empty map.
class GroupPolynomial {
 public:
  using TermMap = std::map<EntryMonomial, ComplexRational>;

  GroupPolynomial() = default;

  static GroupPolynomial zero() { return {}; }
  static GroupPolynomial one() { return constant(ComplexRational(1)); }
  static GroupPolynomial constant(const ComplexRational& c) {
    GroupPolynomial p;
    p.add_term(EntryMonomial{}, c);
    return p;
  }
  /// k in 0..3 for u11, u12, u21, u22.
  static GroupPolynomial variable(int k) {
    if (k < 0 || k > 3) throw std::out_of_range("variable index must be 0..3");
    EntryMonomial m;
    m.e[k] = 1;
    GroupPolynomial p;
    p.add_term(m, ComplexRational(1));
    return p;
  }
  static GroupPolynomial term(const EntryMonomial& m, const ComplexRational& c) {
    GroupPolynomial p;
    p.add_term(m, c);
    return p;
  }
  static GroupPolynomial from_raw_terms(
      const std::vector<std::pair<EntryMonomial, ComplexRational>>& raw) {
    GroupPolynomial p;
    for (const auto& [m, c] : raw) p.add_term(m, c);
    return p;
  }

  /// Adds c * monomial, rewriting into normal form:
  /// u11^a u22^d = (1 + u12 u21)^k u11^(a-k) u22^(d-k) with k = min(a,d).
  void add_term(const EntryMonomial& m, const ComplexRational& c) {
    if (c.is_zero()) return;
    const int k = std::min(m.e[0], m.e[3]);
    if (k == 0) {
      accumulate(m, c);
      return;
    }
    for (int i = 0; i <= k; ++i) {
      EntryMonomial t;
      t.e = {m.e[0] - k, m.e[1] + i, m.e[2] + i, m.e[3] - k};
      accumulate(t, Rational(binomial_coefficient(k, i)) * c);
    }
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  int degree() const {  // 0 for the zero polynomial
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
  }

  ComplexRational coeff(const EntryMonomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? ComplexRational(0) : it->second;
  }

  GroupPolynomial& operator+=(const GroupPolynomial& o) {
    for (const auto& [m, c] : o.terms_) accumulate(m, c);
    return *this;
  }
  GroupPolynomial& operator-=(const GroupPolynomial& o) {
    for (const auto& [m, c] : o.terms_) accumulate(m, -c);
    return *this;
  }
  GroupPolynomial& operator*=(const ComplexRational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend GroupPolynomial operator+(GroupPolynomial a, const GroupPolynomial& b) { return a += b; }
  friend GroupPolynomial operator-(GroupPolynomial a, const GroupPolynomial& b) { return a -= b; }
  friend GroupPolynomial operator-(const GroupPolynomial& a) {
    GroupPolynomial p;
    for (const auto& [m, c] : a.terms_) p.terms_.emplace(m, -c);
    return p;
  }
  friend GroupPolynomial operator*(const ComplexRational& s, GroupPolynomial a) { return a *= s; }

  friend GroupPolynomial operator*(const GroupPolynomial& a, const GroupPolynomial& b) {
    GroupPolynomial p;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        EntryMonomial m;
        for (int k = 0; k < 4; ++k) m.e[k] = ma.e[k] + mb.e[k];
        p.add_term(m, ca * cb);
      }
    }
    return p;
  }

  GroupPolynomial pow(int n) const {
    if (n < 0) throw std::invalid_argument("pow: negative exponent");
    GroupPolynomial result = one();
    for (int k = 0; k < n; ++k) result = result * *this;
    return result;
  }

  friend bool operator==(const GroupPolynomial& a, const GroupPolynomial& b) {
    return a.terms_ == b.terms_;
  }

 private:
  void accumulate(const EntryMonomial& m, const ComplexRational& c) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    } else if (c.is_zero()) {
      terms_.erase(it);
    }
  }

  TermMap terms_;
};

/// Rebuilds through the rewrite rule; identity on canonical input (idempotent).
inline GroupPolynomial normalize(const GroupPolynomial& p) {
  GroupPolynomial out;
  for (const auto& [m, c] : p.terms()) out.add_term(m, c);
  return out;
}

/// Antilinear star operation induced by unitarity: conj(u11)=u22,
/// conj(u12)=-u21 and their swaps; star(star(P)) = P and star(PQ)=star(P)star(Q).
inline GroupPolynomial star(const GroupPolynomial& p) {
  GroupPolynomial out;
  for (const auto& [m, c] : p.terms()) {
    EntryMonomial t;
    t.e = {m.e[3], m.e[2], m.e[1], m.e[0]};
    const bool odd = ((m.e[1] + m.e[2]) % 2) != 0;
    out.add_term(t, odd ? -c.conj() : c.conj());
  }
  return out;
}

/// Substitutes floating entries; exact coefficients become floating at the end
/// of each term accumulation.
inline std::complex<double> evaluate(const GroupPolynomial& p, const GroupPoint& g) {
  std::complex<double> total = 0.0;
  const std::array<std::complex<double>, 4> u = {g.m.at(0, 0), g.m.at(0, 1), g.m.at(1, 0),
                                                 g.m.at(1, 1)};
  for (const auto& [m, c] : p.terms()) {
    std::complex<double> v = 1.0;
    for (int k = 0; k < 4; ++k) {
      for (int j = 0; j < m.e[k]; ++j) v *= u[k];
    }
    total += c.to_complex() * v;
  }
  return total;
}

/// Exact evaluation at a matrix with exact entries.
inline ComplexRational evaluate_exact(const GroupPolynomial& p, const MatrixQ& g) {
  ComplexRational total(0);
  const std::array<ComplexRational, 4> u = {g.at(0, 0), g.at(0, 1), g.at(1, 0), g.at(1, 1)};
  for (const auto& [m, c] : p.terms()) {
    ComplexRational v(1);
    for (int k = 0; k < 4; ++k) {
      for (int j = 0; j < m.e[k]; ++j) v *= u[k];
    }
    total += c * v;
  }
  return total;
}

/// <M g> = -1/2 sum_ij M_ji u_ij as a degree-1 polynomial.
inline GroupPolynomial trace_polynomial(const MatrixQ& m) {
  const Rational minus_half(-1, 2);
  GroupPolynomial p;
  EntryMonomial mono;
  // (M U)_ii = sum_j M_ij U_ji; variables indexed u11,u12,u21,u22 = U_11,U_12,U_21,U_22
  const int var_index[2][2] = {{0, 1}, {2, 3}};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      EntryMonomial t;
      t.e[var_index[j][i]] = 1;  // U_ji
      p.add_term(t, minus_half * m.at(i, j));
    }
  }
  return p;
}

/// Applies the ring homomorphism u_k -> images[k] (for entry substitution by
/// exact group elements: translations, gauge transformations).
inline GroupPolynomial substitute(const GroupPolynomial& p,
                                  const std::array<GroupPolynomial, 4>& images) {
  GroupPolynomial out;
  for (const auto& [m, c] : p.terms()) {
    GroupPolynomial v = GroupPolynomial::constant(c);
    for (int k = 0; k < 4; ++k) {
      for (int j = 0; j < m.e[k]; ++j) v = v * images[k];
    }
    out += v;
  }
  return out;
}

inline std::array<GroupPolynomial, 4> entry_images(const MatrixQ& left, const MatrixQ& right) {
  // images of U under U -> left * U * right, entry by entry
  std::array<std::array<GroupPolynomial, 2>, 2> uvar;
  uvar[0][0] = GroupPolynomial::variable(0);
  uvar[0][1] = GroupPolynomial::variable(1);
  uvar[1][0] = GroupPolynomial::variable(2);
  uvar[1][1] = GroupPolynomial::variable(3);
  std::array<GroupPolynomial, 4> images;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      GroupPolynomial s;
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          s += left.at(i, k) * (right.at(l, j) * uvar[k][l]);
        }
      }
      images[2 * i + j] = s;
    }
  }
  return images;
}

/// (P o left-translation by h)(g) = P(h g).
inline GroupPolynomial left_translate(const GroupPolynomial& p, const MatrixQ& h) {
  return substitute(p, entry_images(h, MatrixQ::identity()));
}

/// (P o right-translation by h)(g) = P(g h).
inline GroupPolynomial right_translate(const GroupPolynomial& p, const MatrixQ& h) {
  return substitute(p, entry_images(MatrixQ::identity(), h));
}

/// All normal-form monomials of total degree <= max_degree, ascending lex
/// order on (a,b,c,d).  There are (n+1)^2 of each total degree n.
inline std::vector<EntryMonomial> canonical_monomials(int max_degree) {
  std::vector<EntryMonomial> out;
  for (int a = 0; a <= max_degree; ++a) {
    for (int b = 0; a + b <= max_degree; ++b) {
      for (int c = 0; a + b + c <= max_degree; ++c) {
        for (int d = 0; a + b + c + d <= max_degree; ++d) {
          if (a > 0 && d > 0) continue;
          EntryMonomial m;
          m.e = {a, b, c, d};
          out.push_back(m);
        }
      }
    }
  }
  return out;
}

inline std::string to_string(const GroupPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : p.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + to_string(c) + ")*" + to_string(m);
  }
  return s;
}

}  // namespace su2kit
