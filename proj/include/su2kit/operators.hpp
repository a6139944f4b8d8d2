#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "su2kit/group_polynomial.hpp"

namespace su2kit {

/// Derivation of the coordinate ring, determined by its values on the four
/// entry variables and extended by the Leibniz rule.  Invariant vector fields
/// send u -> (U*Tn) or (Tn*U) entrywise, which annihilate the det relation.
class Derivation {
 public:
  Derivation() = default;
  explicit Derivation(std::array<GroupPolynomial, 4> images) : images_(std::move(images)) {}

  const std::array<GroupPolynomial, 4>& images() const { return images_; }

  GroupPolynomial apply(const GroupPolynomial& p) const {
    GroupPolynomial out;
    for (const auto& [m, c] : p.terms()) {
      for (int k = 0; k < 4; ++k) {
        if (m.e[k] == 0) continue;
        EntryMonomial t = m;
        --t.e[k];
        out += GroupPolynomial::term(t, Rational(m.e[k]) * c) * images_[k];
      }
    }
    return out;
  }

 private:
  std::array<GroupPolynomial, 4> images_;
};

/// Infinitesimal right translation d/dt f(g e^{t Tn}): u -> (U*Tn) entrywise.
inline Derivation right_derivation(int n) {
  const MatrixQ t = basis_element<ComplexRational>(n);
  std::array<GroupPolynomial, 4> images;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      GroupPolynomial s;
      for (int k = 0; k < 2; ++k) {
        EntryMonomial m;
        m.e[2 * i + k] = 1;  // U_ik
        s += GroupPolynomial::term(m, t.at(k, j));
      }
      images[2 * i + j] = s;
    }
  }
  return Derivation(images);
}

/// Infinitesimal left translation d/dt f(e^{t Tm} g): u -> (Tm*U) entrywise.
inline Derivation left_derivation(int m) {
  const MatrixQ t = basis_element<ComplexRational>(m);
  std::array<GroupPolynomial, 4> images;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      GroupPolynomial s;
      for (int k = 0; k < 2; ++k) {
        EntryMonomial mono;
        mono.e[2 * k + j] = 1;  // U_kj
        s += GroupPolynomial::term(mono, t.at(i, k));
      }
      images[2 * i + j] = s;
    }
  }
  return Derivation(images);
}

/// Finite linear combination of compositions of derivations with exact
/// prefactors; the representation every operator identity is checked in.
class InvariantOperator {
 public:
  struct Term {
    ComplexRational coeff;
    std::vector<Derivation> factors;  // applied right-to-left (last first)
  };

  InvariantOperator() = default;
  InvariantOperator(std::string label, std::vector<Term> terms)
      : label_(std::move(label)), terms_(std::move(terms)) {}

  static InvariantOperator from_derivation(std::string label, Derivation d,
                                           const ComplexRational& coeff) {
    return InvariantOperator(std::move(label), {Term{coeff, {std::move(d)}}});
  }
  static InvariantOperator zero() { return InvariantOperator("0", {}); }

  const std::string& label() const { return label_; }
  InvariantOperator relabeled(std::string label) const {
    InvariantOperator copy = *this;
    copy.label_ = std::move(label);
    return copy;
  }

  GroupPolynomial apply(const GroupPolynomial& p) const {
    GroupPolynomial out;
    for (const auto& term : terms_) {
      GroupPolynomial q = p;
      for (auto it = term.factors.rbegin(); it != term.factors.rend(); ++it) {
        q = it->apply(q);
      }
      out += term.coeff * q;
    }
    return out;
  }

  friend InvariantOperator operator+(const InvariantOperator& a, const InvariantOperator& b) {
    std::vector<Term> terms = a.terms_;
    terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
    return InvariantOperator("(" + a.label_ + " + " + b.label_ + ")", std::move(terms));
  }
  friend InvariantOperator operator-(const InvariantOperator& a, const InvariantOperator& b) {
    return a + (ComplexRational(-1) * b);
  }
  friend InvariantOperator operator*(const ComplexRational& s, const InvariantOperator& a) {
    std::vector<Term> terms = a.terms_;
    for (auto& t : terms) t.coeff = s * t.coeff;
    return InvariantOperator(to_string(s) + "*" + a.label_, std::move(terms));
  }
  /// Composition; the right factor acts first.
  friend InvariantOperator operator*(const InvariantOperator& a, const InvariantOperator& b) {
    std::vector<Term> terms;
    terms.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_) {
      for (const auto& tb : b.terms_) {
        Term t;
        t.coeff = ta.coeff * tb.coeff;
        t.factors = ta.factors;
        t.factors.insert(t.factors.end(), tb.factors.begin(), tb.factors.end());
        terms.push_back(std::move(t));
      }
    }
    return InvariantOperator(a.label_ + "*" + b.label_, std::move(terms));
  }

 private:
  std::string label_;
  std::vector<Term> terms_;
};

inline InvariantOperator op_commutator(const InvariantOperator& a, const InvariantOperator& b) {
  return (a * b - b * a).relabeled("[" + a.label() + "," + b.label() + "]");
}

/// R_n = (i/2) * right-invariant derivation n.
inline InvariantOperator quantum_R(int n) {
  return InvariantOperator::from_derivation(
      "R" + std::to_string(n), right_derivation(n),
      ComplexRational(Rational(0), Rational(1, 2)));
}

/// L_m = -(i/2) * left-invariant derivation m.
inline InvariantOperator quantum_L(int m) {
  return InvariantOperator::from_derivation(
      "L" + std::to_string(m), left_derivation(m),
      ComplexRational(Rational(0), Rational(-1, 2)));
}

enum class LadderKind { R, L };
enum class LadderSign { plus, minus };

/// i*O_p +/- O_q with (p,q) the cyclic successors of the quantization axis;
/// for axis 3 this is the usual i*O_1 +/- O_2.
inline InvariantOperator ladder(LadderKind kind, LadderSign sign, int axis = 3) {
  if (axis < 1 || axis > 3) throw std::out_of_range("ladder: axis must be 1..3");
  const int p = axis % 3 + 1;
  const int q = p % 3 + 1;
  const auto gen = (kind == LadderKind::R) ? quantum_R : quantum_L;
  const ComplexRational s = (sign == LadderSign::plus) ? ComplexRational(1) : ComplexRational(-1);
  const char* base = (kind == LadderKind::R) ? "R" : "L";
  const char* sig = (sign == LadderSign::plus) ? "+" : "-";
  std::string label = std::string(base) + sig;
  if (axis != 3) label += "(axis " + std::to_string(axis) + ")";
  return (ComplexRational::i() * gen(p) + s * gen(q)).relabeled(std::move(label));
}

/// H = sum_n O_n O_n over the requested invariant family; the two families
/// agree as operators.
inline InvariantOperator hamiltonian(LadderKind kind = LadderKind::R) {
  const auto gen = (kind == LadderKind::R) ? quantum_R : quantum_L;
  InvariantOperator h = gen(1) * gen(1) + gen(2) * gen(2) + gen(3) * gen(3);
  return h.relabeled(kind == LadderKind::R ? "H" : "H(L)");
}

struct IdentityReport {
  std::string identity;
  int max_degree = 0;
  bool pass = false;
  std::optional<EntryMonomial> counterexample;  // first failing monomial, lex order
  GroupPolynomial counterexample_image;         // (lhs-rhs) applied to it
};

/// Applies lhs - rhs to every normal-form monomial of total degree up to
/// max_degree; exact zero everywhere is a proof for those degrees, since the
/// operators preserve degree.
inline IdentityReport verify_identity(const InvariantOperator& lhs, const InvariantOperator& rhs,
                                      int max_degree, std::string identity_label = "") {
  if (max_degree < 1) throw std::invalid_argument("verify_identity: max_degree must be >= 1");
  IdentityReport rep;
  rep.identity = identity_label.empty() ? lhs.label() + " == " + rhs.label()
                                        : std::move(identity_label);
  rep.max_degree = max_degree;
  rep.pass = true;
  const InvariantOperator diff = lhs - rhs;
  for (const EntryMonomial& m : canonical_monomials(max_degree)) {
    const GroupPolynomial image = diff.apply(GroupPolynomial::term(m, ComplexRational(1)));
    if (!image.is_zero()) {
      rep.pass = false;
      rep.counterexample = m;
      rep.counterexample_image = image;
      break;
    }
  }
  return rep;
}

/// If q == c*p for a single exact scalar c (p nonzero), returns c.
inline std::optional<ComplexRational> proportionality_constant(const GroupPolynomial& p,
                                                               const GroupPolynomial& q) {
  if (p.is_zero()) return std::nullopt;
  if (q.is_zero()) return ComplexRational(0);
  const auto& first = *p.terms().begin();
  const ComplexRational c = q.coeff(first.first) / first.second;
  return (q == c * p) ? std::optional<ComplexRational>(c) : std::nullopt;
}

/// Seed observable <T~ g> with T~ = (I + i*Ta)(I + i*Tb); simultaneous
/// eigenfunction of H, R_a, L_b.
inline GroupPolynomial seed_polynomial(int a = 3, int b = 3) {
  const MatrixQ i_ta = ComplexRational::i() * basis_element<ComplexRational>(a);
  const MatrixQ i_tb = ComplexRational::i() * basis_element<ComplexRational>(b);
  const MatrixQ t_tilde = (MatrixQ::identity() + i_ta) * (MatrixQ::identity() + i_tb);
  return trace_polynomial(t_tilde);
}

/// One-time audit fixing every sign the construction depends on: the seed's
/// exact (H, R_a, L_b) eigenvalues, which ladder raises which eigenvalue, and
/// which form of the H-in-ladders identity holds.  Computed, never assumed.
struct ConventionAudit {
  int axis_r = 3;
  int axis_l = 3;
  GroupPolynomial seed;
  Rational h_eigenvalue;   // expected 3/4
  Rational r_eigenvalue;   // expected +1/2
  Rational l_eigenvalue;   // sign is a result, modulus 1/2
  bool r_plus_raises = false;   // does R+ shift the R_a eigenvalue by +1?
  bool l_plus_raises = false;
  std::vector<std::pair<std::string, bool>> hamiltonian_variants;  // identity, holds
  std::vector<std::string> holding_variants() const {
    std::vector<std::string> v;
    for (const auto& [id, ok] : hamiltonian_variants) {
      if (ok) v.push_back(id);
    }
    return v;
  }
};

namespace detail {
inline Rational exact_real_eigenvalue(const InvariantOperator& op, const GroupPolynomial& f,
                                      const std::string& what) {
  const auto c = proportionality_constant(f, op.apply(f));
  if (!c || !c->is_real()) {
    throw std::logic_error("expected " + what + " to have an exact real eigenvalue on the seed");
  }
  return c->re;
}

/// True when `plus` shifts the axis-eigenvalue up by 1.  If `plus` kills the
/// state, the state sits at the end of the tower the operator moves toward.
inline bool ladder_raises(const InvariantOperator& plus, const InvariantOperator& axis_op,
                          const GroupPolynomial& f, const Rational& eig) {
  const GroupPolynomial image = plus.apply(f);
  if (image.is_zero()) return eig > 0;
  const auto shifted = proportionality_constant(image, axis_op.apply(image));
  if (!shifted || !shifted->is_real()) throw std::logic_error("ladder image is not an eigenstate");
  if (shifted->re == eig + 1) return true;
  if (shifted->re == eig - 1) return false;
  throw std::logic_error("ladder did not shift the eigenvalue by +/-1");
}
}  // namespace detail

inline ConventionAudit run_convention_audit(int a = 3, int b = 3, int max_degree = 3) {
  ConventionAudit audit;
  audit.axis_r = a;
  audit.axis_l = b;
  audit.seed = seed_polynomial(a, b);

  const InvariantOperator h = hamiltonian();
  const InvariantOperator ra = quantum_R(a);
  const InvariantOperator lb = quantum_L(b);
  audit.h_eigenvalue = detail::exact_real_eigenvalue(h, audit.seed, "H");
  audit.r_eigenvalue = detail::exact_real_eigenvalue(ra, audit.seed, "R_a");
  audit.l_eigenvalue = detail::exact_real_eigenvalue(lb, audit.seed, "L_b");

  audit.r_plus_raises = detail::ladder_raises(ladder(LadderKind::R, LadderSign::plus, a), ra,
                                              audit.seed, audit.r_eigenvalue);
  audit.l_plus_raises = detail::ladder_raises(ladder(LadderKind::L, LadderSign::plus, b), lb,
                                              audit.seed, audit.l_eigenvalue);

  const InvariantOperator rp = ladder(LadderKind::R, LadderSign::plus);
  const InvariantOperator rm = ladder(LadderKind::R, LadderSign::minus);
  const InvariantOperator r3 = quantum_R(3);
  const ComplexRational minus_one(-1);
  const std::vector<std::pair<std::string, InvariantOperator>> variants = {
      {"H == R+*R- + R3^2 + R3", rp * rm + r3 * r3 + r3},
      {"H == -R+*R- + R3^2 + R3", minus_one * (rp * rm) + r3 * r3 + r3},
      {"H == R-*R+ + R3^2 - R3", rm * rp + r3 * r3 - r3},
      {"H == -R-*R+ + R3^2 - R3", minus_one * (rm * rp) + r3 * r3 - r3},
  };
  for (const auto& [id, rhs] : variants) {
    audit.hamiltonian_variants.emplace_back(id, verify_identity(h, rhs, max_degree, id).pass);
  }
  return audit;
}

}  // namespace su2kit
