#include <catch2/catch_amalgamated.hpp>

#include <su2kit/operators.hpp>
#include <su2kit/suites.hpp>

#include <random>

using namespace su2kit;

namespace {

GroupPolynomial entry(int a, int b, int c, int d) {
  EntryMonomial m;
  m.e = {a, b, c, d};
  return GroupPolynomial::term(m, ComplexRational(1));
}

GroupPolynomial random_polynomial(std::mt19937_64& rng, int terms, int max_exp) {
  GroupPolynomial p;
  for (int t = 0; t < terms; ++t) {
    EntryMonomial m;
    for (int k = 0; k < 4; ++k) {
      m.e[k] = static_cast<int>(rng() % static_cast<std::uint64_t>(max_exp + 1));
    }
    const auto num = static_cast<long long>(rng() % 19) - 9;
    p.add_term(m, ComplexRational(Rational(num, 2), Rational(static_cast<long long>(rng() % 5))));
  }
  return p;
}

}  // namespace

TEST_CASE("derivation images on single entries", "[operators]") {
  const GroupPolynomial u11 = entry(1, 0, 0, 0);
  const GroupPolynomial u12 = entry(0, 1, 0, 0);
  const GroupPolynomial u21 = entry(0, 0, 1, 0);
  const ComplexRational i = ComplexRational::i();

  // Right translations multiply the matrix of entries on the right by a basis
  // element; left translations multiply on the left.
  CHECK(right_derivation(3).apply(u11) == i * u12);
  CHECK(right_derivation(1).apply(u11) == i * u11);
  CHECK(left_derivation(3).apply(u11) == i * u21);
  CHECK(left_derivation(2).apply(u11) == u21);

  // Derivations kill constants.
  CHECK(right_derivation(2).apply(GroupPolynomial::one()).is_zero());
  CHECK(left_derivation(1).apply(GroupPolynomial::one()).is_zero());
}

TEST_CASE("derivations satisfy the Leibniz rule", "[operators]") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 12; ++trial) {
    const GroupPolynomial p = random_polynomial(rng, 4, 2);
    const GroupPolynomial q = random_polynomial(rng, 4, 2);
    for (int n = 1; n <= 3; ++n) {
      const Derivation dr = right_derivation(n);
      CHECK(dr.apply(p * q) == dr.apply(p) * q + p * dr.apply(q));
      const Derivation dl = left_derivation(n);
      CHECK(dl.apply(p * q) == dl.apply(p) * q + p * dl.apply(q));
    }
  }
}

TEST_CASE("generator commutators close with structure constant i", "[operators]") {
  const std::vector<IdentityReport> reports = commutator_suite(4);
  REQUIRE(reports.size() == 15);
  for (const IdentityReport& r : reports) {
    INFO(r.identity);
    CHECK(r.pass);
    CHECK_FALSE(r.counterexample.has_value());
  }
}

TEST_CASE("failed identities carry a counterexample monomial", "[operators]") {
  const IdentityReport bad =
      verify_identity(quantum_R(1), quantum_R(2), 2, "R1 == R2 (false)");
  CHECK_FALSE(bad.pass);
  REQUIRE(bad.counterexample.has_value());
  // The recorded monomial must actually separate the two operators.
  const GroupPolynomial probe = GroupPolynomial::term(*bad.counterexample, ComplexRational(1));
  CHECK_FALSE(quantum_R(1).apply(probe) == quantum_R(2).apply(probe));

  CHECK_THROWS_AS(verify_identity(quantum_R(1), quantum_R(1), 0, "degree gate"),
                  std::invalid_argument);
}

TEST_CASE("ladder suite holds with the computed sign conventions", "[operators]") {
  const LadderSuiteResult res = ladder_suite(4);
  CHECK(res.pass);
  REQUIRE(res.fixed.size() == 7);
  for (const IdentityReport& r : res.fixed) {
    INFO(r.identity);
    CHECK(r.pass);
  }

  // For each signed pair, exactly one variant holds; with this basis the
  // surviving forms are [R3,R+] == -R+, [R3,R-] == R-, and likewise for L.
  REQUIRE(res.signed_variants.size() == 8);
  const std::array<bool, 8> expected = {false, true, true, false, false, true, true, false};
  for (std::size_t k = 0; k < 8; ++k) {
    INFO(res.signed_variants[k].identity);
    CHECK(res.signed_variants[k].pass == expected[k]);
  }
}

TEST_CASE("convention audit fixes every sign from computation", "[operators]") {
  const ConventionAudit audit = run_convention_audit(3, 3, 3);
  CHECK(audit.h_eigenvalue == Rational(3, 4));
  CHECK(audit.r_eigenvalue == Rational(1, 2));
  CHECK(audit.l_eigenvalue == Rational(-1, 2));
  CHECK_FALSE(audit.r_plus_raises);
  CHECK_FALSE(audit.l_plus_raises);

  const std::vector<std::string> holding = audit.holding_variants();
  REQUIRE(holding.size() == 2);
  CHECK(holding[0] == "H == -R+*R- + R3^2 + R3");
  CHECK(holding[1] == "H == -R-*R+ + R3^2 - R3");
}

TEST_CASE("audit results are axis-independent where they must be", "[operators]") {
  for (const auto& [a, b] : {std::pair{1, 1}, std::pair{2, 3}}) {
    const ConventionAudit audit = run_convention_audit(a, b, 2);
    INFO("axes (" << a << "," << b << ")");
    CHECK(audit.h_eigenvalue == Rational(3, 4));
    CHECK(abs(audit.r_eigenvalue) == Rational(1, 2));
    CHECK(abs(audit.l_eigenvalue) == Rational(1, 2));
  }
}

TEST_CASE("the Casimir acts by j(j+1) on seed powers", "[operators]") {
  const InvariantOperator h = hamiltonian();
  const GroupPolynomial seed = seed_polynomial();
  const GroupPolynomial seed2 = seed * seed;

  CHECK(h.apply(GroupPolynomial::one()).is_zero());
  CHECK(h.apply(seed) == ComplexRational(Rational(3, 4)) * seed);
  CHECK(h.apply(seed2) == ComplexRational(2) * seed2);

  const auto c = proportionality_constant(seed2, h.apply(seed2));
  REQUIRE(c.has_value());
  CHECK(*c == ComplexRational(2));
}

TEST_CASE("operator arithmetic behaves linearly", "[operators]") {
  const InvariantOperator r1 = quantum_R(1);
  const InvariantOperator r2 = quantum_R(2);
  const GroupPolynomial seed = seed_polynomial();

  const InvariantOperator sum = r1 + r2;
  CHECK(sum.apply(seed) == r1.apply(seed) + r2.apply(seed));
  const InvariantOperator scaled = ComplexRational(Rational(2, 3)) * r1;
  CHECK(scaled.apply(seed) == ComplexRational(Rational(2, 3)) * r1.apply(seed));
  const InvariantOperator diff = r1 - r1;
  CHECK(diff.apply(seed).is_zero());

  CHECK(InvariantOperator::zero().apply(seed).is_zero());
  CHECK(quantum_R(3).relabeled("axis").label() == "axis");
}

TEST_CASE("basis matrix identities hold exactly", "[operators]") {
  const MatrixAlgebraReport rep = matrix_algebra_check();
  CHECK(rep.trace_orthonormal);
  CHECK(rep.products);
  CHECK(rep.commutators);
  CHECK(rep.pass);
}
