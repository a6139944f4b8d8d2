#include <catch2/catch_amalgamated.hpp>

#include <su2kit/su2.hpp>

#include <cmath>
#include <random>

#include <su2kit/rng.hpp>

using namespace su2kit;

namespace {
MatrixQ T(int n) { return basis_element<ComplexRational>(n); }
}  // namespace

TEST_CASE("basis elements are traceless and orthonormal", "[core]") {
  for (int n = 1; n <= 3; ++n) {
    CHECK(T(n).trace().is_zero());
    for (int m = 1; m <= 3; ++m) {
      const ComplexRational expected = (n == m) ? ComplexRational(1) : ComplexRational(0);
      CHECK(normalized_trace(T(n) * T(m)) == expected);
    }
  }
  CHECK(normalized_trace(MatrixQ::identity()) == ComplexRational(-1));
  CHECK(normalized_trace(T(3)) == ComplexRational(0));
  CHECK_THROWS_AS(basis_element<ComplexRational>(0), std::out_of_range);
  CHECK_THROWS_AS(basis_element<ComplexRational>(4), std::out_of_range);
}

TEST_CASE("basis products and commutators close exactly", "[core]") {
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 3; ++m) {
      MatrixQ expected_product = MatrixQ::zero();
      if (n == m) expected_product = ComplexRational(-1) * MatrixQ::identity();
      MatrixQ expected_commutator = MatrixQ::zero();
      for (int k = 1; k <= 3; ++k) {
        const int e = epsilon(n, m, k);
        if (e != 0) {
          expected_product = expected_product + ComplexRational(e) * T(k);
          expected_commutator = expected_commutator + ComplexRational(2 * e) * T(k);
        }
      }
      CHECK(T(n) * T(m) == expected_product);
      CHECK(commutator(T(n), T(m)) == expected_commutator);
    }
  }
}

TEST_CASE("epsilon tensor is totally antisymmetric with eps(1,2,3)=1", "[core]") {
  CHECK(epsilon(1, 2, 3) == 1);
  CHECK(epsilon(2, 3, 1) == 1);
  CHECK(epsilon(3, 1, 2) == 1);
  CHECK(epsilon(2, 1, 3) == -1);
  CHECK(epsilon(1, 1, 3) == 0);
  CHECK(epsilon(3, 3, 3) == 0);
}

TEST_CASE("exact component projection inverts the basis expansion", "[core]") {
  const MatrixQ a = ComplexRational(2) * T(1) + ComplexRational(-3) * T(2) +
                    ComplexRational(Rational(5, 7)) * T(3);
  const std::array<Rational, 3> c = project_components_exact(a);
  CHECK(c[0] == Rational(2));
  CHECK(c[1] == Rational(-3));
  CHECK(c[2] == Rational(5, 7));
  MatrixQ back = MatrixQ::zero();
  for (int n = 1; n <= 3; ++n) back = back + ComplexRational(c[n - 1]) * T(n);
  CHECK(back == a);
}

TEST_CASE("group and algebra membership are classified with residuals", "[core]") {
  const ValidationReport id_report = validate_group_point(MatrixC::identity());
  CHECK(id_report.kind == ValidationReport::Kind::SU2);

  // The basis elements are unitary with det 1, but they are classified as
  // algebra elements first: traceless anti-hermitian wins.
  const ValidationReport t3_report = validate_group_point(to_floating(T(3)));
  CHECK(t3_report.kind == ValidationReport::Kind::su2_algebra);

  MatrixC junk = MatrixC::identity();
  junk.at(0, 1) = {0.5, 0.0};
  CHECK(validate_group_point(junk).kind == ValidationReport::Kind::neither);
  CHECK_THROWS_AS(make_group_point(junk), std::invalid_argument);
}

TEST_CASE("exponential map lands on the group and matches the closed form", "[core]") {
  const double pi = 4.0 * std::atan(1.0);

  SECTION("axis rotations") {
    const GroupPoint half_turn = exp_su2(AlgebraElement(0.0, 0.0, pi));
    const MatrixC minus_id = std::complex<double>(-1.0, 0.0) * MatrixC::identity();
    CHECK(max_abs_entry(half_turn.m - minus_id) < 1e-12);

    const GroupPoint full_turn = exp_su2(AlgebraElement(0.0, 0.0, 2.0 * pi));
    CHECK(max_abs_entry(full_turn.m - MatrixC::identity()) < 1e-12);

    const GroupPoint quarter = exp_su2(AlgebraElement(pi / 2.0, 0.0, 0.0));
    // cos(pi/2) I + sin(pi/2) T1 = T1
    CHECK(max_abs_entry(quarter.m - to_floating(T(1))) < 1e-12);
  }

  SECTION("identity at zero") {
    CHECK(max_abs_entry(exp_su2(AlgebraElement(0.0, 0.0, 0.0)).m - MatrixC::identity()) == 0.0);
  }

  SECTION("one-parameter group property") {
    const AlgebraElement a(0.3, -0.4, 0.12);
    const MatrixC once = exp_su2(a).m;
    const MatrixC twice = exp_su2(2.0 * a).m;
    CHECK(max_abs_entry(once * once - twice) < 1e-14);
  }

  SECTION("small-angle series branch agrees with the closed form") {
    // Scaled copies of one direction, straddling the series switchover.
    const AlgebraElement dir(0.6, 0.8, 0.0);
    for (const double s : {1e-3, 1e-5, 1e-7}) {
      const MatrixC small = exp_su2(s * dir).m;
      // First-order comparison: exp(sA) = I + sA + O(s^2).
      const MatrixC linear = MatrixC::identity() + (s * dir).to_matrix();
      CHECK(max_abs_entry(small - linear) < 2.0 * s * s);
      CHECK(validate_group_point(small).kind == ValidationReport::Kind::SU2);
    }
  }

  SECTION("random exponentials pass group validation") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
      const AlgebraElement a(uniform_range(rng, -3.0, 3.0), uniform_range(rng, -3.0, 3.0),
                             uniform_range(rng, -3.0, 3.0));
      const GroupPoint g = exp_su2(a);
      const ValidationReport rep = validate_group_point(g.m);
      CHECK(rep.kind == ValidationReport::Kind::SU2);
    }
  }
}

TEST_CASE("floating component projection round-trips", "[core]") {
  const AlgebraElement a(0.25, -1.5, 2.0);
  const AlgebraElement c = project_components(a.to_matrix());
  CHECK(std::abs(c.c[0] - 0.25) < 1e-15);
  CHECK(std::abs(c.c[1] + 1.5) < 1e-15);
  CHECK(std::abs(c.c[2] - 2.0) < 1e-15);
  CHECK_THROWS_AS(project_components(MatrixC::identity()), std::invalid_argument);
}
