#include <catch2/catch_amalgamated.hpp>

#include <su2kit/coset.hpp>

using namespace su2kit;

TEST_CASE("gauge-invariant coordinates square to one in the ring", "[coset]") {
  const auto x = gauge_invariant_coords();
  GroupPolynomial sum;
  for (int a = 0; a < 3; ++a) sum += x[a] * x[a];
  CHECK(sum == GroupPolynomial::one());
  for (int a = 0; a < 3; ++a) CHECK(x[a].degree() == 2);
}

TEST_CASE("coordinates at exact group elements", "[coset]") {
  const auto x = gauge_invariant_coords();
  const MatrixQ id = MatrixQ::identity();
  CHECK(evaluate_exact(x[0], id) == ComplexRational(0));
  CHECK(evaluate_exact(x[1], id) == ComplexRational(0));
  CHECK(evaluate_exact(x[2], id) == ComplexRational(1));

  // Conjugating the axis by T2 flips the pole.
  const MatrixQ t2 = basis_element<ComplexRational>(2);
  CHECK(evaluate_exact(x[0], t2) == ComplexRational(0));
  CHECK(evaluate_exact(x[1], t2) == ComplexRational(0));
  CHECK(evaluate_exact(x[2], t2) == ComplexRational(-1));
}

TEST_CASE("coordinates are invariant under the stabilizer only", "[coset]") {
  const auto x = gauge_invariant_coords();
  // T3 generates the stabilizer circle: left translation by it fixes each
  // coordinate exactly.
  const MatrixQ t3 = basis_element<ComplexRational>(3);
  for (int a = 0; a < 3; ++a) {
    CHECK(left_translate(x[a], t3) == x[a]);
  }
  // A transverse direction moves the point.
  const MatrixQ t1 = basis_element<ComplexRational>(1);
  CHECK_FALSE(left_translate(x[2], t1) == x[2]);
}

TEST_CASE("sphere-ring arithmetic eliminates high poles", "[coset]") {
  InvariantPolynomial p;
  p.add_term({0, 0, 2}, ComplexRational(1));
  InvariantPolynomial expected;
  expected.add_term({0, 0, 0}, ComplexRational(1));
  expected.add_term({2, 0, 0}, ComplexRational(-1));
  expected.add_term({0, 2, 0}, ComplexRational(-1));
  CHECK(p == expected);

  // x3 * x3 built by multiplication lands in the same normal form.
  InvariantPolynomial x3;
  x3.add_term({0, 0, 1}, ComplexRational(1));
  CHECK(x3 * x3 == expected);
  CHECK((x3 * x3).degree() == 2);
  CHECK(InvariantPolynomial().is_zero());
}

TEST_CASE("the l=0 spin-1 state is a multiple of x3", "[coset]") {
  const Eigenfunction psi = build_eigenfunction(SpinLabel{2, 0, 0});
  const InvariantPolynomial a = rewrite_in_sphere_coords(psi);
  InvariantPolynomial expected;
  expected.add_term({0, 0, 1}, ComplexRational(8));
  CHECK(a == expected);

  CHECK_THROWS_AS(rewrite_in_sphere_coords(build_eigenfunction(SpinLabel{2, 2, 0})),
                  std::invalid_argument);
}

TEST_CASE("Legendre coefficient rows", "[coset]") {
  CHECK(legendre_coefficients(0) == std::vector<Rational>{Rational(1)});
  CHECK(legendre_coefficients(1) == std::vector<Rational>{Rational(0), Rational(1)});
  CHECK(legendre_coefficients(2) ==
        std::vector<Rational>{Rational(-1, 2), Rational(0), Rational(3, 2)});
  CHECK(legendre_coefficients(3) ==
        std::vector<Rational>{Rational(0), Rational(-3, 2), Rational(0), Rational(5, 2)});
}

TEST_CASE("solid-harmonic oracle in low degree", "[coset]") {
  // S_1^{+1} = x1 + i x2, S_1^{-1} = x1 - i x2, S_2^{+1} = 3 x3 (x1 + i x2).
  InvariantPolynomial s11;
  s11.add_term({1, 0, 0}, ComplexRational(1));
  s11.add_term({0, 1, 0}, ComplexRational(0, 1));
  CHECK(solid_harmonic(1, 1) == s11);

  InvariantPolynomial s1m1;
  s1m1.add_term({1, 0, 0}, ComplexRational(1));
  s1m1.add_term({0, 1, 0}, ComplexRational(0, -1));
  CHECK(solid_harmonic(1, -1) == s1m1);

  InvariantPolynomial s21;
  s21.add_term({1, 0, 1}, ComplexRational(3));
  s21.add_term({0, 1, 1}, ComplexRational(0, 3));
  CHECK(solid_harmonic(2, 1) == s21);

  CHECK_THROWS_AS(solid_harmonic(1, 2), std::out_of_range);
}

TEST_CASE("constraint filter keeps exactly the integer-j l=0 tower", "[coset]") {
  const ConstraintFilterReport rep = constraint_filter(6);
  CHECK(rep.labels_checked == 140);
  CHECK(rep.verified);
  REQUIRE(rep.survivors.size() == 16);
  for (const SpinLabel& s : rep.survivors) {
    CHECK(s.two_l == 0);
    CHECK(s.two_j % 2 == 0);
  }

  const ConstraintFilterReport rep4 = constraint_filter(4);
  CHECK(rep4.labels_checked == 55);
  CHECK(rep4.survivors.size() == 9);
  CHECK(rep4.verified);
}

TEST_CASE("survivors match solid harmonics with exact constants", "[coset]") {
  struct Row {
    int j, r;
    ComplexRational c;
  };
  const Row table[] = {
      {0, 0, ComplexRational(1)},
      {1, -1, ComplexRational(0, 8)},
      {1, 0, ComplexRational(8)},
      {1, 1, ComplexRational(0, 4)},
      {2, -2, ComplexRational(-384)},
      {2, -1, ComplexRational(0, 384)},
      {2, 0, ComplexRational(384)},
      {2, 1, ComplexRational(0, 64)},
      {2, 2, ComplexRational(-16)},
      {3, -3, ComplexRational(0, -46080)},
      {3, -2, ComplexRational(-46080)},
      {3, -1, ComplexRational(0, 46080)},
      {3, 0, ComplexRational(46080)},
      {3, 1, ComplexRational(0, 3840)},
      {3, 2, ComplexRational(-384)},
      {3, 3, ComplexRational(0, -64)},
  };
  for (const Row& row : table) {
    const MatchReport rep = spherical_harmonic_match(row.j, row.r);
    INFO("j = " << row.j << ", r = " << row.r);
    CHECK(rep.proportional);
    REQUIRE(rep.matched_m.has_value());
    CHECK(rep.constant == row.c);
  }
  CHECK_THROWS_AS(spherical_harmonic_match(1, 2), std::out_of_range);
}

TEST_CASE("reduction of a stabilizer orbit is a fixed point", "[coset]") {
  const GroupPoint id{MatrixC::identity()};
  const Trajectory traj =
      integrate(id, AlgebraElement(0.0, 0.0, 0.7), 1e-2, 500, IntegrationMethod::exact);
  const ReducedTrajectory red = reduced_trajectory(traj);
  REQUIRE(red.x.size() == traj.states.size());
  for (const auto& v : red.x) {
    CHECK(std::abs(v[0]) < 1e-13);
    CHECK(std::abs(v[1]) < 1e-13);
    CHECK(std::abs(v[2] - 1.0) < 1e-13);
  }
  // The connection term records the full angular speed with opposite sign.
  const std::vector<double> b = gauge_field(traj);
  for (const double bv : b) CHECK(bv == Catch::Approx(-0.7).margin(1e-12));
}

TEST_CASE("generic reduced trajectory stays on the sphere at constant speed", "[coset]") {
  const GroupPoint g0 = exp_su2(AlgebraElement(0.3, -0.2, 0.5));
  const AlgebraElement r(0.4, 0.3, -0.6);
  const Trajectory traj = integrate(g0, r, 1e-3, 2000, IntegrationMethod::exact);
  const ReducedTrajectory red = reduced_trajectory(traj);
  CHECK(red.max_norm_residual < 1e-12);
  CHECK(red.max_imag_residual < 1e-12);
  CHECK(red.ke_relative_variation < 1e-6);
  REQUIRE(red.kinetic_energy.size() == red.x.size() - 2);
}

TEST_CASE("reduction input gates", "[coset]") {
  const GroupPoint id{MatrixC::identity()};
  Trajectory tiny;
  tiny.times = {0.0, 0.1};
  tiny.states = {ClassicalState{id, AlgebraElement(0, 0, 1)},
                 ClassicalState{id, AlgebraElement(0, 0, 1)}};
  CHECK_THROWS_AS(reduced_trajectory(tiny), std::invalid_argument);

  Trajectory empty;
  CHECK_THROWS_AS(gauge_field(empty), std::invalid_argument);
}
