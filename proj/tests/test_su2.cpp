#include <catch2/catch_amalgamated.hpp>

#include "aeslab/su2_aes.hpp"

using namespace aeslab;

TEST_CASE("ladder-combination eigenpairs satisfy the eigen-equation") {
  const Su2Coeffs c{Complex{0.6, 0.3}, Complex{-0.4, 0.8}, Complex{0.9, -0.2}};
  for (int two_j : {1, 2, 3, 5}) {
    const Eigen::MatrixXcd m = su2_matrix(two_j, c);
    const Su2Solution sol = su2_aes_solve(two_j, c);
    REQUIRE_FALSE(sol.degenerate);
    REQUIRE(static_cast<int>(sol.pairs.size()) == two_j + 1);
    for (const auto& p : sol.pairs) {
      CHECK(std::abs(p.eigenvalue - (p.two_m / 2.0) * sol.b) < 1e-13);
      const Eigen::VectorXcd r = m * p.state.coeffs - p.eigenvalue * p.state.coeffs;
      CHECK(r.norm() < 1e-11 * m.cwiseAbs().maxCoeff());
    }
  }
}

TEST_CASE("triangular coefficient triples diagonalize along J3") {
  const Su2Coeffs c{Complex{0.0}, Complex{0.7, 0.1}, Complex{1.3, 0.4}};
  const Eigen::MatrixXcd m = su2_matrix(4, c);
  const Su2Solution sol = su2_aes_solve(4, c);
  for (const auto& p : sol.pairs) {
    CHECK(std::abs(p.eigenvalue - (p.two_m / 2.0) * c.c_j3) < 1e-12);
    CHECK((m * p.state.coeffs - p.eigenvalue * p.state.coeffs).norm() < 1e-11);
  }
}

TEST_CASE("closed Jacobi eigenvector matches the exponential route") {
  const Su2Coeffs c{Complex{0.5, -0.7}, Complex{1.1, 0.2}, Complex{-0.3, 0.6}};
  for (int two_j : {1, 2, 4}) {
    const Su2Solution sol = su2_aes_solve(two_j, c);
    for (const auto& p : sol.pairs) {
      JointState jac = detail::spin_state_from_vector(two_j, su2_eigvec_jacobi(two_j, c, p.two_m));
      CHECK(1.0 - overlap(jac, p.state) < 1e-11);
    }
  }
  // spin one-half: component ratio is (b + c_j3) / (2 c_jminus)
  const Complex b = su2_discriminant_root(c);
  const Eigen::VectorXcd v = su2_eigvec_jacobi(1, c, 1);
  const SpaceSpec half(1, 1);
  const Complex ratio = v(half.index(0, 1)) / v(half.index(0, -1));
  const Complex want = (b + c.c_j3) / (2.0 * c.c_jminus);
  CHECK(std::abs(ratio - want) < 1e-12 * std::abs(want));
}

TEST_CASE("vanishing discriminant root is flagged degenerate") {
  // 4 c+ c- + c3^2 = 0 at {1, -1, 2}
  const Su2Coeffs c{Complex{1.0}, Complex{-1.0}, Complex{2.0}};
  CHECK(std::abs(su2_discriminant_root(c)) < 1e-12);
  for (int two_j : {1, 2, 3}) {
    const Su2Solution sol = su2_aes_solve(two_j, c);
    CHECK(sol.degenerate);
    REQUIRE(sol.pairs.size() == 1);
    const Eigen::MatrixXcd m = su2_matrix(two_j, c);
    CHECK((m * sol.pairs[0].state.coeffs).norm() < 1e-11 * m.norm());
  }
  CHECK_THROWS_AS(su2_eigvec_jacobi(2, c, 0), std::invalid_argument);
  CHECK_THROWS_AS(su2_aes_solve(2, Su2Coeffs{}), std::invalid_argument);
}

TEST_CASE("dispersion scale has the right anchors") {
  // spin one-half closed value 1 / (4 (1 + delta)^2)
  for (double delta : {0.1, 0.5, 1.0, 2.0}) {
    CHECK(spin_dispersion_scale(1, 1, delta) ==
          Catch::Approx(1.0 / (4.0 * (1.0 + delta) * (1.0 + delta))).epsilon(1e-12));
    CHECK(spin_dispersion_scale(1, -1, delta) ==
          Catch::Approx(1.0 / (4.0 * (1.0 + delta) * (1.0 + delta))).epsilon(1e-12));
  }
  CHECK(spin_dispersion_scale(3, 3, 0.0) == Catch::Approx(0.75));  // j / 2 at the coherent point
  // delta = 1 collapses to [j(j+1) - m^2] / 8
  for (int two_j : {2, 3, 4, 6}) {
    for (int two_m = -two_j; two_m <= two_j; two_m += 2) {
      const double j = two_j / 2.0, m = two_m / 2.0;
      CHECK(spin_dispersion_scale(two_j, two_m, 1.0) ==
            Catch::Approx((j * (j + 1.0) - m * m) / 8.0).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(spin_dispersion_scale(2, 0, -0.3), std::invalid_argument);
}

TEST_CASE("mean J3 tracks the numerical expectation on both sides of 1") {
  for (int two_j : {1, 2, 3, 5}) {
    for (int two_m = -two_j; two_m <= two_j; two_m += 2) {
      for (double delta : {0.3, 0.8, 1.0, 1.7}) {
        const Su2MusState s = su2_mus_state(two_j, two_m, delta, 0.7);
        const Operators ops = build_ops(s.state.spec);
        const double num = std::real(expectation(ops.j3, s.state));
        CHECK(num == Catch::Approx(su2_mean_j3(two_j, two_m, delta)).margin(1e-11));
      }
    }
  }
}

TEST_CASE("closed angular moments match the constructed state") {
  for (int two_j : {1, 2, 4}) {
    for (int two_m = -two_j; two_m <= two_j; two_m += 2) {
      for (double delta : {0.4, 0.999999, 1.000001, 1.9}) {
        const double phi = pi / 6.0;
        const Su2MusState s = su2_mus_state(two_j, two_m, delta, phi);
        const Operators ops = build_ops(s.state.spec);
        const DispersionReport num = srur_report(j1_op(ops), j2_op(ops), s.state);
        const DispersionReport pred = su2_closed_form(two_j, two_m, delta, phi);
        CHECK(num.mean_a == Catch::Approx(pred.mean_a).margin(1e-9));
        CHECK(num.mean_b == Catch::Approx(pred.mean_b).margin(1e-9));
        CHECK(num.var_a == Catch::Approx(pred.var_a).margin(1e-9));
        CHECK(num.var_b == Catch::Approx(pred.var_b).margin(1e-9));
        CHECK(num.mean_c == Catch::Approx(pred.mean_c).margin(1e-9));
        CHECK(num.mean_f == Catch::Approx(pred.mean_f).margin(1e-9));
        CHECK(num.delta == Catch::Approx(pred.delta).margin(1e-9));
        CHECK(std::abs(num.srur_residual) < 1e-10);
        CHECK(eigen_residual(j1_op(ops), j2_op(ops), s.lambda, s.beta, s.state) < 1e-10);
      }
    }
  }
}

TEST_CASE("isotropic point agrees with the closed limit") {
  for (int two_j : {1, 3, 4}) {
    for (int two_m = -two_j; two_m <= two_j; two_m += 2) {
      const double phi = 2.1;
      const Su2MusState s = su2_mus_state(two_j, two_m, 1.0, phi);
      const Operators ops = build_ops(s.state.spec);
      const DispersionReport num = srur_report(j1_op(ops), j2_op(ops), s.state);
      const DispersionReport pred = su2_isotropic_closed_form(two_j, two_m, phi);
      CHECK(num.var_a == Catch::Approx(pred.var_a).margin(1e-10));
      CHECK(num.var_b == Catch::Approx(pred.var_b).margin(1e-10));
      CHECK(num.mean_f == Catch::Approx(pred.mean_f).margin(1e-10));
      CHECK(num.delta == Catch::Approx(pred.delta).margin(1e-10));
      CHECK(std::abs(num.mean_c) < 1e-11);
    }
  }
}

TEST_CASE("spin one-half squeezing floor sits at the isotropic point") {
  // j = 1/2, phi = pi / 6: Delta = sqrt(1 - 2 d^2 cos(pi/3) + d^4) / (4 (1+d)^2)
  double best = 1e30, best_delta = -1.0;
  for (int k = 1; k <= 200; ++k) {
    const double d = 0.01 * k;
    const double v = su2_closed_form(1, 1, d, pi / 6.0).delta;
    if (v < best) { best = v; best_delta = d; }
  }
  CHECK(best == Catch::Approx(1.0 / 16.0).epsilon(1e-10));
  CHECK(best_delta == Catch::Approx(1.0));
}

TEST_CASE("coherent endpoint only supports the top weight") {
  CHECK_NOTHROW(su2_mus_state(3, 3, 0.0, 0.0));
  CHECK_THROWS_AS(su2_mus_state(3, 1, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(su2_mus_state(3, 2, 0.5, 0.0), std::invalid_argument);
}
