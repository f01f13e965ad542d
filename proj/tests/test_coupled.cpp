#include <catch2/catch_amalgamated.hpp>

#include "aeslab/coupled_aes.hpp"

using namespace aeslab;

namespace {

const AlgebraElement kGeneric{Complex{1.1, 0.2},  Complex{0.3, -0.4}, Complex{0.2, 0.1},
                              Complex{0.5, -0.3}, Complex{-0.2, 0.6}, Complex{0.7, 0.4}};

}  // namespace

TEST_CASE("element matrix assembles the six generators") {
  const SpaceSpec spec(6, 2);
  const Operators ops = build_ops(spec);
  const Eigen::MatrixXcd want =
      kGeneric.alpha_minus * ops.a.mat + kGeneric.alpha_plus * ops.a_dag.mat +
      kGeneric.alpha_3 * ops.id.mat + kGeneric.beta_minus * ops.j_plus.mat +
      kGeneric.beta_plus * ops.j_minus.mat + kGeneric.beta_3 * ops.j3.mat;
  CHECK((element_matrix(kGeneric, spec).mat - want).cwiseAbs().maxCoeff() < 1e-14);

  // matrix-free application agrees with the dense matrix
  Eigen::VectorXcd v = Eigen::VectorXcd::Random(spec.dim());
  CHECK((detail::apply_element(kGeneric, spec, v) - want * v).norm() < 1e-12 * v.norm());
}

TEST_CASE("adjoint element is the matrix adjoint") {
  const SpaceSpec spec(5, 1);
  const Eigen::MatrixXcd m = element_matrix(kGeneric, spec).mat;
  const Eigen::MatrixXcd ma = element_matrix(adjoint_element(kGeneric), spec).mat;
  CHECK((ma - m.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
  CHECK_FALSE(is_hermitian_element(kGeneric));
  CHECK(is_hermitian_element(hermitian_element({Complex{0.4, 0.2}, 1.1, Complex{-0.3, 0.8}, 0.6})));
}

TEST_CASE("commutator coefficients reproduce the dense commutator") {
  const HermitianCoeffs A{Complex{0.7, -0.2}, 0.4, Complex{0.3, 0.5}, 1.2};
  const HermitianCoeffs B{Complex{-0.1, 0.9}, -0.3, Complex{0.8, -0.4}, 0.5};
  const SpaceSpec spec(10, 2);
  const Eigen::MatrixXcd ma = hermitian_matrix(A, spec).mat;
  const Eigen::MatrixXcd mb = hermitian_matrix(B, spec).mat;
  const Eigen::MatrixXcd mc = hermitian_matrix(commutator_coeffs(A, B), spec).mat;
  const Eigen::MatrixXcd r = ma * mb - mb * ma - iunit * mc;
  const int cut = (spec.fock_dim - 2) * spec.spin_dim();
  CHECK(r.topLeftCorner(cut, cut).cwiseAbs().maxCoeff() < 1e-12);

  const Eigen::MatrixXcd me = element_matrix(element_from_ab(A, B, Complex{0.4, 0.9}), spec).mat;
  CHECK((me - (ma + iunit * Complex{0.4, 0.9} * mb)).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("incremental ladder exponentials match the dense matrix exponential") {
  const SpaceSpec spec(18, 1);
  const Operators ops = build_ops(spec);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(spec.dim());
  v(spec.index(2, 1)) = 1.0;
  v(spec.index(5, -1)) = Complex{0.3, -0.8};
  const Complex eta{0.6, -0.9};

  const Eigen::MatrixXcd eu = (eta * ops.a_dag.mat).exp();
  CHECK((detail::conv_exp_adag(spec, v, eta) - eu * v).norm() < 1e-12);
  // annihilation flows downward, exact once the source support is interior
  const Eigen::MatrixXcd ed = (eta * ops.a.mat).exp();
  CHECK((detail::conv_exp_a(spec, v, eta) - ed * v).norm() < 1e-12);
}

TEST_CASE("nondegenerate eigenstates satisfy the eigen-equation") {
  for (int two_j : {1, 2, 3}) {
    for (int two_m = -two_j; two_m <= two_j; two_m += 2) {
      const Complex rho{0.8, -0.5};
      const CoupledAes sol = aes_general(kGeneric, two_j, two_m, rho, 32, 1e-12);
      CHECK(std::abs(sol.b) > 0.1);
      CHECK(std::abs(sol.z - (rho + kGeneric.alpha_3 + (two_m / 2.0) * sol.b)) < 1e-12);
      CHECK(detail::interior_residual(kGeneric, sol.state.spec, sol.state.coeffs, sol.z) < 1e-9);
      CHECK(sol.state.norm() == Catch::Approx(1.0));
    }
  }
}

TEST_CASE("boson normalizability guards fire") {
  AlgebraElement e = kGeneric;
  e.alpha_minus = 0.0;
  CHECK_THROWS_AS(aes_general(e, 1, 1, Complex{0.1, 0.0}), std::invalid_argument);
  e = kGeneric;
  e.alpha_plus = 2.0 * e.alpha_minus;
  CHECK_THROWS_AS(aes_general(e, 1, 1, Complex{0.1, 0.0}), std::invalid_argument);
  // spinless element must go through the degenerate constructor
  e = kGeneric;
  e.beta_minus = e.beta_plus = e.beta_3 = 0.0;
  CHECK_THROWS_AS(aes_general(e, 1, 1, Complex{0.1, 0.0}), std::invalid_argument);
  CHECK_NOTHROW(aes_degenerate(e, 1, 1, Complex{0.1, 0.0}));
}

TEST_CASE("degenerate family covers its three branches") {
  const Complex rho{0.6, 0.2};

  AlgebraElement e1;  // single lowering ladder
  e1.alpha_minus = 1.0;
  e1.alpha_plus = Complex{0.2, 0.3};
  e1.alpha_3 = Complex{0.0, 0.4};
  e1.beta_minus = Complex{0.8, -0.5};
  for (int two_m : {-2, 0, 2}) {
    const CoupledAes sol = aes_degenerate(e1, 2, two_m, rho, 32, 1e-12);
    CHECK(std::abs(sol.z - (rho + e1.alpha_3)) < 1e-14);
    CHECK(detail::interior_residual(e1, sol.state.spec, sol.state.coeffs, sol.z) < 1e-9);
  }

  AlgebraElement e2 = e1;  // single raising ladder
  e2.beta_minus = 0.0;
  e2.beta_plus = Complex{-0.4, 0.9};
  CHECK_NOTHROW(aes_degenerate(e2, 3, 1, rho, 32, 1e-12));

  // all three spin coefficients with b = 0: dyadic data keeps the
  // discriminant cancellation exact under floating point
  AlgebraElement e3 = e1;
  e3.beta_3 = Complex{1.0, 0.5};
  e3.beta_minus = -e3.beta_3;             // twist 2
  e3.beta_plus = e3.beta_3 * 0.25;
  REQUIRE(std::abs(b_factor(e3)) == 0.0);
  for (int two_m : {-2, 0, 2}) {
    const CoupledAes sol = aes_degenerate(e3, 2, two_m, rho, 32, 1e-12);
    CHECK(detail::interior_residual(e3, sol.state.spec, sol.state.coeffs, sol.z) < 1e-9);
  }
}

TEST_CASE("degenerate constructor rejects incompatible spin parts") {
  AlgebraElement e = kGeneric;  // generic b is far from 0
  CHECK_THROWS_WITH(aes_degenerate(e, 2, 0, Complex{0.1, 0.0}),
                    Catch::Matchers::ContainsSubstring("use aes_general"));

  // b below the degeneracy threshold but no branch pattern applies
  AlgebraElement q;
  q.alpha_minus = 1.0;
  q.beta_minus = 1.0;
  q.beta_plus = 1e-28;
  q.beta_3 = 1e-13;
  REQUIRE(std::abs(b_factor(q)) < 1e-12);
  CHECK_THROWS_WITH(aes_degenerate(q, 2, 0, Complex{0.1, 0.0}),
                    Catch::Matchers::ContainsSubstring("matches no b = 0 branch"));
}

TEST_CASE("mixed quadrature pair is hermitian with the right commutator") {
  const Complex mu{0.9, 0.3}, tau{-0.5, 0.7};
  const SpaceSpec spec(14, 3);
  const auto [X, P] = super_xp(mu, tau, spec);
  CHECK((X.mat - X.mat.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((P.mat - P.mat.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
  const Operators ops = build_ops(spec);
  const Eigen::MatrixXcd want =
      iunit * (std::norm(mu) * ops.id.mat + 2.0 * std::norm(tau) * ops.j3.mat);
  const Eigen::MatrixXcd r = X.mat * P.mat - P.mat * X.mat - want;
  const int cut = (spec.fock_dim - 2) * spec.spin_dim();
  CHECK(r.topLeftCorner(cut, cut).cwiseAbs().maxCoeff() < 1e-12);
  CHECK_THROWS_AS(super_xp(0.0, tau, spec), std::invalid_argument);
}

TEST_CASE("lambda = 1 mixed eigenstates: residual, commutator mean, norm") {
  const Complex mu{1.0, 0.4}, tau{0.8, -0.3};
  for (int two_j : {1, 2}) {
    for (int two_m = -two_j; two_m <= two_j; two_m += 2) {
      SuperXpSpec s;
      s.mu = mu;
      s.tau = tau;
      s.z = Complex{0.7, -0.2};
      const CoupledAes sol = scs_lambda1(s, two_j, two_m);
      const auto [X, P] = super_xp(mu, tau, sol.state.spec);
      CHECK(eigen_residual(X, P, Complex{1.0}, s.z, sol.state) < 1e-9);

      const Operators ops = build_ops(sol.state.spec);
      const LinearOperator c{sol.state.spec,
                             std::norm(mu) * ops.id.mat + 2.0 * std::norm(tau) * ops.j3.mat};
      CHECK(std::real(expectation(c, sol.state)) ==
            Catch::Approx(c_mean_lambda1(two_j, two_m, mu, tau)).margin(1e-10));

      const Eigen::MatrixXcd bm = detail::degenerate_bracket(two_j, two_m, mu / tau, -1);
      CHECK(bm.squaredNorm() ==
            Catch::Approx(xp_norm2_lambda1(two_j, two_m, mu, tau)).epsilon(1e-12));
    }
  }
  CHECK(c_mean_lambda1(1, 1, 1.0, 1.0) == Catch::Approx(2.0));
  CHECK(c_mean_lambda1(1, -1, 1.0, 1.0) == Catch::Approx(1.0));
  CHECK_THROWS_AS(scs_lambda1(SuperXpSpec{}, 1, 1), std::invalid_argument);  // tau = 0
}

TEST_CASE("squeezed mixed eigenstates: residual and commutator mean") {
  SuperXpSpec s;
  s.mu = Complex{1.1, -0.2};
  s.tau = Complex{0.6, 0.5};
  s.z = Complex{0.4, 0.3};
  for (double delta : {0.2, 0.5}) {
    for (int two_j : {1, 3}) {
      for (int two_m = -two_j; two_m <= two_j; two_m += 2) {
        s.param = {delta, pi / 6.0};
        const CoupledAes sol = general_squeezed_xp(s, two_j, two_m);
        const auto [X, P] = super_xp(s.mu, s.tau, sol.state.spec);
        const Complex lambda = lambda_from_delta_phi(delta, pi / 6.0);
        CHECK(eigen_residual(X, P, lambda, s.z, sol.state) < 1e-8);

        const Operators ops = build_ops(sol.state.spec);
        const LinearOperator c{
            sol.state.spec,
            std::norm(s.mu) * ops.id.mat + 2.0 * std::norm(s.tau) * ops.j3.mat};
        CHECK(std::real(expectation(c, sol.state)) ==
              Catch::Approx(xp_mean_c(two_j, two_m, s.mu, s.tau, delta)).margin(1e-9));

        const DispersionReport pred = xp_dispersions(s, two_j, two_m);
        const DispersionReport num = srur_report(X, P, sol.state);
        CHECK(num.var_a == Catch::Approx(pred.var_a).margin(1e-8));
        CHECK(num.var_b == Catch::Approx(pred.var_b).margin(1e-8));
        CHECK(num.delta == Catch::Approx(pred.delta).margin(1e-8));
      }
    }
  }
  s.param = {0.0, 0.0};
  CHECK_THROWS_AS(general_squeezed_xp(s, 1, 1), std::invalid_argument);
  s.param = {1.0, 0.3};
  CHECK_THROWS_AS(general_squeezed_xp(s, 1, 1), std::invalid_argument);
  s.param = {0.4, 0.3};
  s.tau = 0.0;
  CHECK_THROWS_AS(general_squeezed_xp(s, 1, 1), std::invalid_argument);
}
