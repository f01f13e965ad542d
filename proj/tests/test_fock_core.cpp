#include <catch2/catch_amalgamated.hpp>

#include "aeslab/fock_core.hpp"

using namespace aeslab;

TEST_CASE("space spec indexing") {
  const SpaceSpec s(4, 3);  // j = 3/2
  CHECK(s.spin_dim() == 4);
  CHECK(s.dim() == 16);
  CHECK(s.valid_two_m(-3));
  CHECK(s.valid_two_m(1));
  CHECK_FALSE(s.valid_two_m(0));  // parity mismatch
  CHECK_FALSE(s.valid_two_m(5));
  CHECK(s.index(0, -3) == 0);
  CHECK(s.index(2, 1) == 2 * 4 + 2);
  CHECK_THROWS_AS(s.index(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(s.index(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(SpaceSpec(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(SpaceSpec(4, -1), std::invalid_argument);
}

TEST_CASE("generator algebra holds away from the truncation edge") {
  const SpaceSpec spec(12, 2);
  const Operators ops = build_ops(spec);
  const int cut = (spec.fock_dim - 2) * spec.spin_dim();

  const Eigen::MatrixXcd ccr =
      ops.a.mat * ops.a_dag.mat - ops.a_dag.mat * ops.a.mat - ops.id.mat;
  CHECK(ccr.topLeftCorner(cut, cut).cwiseAbs().maxCoeff() < 1e-14);

  const Eigen::MatrixXcd su2a =
      ops.j_plus.mat * ops.j_minus.mat - ops.j_minus.mat * ops.j_plus.mat - 2.0 * ops.j3.mat;
  CHECK(su2a.cwiseAbs().maxCoeff() < 1e-13);
  const Eigen::MatrixXcd su2b =
      ops.j3.mat * ops.j_plus.mat - ops.j_plus.mat * ops.j3.mat - ops.j_plus.mat;
  CHECK(su2b.cwiseAbs().maxCoeff() < 1e-13);

  const Eigen::MatrixXcd xp = position_op(ops).mat * momentum_op(ops).mat -
                              momentum_op(ops).mat * position_op(ops).mat -
                              iunit * ops.id.mat;
  CHECK(xp.topLeftCorner(cut, cut).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("moments of bare Fock levels") {
  const SpaceSpec spec(16, 0);
  const Operators ops = build_ops(spec);
  for (int n : {0, 1, 3}) {
    JointState st{spec, Eigen::VectorXcd::Zero(spec.dim()), 0.0};
    st.coeffs(n) = 1.0;
    CHECK(std::real(expectation(ops.a_dag, st)) == Catch::Approx(0.0).margin(1e-14));
    CHECK(dispersion(position_op(ops), st) == Catch::Approx(n + 0.5));
    CHECK(dispersion(momentum_op(ops), st) == Catch::Approx(n + 0.5));
  }
}

TEST_CASE("srur report on a coherent state") {
  const SpaceSpec spec(48, 0);
  const Operators ops = build_ops(spec);
  const Complex alpha{0.9, -0.6};
  JointState st{spec, Eigen::VectorXcd::Zero(spec.dim()), 0.0};
  for (int n = 0; n < spec.fock_dim; ++n)
    st.coeffs(n) = std::pow(alpha, n) * std::exp(-0.5 * std::norm(alpha)) /
                   std::sqrt(std::tgamma(n + 1.0));
  const DispersionReport r = srur_report(position_op(ops), momentum_op(ops), st);
  CHECK(r.mean_a == Catch::Approx(std::sqrt(2.0) * alpha.real()).margin(1e-10));
  CHECK(r.mean_b == Catch::Approx(std::sqrt(2.0) * alpha.imag()).margin(1e-10));
  CHECK(r.var_a == Catch::Approx(0.5).margin(1e-10));
  CHECK(r.var_b == Catch::Approx(0.5).margin(1e-10));
  CHECK(r.mean_c == Catch::Approx(1.0).margin(1e-10));
  CHECK(r.mean_f == Catch::Approx(0.0).margin(1e-10));
  CHECK(std::abs(r.srur_residual) < 1e-10);
}

TEST_CASE("srur_report rejects non-hermitian input") {
  const SpaceSpec spec(6, 0);
  const Operators ops = build_ops(spec);
  JointState st{spec, Eigen::VectorXcd::Zero(spec.dim()), 0.0};
  st.coeffs(0) = 1.0;
  CHECK_THROWS_AS(srur_report(ops.a, momentum_op(ops), st), std::invalid_argument);
}

TEST_CASE("normalization gauge") {
  const SpaceSpec spec(4, 0);
  JointState st{spec, Eigen::VectorXcd::Zero(4), 0.0};
  st.coeffs(1) = Complex{0.0, -2.0};
  st.coeffs(2) = Complex{1.0, 1.0};
  st.normalize();
  CHECK(st.norm() == Catch::Approx(1.0));
  CHECK(st.coeffs(1).imag() == Catch::Approx(0.0).margin(1e-15));
  CHECK(st.coeffs(1).real() > 0.0);
  JointState zero{spec, Eigen::VectorXcd::Zero(4), 0.0};
  CHECK_THROWS_AS(zero.normalize(), NumericalError);
}

TEST_CASE("overlap across truncations") {
  const SpaceSpec small(4, 1), big(8, 1);
  JointState a{small, Eigen::VectorXcd::Zero(small.dim()), 0.0};
  JointState b{big, Eigen::VectorXcd::Zero(big.dim()), 0.0};
  a.coeffs(small.index(1, 1)) = 1.0;
  b.coeffs(big.index(1, 1)) = 1.0;
  CHECK(overlap(a, b) == Catch::Approx(1.0));
  JointState c{SpaceSpec(4, 2), Eigen::VectorXcd::Zero(12), 0.0};
  CHECK_THROWS_AS(overlap(a, c), std::invalid_argument);
}

TEST_CASE("grow loop reaches the requested tail") {
  int calls = 0;
  const JointState st = detail::grow_until_converged(4, 0, [&](const SpaceSpec& spec) {
    ++calls;
    Eigen::VectorXcd v(spec.dim());
    for (int n = 0; n < spec.fock_dim; ++n) v(n) = std::pow(0.5, n);
    return v;
  });
  CHECK(calls > 1);  // hint of 4 cannot satisfy the default tolerance
  CHECK(st.norm_tail < 1e-10);
  CHECK(st.norm() == Catch::Approx(1.0));
}
