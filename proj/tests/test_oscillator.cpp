#include <catch2/catch_amalgamated.hpp>

#include "aeslab/oscillator_states.hpp"

using namespace aeslab;

namespace {

DispersionReport measured(const JointState& st) {
  const Operators ops = build_ops(st.spec);
  return srur_report(position_op(ops), momentum_op(ops), st);
}

}  // namespace

TEST_CASE("displacement and squeeze matrices are unitary on the interior") {
  const Operators ops = build_ops(SpaceSpec(24, 0));
  const Eigen::MatrixXcd d = displacement_matrix(ops, Complex{0.7, -0.4});
  const Eigen::MatrixXcd s = squeeze_matrix(ops, Complex{0.3, 0.5});
  // truncation spoils the last rows only; check the upper-left block
  const int cut = 12;
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(24, 24);
  CHECK(((d.adjoint() * d) - id).topLeftCorner(cut, cut).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(((s.adjoint() * s) - id).topLeftCorner(cut, cut).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("recurrence and squeezed constructions agree") {
  for (double delta : {0.0, 0.3, 0.6, 0.85}) {
    for (double phi : {0.0, pi / 6.0, 2.4, -1.2}) {
      if (delta == 0.0 && phi != 0.0) continue;
      const Complex beta{0.9, -0.5};
      const JointState a = oscillator_mus_recurrence(delta, phi, beta, 16, 1e-12);
      const JointState b = oscillator_mus_squeezed(delta, phi, beta, 16, 1e-12);
      CHECK(1.0 - overlap(a, b) < 1e-10);
    }
  }
}

TEST_CASE("closed-form moments match the constructed state") {
  const Complex beta{1.1, 0.4};
  for (double delta : {0.2, 0.5, 0.85}) {
    for (double phi : {pi / 6.0, 1.9, -0.8}) {
      const DispersionReport pred = oscillator_closed_form(delta, phi, beta);
      const DispersionReport num = measured(oscillator_mus_recurrence(delta, phi, beta, 16, 1e-12));
      CHECK(num.mean_a == Catch::Approx(pred.mean_a).margin(1e-8));
      CHECK(num.mean_b == Catch::Approx(pred.mean_b).margin(1e-8));
      CHECK(num.var_a == Catch::Approx(pred.var_a).margin(1e-8));
      CHECK(num.var_b == Catch::Approx(pred.var_b).margin(1e-8));
      CHECK(num.mean_c == Catch::Approx(1.0).margin(1e-8));
      CHECK(num.mean_f == Catch::Approx(pred.mean_f).margin(1e-8));
      CHECK(num.delta == Catch::Approx(pred.delta).margin(1e-8));
      CHECK(std::abs(num.srur_residual) < 1e-8);
    }
  }
}

TEST_CASE("delta = 0 is the coherent point") {
  const DispersionReport r = oscillator_closed_form(0.0, 0.0, Complex{0.4, 0.7});
  CHECK(r.var_a == Catch::Approx(0.5));
  CHECK(r.var_b == Catch::Approx(0.5));
  CHECK(r.delta == Catch::Approx(0.5));
  CHECK(r.mean_f == Catch::Approx(0.0).margin(1e-15));
}

TEST_CASE("non-normalizable and runaway parameters are rejected") {
  CHECK_THROWS_AS(oscillator_mus_recurrence(1.0, 0.3, Complex{1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(oscillator_mus_squeezed(1.2, 0.3, Complex{1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(oscillator_closed_form(1.0, 0.3, Complex{1.0, 0.0}), std::invalid_argument);
  // delta -> 1 needs more Fock levels than the cap allows
  CHECK_THROWS_AS(oscillator_mus_recurrence(0.99999, 0.3, Complex{1.0, 0.0}, 16, 1e-12),
                  TruncationError);
}
