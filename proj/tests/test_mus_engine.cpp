#include <catch2/catch_amalgamated.hpp>

#include "aeslab/mus_engine.hpp"
#include "aeslab/oscillator_states.hpp"
#include "aeslab/su2_aes.hpp"

using namespace aeslab;

TEST_CASE("phi wrapping lands in the principal window") {
  CHECK(wrap_phi(0.0) == Catch::Approx(0.0));
  CHECK(wrap_phi(2.0 * pi) == Catch::Approx(0.0).margin(1e-15));
  CHECK(wrap_phi(-0.6 * pi) == Catch::Approx(1.4 * pi));
  CHECK(wrap_phi(1.5 * pi) == Catch::Approx(-0.5 * pi));
  for (double phi : {-3.1, 0.4, 2.9, 5.5, -8.2}) {
    const double w = wrap_phi(phi);
    CHECK(w >= -pi / 2.0 - 1e-12);
    CHECK(w < 3.0 * pi / 2.0);
    CHECK(std::remainder(w - phi, 2.0 * pi) == Catch::Approx(0.0).margin(1e-12));
  }
}

TEST_CASE("weight parameterization round-trips") {
  for (double delta : {0.0, 0.2, 0.7, 1.3, 2.4}) {
    for (double phi : {-0.4, 0.0, 1.1, 2.9, 4.2}) {
      if (delta == 0.0 && phi != 0.0) continue;  // phase is unidentified at 0
      const Complex lambda = lambda_from_delta_phi(delta, wrap_phi(phi));
      const DeltaPhi back = delta_phi_from_lambda(lambda);
      CHECK(back.delta == Catch::Approx(delta).margin(1e-12));
      if (delta > 0.0) CHECK(back.phi == Catch::Approx(wrap_phi(phi)).margin(1e-12));
    }
  }
}

TEST_CASE("degenerate weights are rejected") {
  CHECK_THROWS_AS(lambda_from_delta_phi(-0.1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(lambda_from_delta_phi(1.0, 0.0), std::invalid_argument);       // lambda = 0
  CHECK_THROWS_AS(lambda_from_delta_phi(1.0, pi), std::invalid_argument);        // pole
  CHECK_THROWS_AS(delta_phi_from_lambda(Complex{0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(delta_phi_from_lambda(Complex{-1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("unit-circle weights equalize the variances") {
  // Re(delta e^{i phi}) = 0 puts the weight on the unit circle
  const Complex lambda = lambda_from_delta_phi(0.7, pi / 2.0);
  CHECK(std::abs(lambda) == Catch::Approx(1.0).margin(1e-12));
  const DispersionReport r = mus_predicted_report(lambda, Complex{0.3, 0.1}, 1.0);
  CHECK(r.var_a == Catch::Approx(r.var_b).margin(1e-12));
}

TEST_CASE("predicted moments match a constructed oscillator state") {
  const double delta = 0.55, phi = 2.1;
  const Complex beta{0.8, -0.3};
  const Complex lambda = lambda_from_delta_phi(delta, phi);
  const DispersionReport pred = mus_predicted_report(lambda, beta, 1.0);

  const JointState st = oscillator_mus_recurrence(delta, phi, beta, 16, 1e-12);
  const Operators ops = build_ops(st.spec);
  const LinearOperator x = position_op(ops), p = momentum_op(ops);
  const DispersionReport num = srur_report(x, p, st);
  CHECK(num.mean_a == Catch::Approx(pred.mean_a).margin(1e-9));
  CHECK(num.mean_b == Catch::Approx(pred.mean_b).margin(1e-9));
  CHECK(num.var_a == Catch::Approx(pred.var_a).margin(1e-9));
  CHECK(num.var_b == Catch::Approx(pred.var_b).margin(1e-9));
  CHECK(num.mean_f == Catch::Approx(pred.mean_f).margin(1e-9));
  CHECK(num.delta == Catch::Approx(pred.delta).margin(1e-9));

  // the full residual is dominated by the truncation edge (~sqrt of the tail
  // mass); below the top two levels the defining equation holds to rounding
  const Eigen::VectorXcd rv =
      x.mat * st.coeffs + iunit * lambda * (p.mat * st.coeffs) - beta * st.coeffs;
  CHECK(rv.head(st.spec.dim() - 2).norm() < 1e-10);
  CHECK(eigen_residual(x, p, lambda, beta, st) < 1e-5);
  CHECK_THROWS_AS(mus_predicted_report(Complex{0.0, 1.0}, beta, 1.0), std::invalid_argument);
}

TEST_CASE("imaginary-weight branch covers the isotropic angular states") {
  // delta = 1 makes lambda purely imaginary: lambda = -i tan(phi / 2)
  const double phi = 0.9;
  const Su2MusState s = su2_mus_state(3, 1, 1.0, phi);
  CHECK(std::abs(std::real(s.lambda)) < 1e-12);
  const Operators ops = build_ops(s.state.spec);
  const DispersionReport num = srur_report(j1_op(ops), j2_op(ops), s.state);
  const DispersionReport pred =
      mus_predicted_report_imaginary(s.lambda, num.mean_a, num.mean_b, num.mean_f);
  CHECK(num.var_a == Catch::Approx(pred.var_a).margin(1e-10));
  CHECK(num.var_b == Catch::Approx(pred.var_b).margin(1e-10));
  CHECK(num.delta == Catch::Approx(pred.delta).margin(1e-10));
  CHECK(std::abs(num.mean_c) < 1e-12);
  CHECK_THROWS_AS(mus_predicted_report_imaginary(Complex{0.3, 0.2}, 0, 0, 1.0),
                  std::invalid_argument);
}
