#include <catch2/catch_amalgamated.hpp>

#include "aeslab/hamiltonian_factory.hpp"
#include "aeslab/oscillator_states.hpp"

using namespace aeslab;

TEST_CASE("factorized squeeze action matches the dense exponential") {
  const SpaceSpec spec(34, 1);
  const Operators ops = build_ops(spec);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(spec.dim());
  v(spec.index(0, 1)) = 1.0;
  v(spec.index(3, -1)) = Complex{0.5, 0.4};
  const Complex xi{0.25, -0.2};
  const Eigen::VectorXcd got = detail::apply_squeeze(spec, v, xi);
  const Eigen::VectorXcd want = squeeze_matrix(ops, xi) * v;
  // the dense exponential is only trustworthy well below the truncation edge
  const int cut = 16 * spec.spin_dim();
  CHECK((got - want).head(cut).norm() < 1e-9);
  CHECK((detail::apply_squeeze(spec, v, Complex{0.0}) - v).norm() == 0.0);
}

TEST_CASE("unit-commutator eigenstates have flat dispersion") {
  CanonicalParams p;
  p.alpha = 0.6;
  p.theta_minus = 0.3;
  p.theta_plus = -1.1;
  p.beta = 0.8;
  p.varphi_minus = 0.5;
  p.varphi_plus = 1.7;
  p.r = 0.4;
  p.alpha_3 = Complex{0.1, -0.2};
  p.w = 1.3;
  const Complex z{0.9, 0.4};
  for (int two_m : {-1, 1}) {
    const CoupledAes sol = canonical_eigenstates(p, 1, two_m, z);
    const EnergyStats es = energy_stats(canonical_element(p), p.w, sol.state);
    CHECK(es.var_e == Catch::Approx(p.w * p.w * std::norm(z)).margin(1e-8));
    CHECK(es.mean_e == Catch::Approx(p.w * std::norm(z)).margin(1e-8));
    CHECK(std::abs(sol.b - canonical_b(p)) < 1e-13);
  }
  // trivial corner: plain shifted boson ladder
  CanonicalParams p0;
  const CoupledAes c0 = canonical_eigenstates(p0, 1, 1, z);
  CHECK(energy_stats(canonical_element(p0), 1.0, c0.state).var_e ==
        Catch::Approx(std::norm(z)).margin(1e-9));
  CHECK_THROWS_AS(canonical_eigenstates(p0, 1, 2, z), std::invalid_argument);

  CanonicalParams bad = p;
  bad.beta = -0.1;
  CHECK_THROWS_AS(canonical_element(bad), std::invalid_argument);
  bad = p;
  bad.w = 0.0;
  CHECK_THROWS_AS(canonical_element(bad), std::invalid_argument);
}

TEST_CASE("hamiltonian obeys the ladder commutation on the interior") {
  CanonicalParams p;
  p.alpha = 0.4;
  p.beta = 0.6;
  p.r = 0.9;
  p.w = 0.7;
  const SpaceSpec spec(20, 1);
  const Eigen::MatrixXcd a = element_matrix(canonical_element(p), spec).mat;
  const Eigen::MatrixXcd h = build_hamiltonian(canonical_element(p), p.w, spec).mat;
  const Eigen::MatrixXcd r = h * a - a * h + p.w * a;
  const int cut = (spec.fock_dim - 4) * spec.spin_dim();
  CHECK(r.topLeftCorner(cut, cut).cwiseAbs().maxCoeff() < 1e-10);
  CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK_THROWS_AS(build_hamiltonian(canonical_element(p), -1.0, spec), std::invalid_argument);
}

TEST_CASE("ladder excitations form an equispaced orthogonal tower") {
  CanonicalParams p;
  p.alpha = 0.5;
  p.theta_plus = 0.9;
  p.beta = 0.3;
  p.r = 0.7;
  p.alpha_3 = Complex{0.2, 0.1};
  const AlgebraElement e = canonical_element(p);
  std::vector<JointState> tower;
  for (int level = 0; level <= 4; ++level) {
    const JointState st = ladder_state(p, 1, 1, level);
    const EnergyStats es = energy_stats(e, p.w, st);
    CHECK(es.mean_e == Catch::Approx(level * p.w).margin(1e-8));
    CHECK(std::abs(es.var_e) < 1e-8);
    tower.push_back(st);
  }
  for (std::size_t i = 0; i < tower.size(); ++i)
    for (std::size_t k = i + 1; k < tower.size(); ++k)
      CHECK(overlap(tower[i], tower[k]) < 1e-8);
  // same level, opposite spin label: still orthogonal
  CHECK(overlap(tower[2], ladder_state(p, 1, -1, 2)) < 1e-8);
  CHECK_THROWS_AS(ladder_state(p, 1, 1, -1), std::invalid_argument);
}

TEST_CASE("linear-J3 commutator family matches its closed dispersion") {
  const Complex z{0.9, 0.3};
  for (double x : {1.5, -1.5}) {
    for (double beta : {0.0, 0.7}) {
      for (int two_j : {1, 2, 3}) {
        for (int two_m = -two_j; two_m <= two_j; two_m += 2) {
          XCaseParams p;
          p.x = x;
          p.beta = beta;
          p.alpha = 0.3;
          p.theta_plus = 0.8;
          p.varphi_minus = -0.4;
          p.varphi_plus = 1.1;
          p.w = 1.2;
          const CoupledAes sol = x_case_eigenstates(p, two_j, two_m, z);
          const double closed = x_case_dispersion(p, two_j, two_m, z);
          const EnergyStats es = energy_stats(x_case_element(p), p.w, sol.state);
          CHECK(es.var_e == Catch::Approx(closed).margin(1e-7));
        }
      }
    }
  }
  CHECK_THROWS_AS(x_case_element(XCaseParams{0.0}), std::invalid_argument);
  CHECK_THROWS_AS(x_case_dispersion(XCaseParams{0.0}, 1, 1, z), std::invalid_argument);
}

TEST_CASE("half-spin x-case dispersions collapse to one exponential curve") {
  const Complex z{1.0, 0.0};
  for (double x : {0.5, 2.0, -2.0}) {
    for (double beta : {0.2, 1.0, 2.5}) {
      XCaseParams p;
      p.x = x;
      p.beta = beta;
      const double want = 1.0 + std::abs(x) * std::exp(-2.0 * beta);
      CHECK(x_case_dispersion(p, 1, 1, z) == Catch::Approx(want).epsilon(1e-12));
      CHECK(x_case_dispersion(p, 1, -1, z) == Catch::Approx(want).epsilon(1e-12));
    }
  }
  // beta = 0 splits the two labels
  for (double s : {0.3, std::sqrt(2.0) - 1.0, 1.0, 2.5}) {
    XCaseParams p;
    p.x = s;
    CHECK(x_case_dispersion(p, 1, 1, z) == Catch::Approx(1.0 + s).epsilon(1e-12));
    CHECK(x_case_dispersion(p, 1, -1, z) ==
          Catch::Approx(1.0 + s * (s - 1.0) / (s + 1.0)).epsilon(1e-12));
  }
}

TEST_CASE("two-level coupling limit is reproduced entrywise") {
  const double w = 1.8, w0 = 0.7;
  XCaseParams p;
  p.x = -w0 / w;
  p.beta = 0.0;
  p.w = w;
  const SpaceSpec spec(32, 1);
  const Eigen::MatrixXcd got = build_hamiltonian(x_case_element(p), w, spec).mat;
  const Eigen::MatrixXcd want = jaynes_cummings_limit(w, w0, 32).mat;
  CHECK((got - want).cwiseAbs().maxCoeff() < 1e-12);
  CHECK_THROWS_AS(jaynes_cummings_limit(-1.0, 0.5, 8), std::invalid_argument);
  CHECK_THROWS_AS(jaynes_cummings_limit(1.0, 0.0, 8), std::invalid_argument);
}

TEST_CASE("rotated-frame family: closed half-spin curve against dense moments") {
  const Complex z{1.0, 0.0};
  // 4 beta^2 = rho collapse points get their own test below
  for (double rho : {1.0, 2.0}) {
    for (double beta : {0.2, 0.9, 1.4}) {
      for (double theta : {pi, 3.0 * pi / 4.0, 0.0}) {
        NonCanonicalParams p;
        p.rho = rho;
        p.beta = beta;
        p.theta = theta;
        const double closed = noncanonical_dispersion_halfspin(p, z);
        for (int two_m : {-1, 1}) {
          const CoupledAes sol = noncanonical_eigenstates(p, 1, two_m, z);
          const EnergyStats es = energy_stats(noncanonical_element(p), p.w, sol.state);
          CHECK(es.var_e == Catch::Approx(noncanonical_dispersion(p, 1, two_m, z)).margin(1e-7));
          // both labels ride the same half-spin curve
          CHECK(es.var_e == Catch::Approx(closed).margin(1e-7));
        }
      }
    }
  }
}

TEST_CASE("rotated-frame family: exact branch collapse goes degenerate") {
  NonCanonicalParams p;
  p.rho = 1.0;
  p.beta = 0.5;
  p.theta = 0.0;  // e^{i theta} exactly real, 4 beta^2 = rho: b = 0 exactly
  const AlgebraElement e = noncanonical_element(p);
  CHECK(std::abs(b_factor(e)) == 0.0);
  const Complex z{1.0, 0.0};
  const CoupledAes sol = noncanonical_eigenstates(p, 1, 1, z);
  CHECK(sol.b == Complex{0.0});
  const EnergyStats es = energy_stats(e, p.w, sol.state);
  CHECK(es.var_e == Catch::Approx(noncanonical_dispersion(p, 1, 1, z)).margin(1e-8));

  // the lower label carries the bare bottom-weight bracket: z-free 1 + rho
  const CoupledAes lo = noncanonical_eigenstates(p, 1, -1, z);
  const EnergyStats el = energy_stats(e, p.w, lo.state);
  CHECK(el.var_e == Catch::Approx(2.0).margin(1e-8));
  CHECK(el.var_e == Catch::Approx(noncanonical_dispersion(p, 1, -1, z)).margin(1e-8));

  // the mixed bracket is reweighed by the displacement, so z enters
  const Complex z2{0.4, 0.3};
  const EnergyStats eh =
      energy_stats(e, p.w, noncanonical_eigenstates(p, 1, 1, z2).state);
  CHECK(eh.var_e == Catch::Approx(noncanonical_dispersion(p, 1, 1, z2)).margin(1e-8));

  // near-collapse from the other side (sin(pi) leaves a residual root) must
  // still resolve both labels through the general solver
  p.theta = pi;
  const AlgebraElement e2 = noncanonical_element(p);
  CHECK(std::abs(b_factor(e2)) > 1e-12);
  for (int two_m : {-1, 1}) {
    const CoupledAes s2 = noncanonical_eigenstates(p, 1, two_m, z);
    const EnergyStats st2 = energy_stats(e2, p.w, s2.state);
    CHECK(st2.var_e == Catch::Approx(2.0).margin(1e-6));
  }
  CHECK(noncanonical_dispersion_halfspin(p, z) == Catch::Approx(2.0).margin(1e-9));
}

TEST_CASE("rotated-frame family: phase sweep is mirror symmetric") {
  const Complex z{1.0, 0.0};
  for (double theta : {5.0 * pi / 8.0, 3.0 * pi / 4.0, 7.0 * pi / 8.0}) {
    NonCanonicalParams a, b;
    a.rho = b.rho = 2.0;
    a.beta = b.beta = 0.8;
    a.theta = theta;
    b.theta = 2.0 * pi - theta;
    CHECK(noncanonical_dispersion_halfspin(a, z) ==
          Catch::Approx(noncanonical_dispersion_halfspin(b, z)).epsilon(1e-12));
  }
}

TEST_CASE("rotated-frame family: general-spin route at j = 1") {
  const Complex z{1.0, 0.0};
  NonCanonicalParams p;
  p.rho = 2.0;
  p.beta = 0.7;
  p.theta = 3.0 * pi / 4.0;
  p.nu = 0.4;
  p.varphi_minus = -0.3;
  for (int two_m : {-2, 0, 2}) {
    const CoupledAes sol = noncanonical_eigenstates(p, 2, two_m, z);
    const EnergyStats es = energy_stats(noncanonical_element(p), p.w, sol.state);
    CHECK(es.var_e == Catch::Approx(noncanonical_dispersion(p, 2, two_m, z)).margin(1e-7));
  }
  CHECK_THROWS_AS(noncanonical_element(NonCanonicalParams{1.0, 0.0, 1.0, pi / 2.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(noncanonical_element(NonCanonicalParams{-0.5}), std::invalid_argument);
}

TEST_CASE("squeezed-displaced eigenstates saturate the quadrature bound") {
  CanonicalParams p;
  p.alpha = 0.3;
  p.beta = 0.5;
  p.r = 0.8;
  p.theta_plus = 0.6;
  const JointState st = super_squeezed_state(p, 1, 1, Complex{0.3, -0.1}, Complex{0.6, 0.4}, 64);
  const auto [qx, qp] = element_quadratures(canonical_element(p), st.spec);
  const DispersionReport r = srur_report(qx, qp, st);
  CHECK(std::abs(r.srur_residual) < 1e-6);
  CHECK(r.var_a * r.var_b >= r.delta * r.delta - 1e-6);
}
