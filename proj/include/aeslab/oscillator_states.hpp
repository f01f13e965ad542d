#ifndef AESLAB_OSCILLATOR_STATES_HPP
#define AESLAB_OSCILLATOR_STATES_HPP

#include <unsupported/Eigen/MatrixFunctions>

#include "aeslab/fock_core.hpp"
#include "aeslab/mus_engine.hpp"

namespace aeslab {

/// D(eta) = exp(eta a_dag - conj(eta) a) on the truncated space.
inline Eigen::MatrixXcd displacement_matrix(const Operators& ops, Complex eta) {
  const Eigen::MatrixXcd g = eta * ops.a_dag.mat - std::conj(eta) * ops.a.mat;
  return g.exp();
}

/// S(chi) = exp((chi a_dag^2 - conj(chi) a^2) / 2) on the truncated space.
inline Eigen::MatrixXcd squeeze_matrix(const Operators& ops, Complex chi) {
  const Eigen::MatrixXcd g = 0.5 * (chi * ops.a_dag.mat * ops.a_dag.mat -
                                    std::conj(chi) * ops.a.mat * ops.a.mat);
  return g.exp();
}

/// Oscillator minimum-uncertainty state, (x + i lambda p)|psi> = beta|psi>,
/// built from the three-term Fock recurrence.  Normalizable for delta < 1.
inline JointState oscillator_mus_recurrence(double delta, double phi, Complex beta,
                                            int fock_dim_hint = 16,
                                            double tail_tol = 1e-10) {
  if (delta >= 1.0)
    throw std::invalid_argument("oscillator_mus_recurrence: delta >= 1 is not normalizable");
  const Complex lambda = lambda_from_delta_phi(delta, phi);
  const Complex one_m = 1.0 - lambda;
  const Complex one_p = 1.0 + lambda;
  return detail::grow_until_converged(
      fock_dim_hint, 0,
      [&](const SpaceSpec& spec) {
    Eigen::VectorXcd c(spec.dim());
    c(0) = 1.0;
    if (spec.fock_dim > 1) c(1) = std::sqrt(2.0) * beta / one_p;
    for (int n = 1; n + 1 < spec.fock_dim; ++n)
      c(n + 1) = (std::sqrt(2.0) * beta * c(n) - std::sqrt(static_cast<double>(n)) * one_m * c(n - 1)) /
                 (std::sqrt(n + 1.0) * one_p);
    return c;
      },
      tail_tol);
}

/// Same state through the squeeze-displace factorization
/// S(chi) D(eta) |0>, chi = -atanh(delta) e^{i phi}.
inline JointState oscillator_mus_squeezed(double delta, double phi, Complex beta,
                                          int fock_dim_hint = 16,
                                          double tail_tol = 1e-10) {
  if (delta >= 1.0)
    throw std::invalid_argument("oscillator_mus_squeezed: delta >= 1 is not normalizable");
  const Complex chi = -std::atanh(delta) * std::exp(iunit * phi);
  const Complex eta =
      beta / std::sqrt(2.0) * (1.0 + delta * std::exp(iunit * phi)) / std::sqrt(1.0 - delta * delta);
  return detail::grow_until_converged(
      fock_dim_hint, 0,
      [&](const SpaceSpec& spec) {
    const Operators ops = build_ops(spec);
    Eigen::VectorXcd vac = Eigen::VectorXcd::Zero(spec.dim());
    vac(0) = 1.0;
    return Eigen::VectorXcd(squeeze_matrix(ops, chi) * (displacement_matrix(ops, eta) * vac));
      },
      tail_tol);
}

/// Closed-form moment report for the oscillator state at (delta, phi, beta);
/// A = x, B = p, <C> = 1.
inline DispersionReport oscillator_closed_form(double delta, double phi, Complex beta) {
  if (delta >= 1.0)
    throw std::invalid_argument("oscillator_closed_form: delta >= 1 is not normalizable");
  const double d2 = delta * delta;
  const double denom = 1.0 - d2;
  const Complex lambda = lambda_from_delta_phi(delta, phi);

  DispersionReport r;
  r.mean_a = std::real(beta) + (std::imag(lambda) / std::real(lambda)) * std::imag(beta);
  r.mean_b = std::imag(beta) / std::real(lambda);
  r.var_a = (1.0 - 2.0 * delta * std::cos(phi) + d2) / (2.0 * denom);
  r.var_b = (1.0 + 2.0 * delta * std::cos(phi) + d2) / (2.0 * denom);
  r.mean_c = 1.0;
  r.mean_f = -2.0 * delta * std::sin(phi) / denom;
  r.delta = std::sqrt(0.25 + d2 * std::sin(phi) * std::sin(phi) / (denom * denom));
  r.srur_residual = 0.0;
  return r;
}

}  // namespace aeslab

#endif  // AESLAB_OSCILLATOR_STATES_HPP
