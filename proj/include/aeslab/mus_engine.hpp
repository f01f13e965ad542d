#ifndef AESLAB_MUS_ENGINE_HPP
#define AESLAB_MUS_ENGINE_HPP

#include <cmath>

#include "aeslab/fock_core.hpp"
#include "aeslab/types.hpp"

namespace aeslab {

/// Polar parameters of the eigenvalue-equation weight:
///   (1 - lambda) / (1 + lambda) = delta * exp(i phi),
/// delta >= 0, phi in [-pi/2, 3pi/2).
struct DeltaPhi {
  double delta = 0.0;
  double phi = 0.0;
};

inline double wrap_phi(double phi) {
  double p = std::remainder(phi, 2.0 * pi);  // (-pi, pi]
  if (p < -pi / 2.0) p += 2.0 * pi;
  return p;
}

inline Complex lambda_from_delta_phi(double delta, double phi) {
  if (delta < 0.0) throw std::invalid_argument("lambda_from_delta_phi: delta must be >= 0");
  const Complex w = delta * std::exp(iunit * phi);
  if (std::abs(1.0 + w) < 1e-14)
    throw std::invalid_argument("lambda_from_delta_phi: delta e^{i phi} = -1 has no finite weight");
  const Complex lambda = (1.0 - w) / (1.0 + w);
  if (std::abs(lambda) < 1e-14)
    throw std::invalid_argument("lambda_from_delta_phi: weight 0 (delta = 1, phi = 0) is degenerate");
  return lambda;
}

inline DeltaPhi delta_phi_from_lambda(Complex lambda) {
  if (std::abs(lambda) < 1e-14)
    throw std::invalid_argument("delta_phi_from_lambda: lambda = 0 is degenerate");
  if (std::abs(lambda + 1.0) < 1e-14)
    throw std::invalid_argument("delta_phi_from_lambda: lambda = -1 is degenerate");
  const Complex w = (1.0 - lambda) / (1.0 + lambda);
  DeltaPhi dp;
  dp.delta = std::abs(w);
  dp.phi = dp.delta == 0.0 ? 0.0 : wrap_phi(std::arg(w));
  return dp;
}

/// Closed-form first and second moments of a normalized solution of
/// (A + i lambda B) |psi> = beta |psi> with hermitian A, B, given <C> where
/// [A, B] = iC.  Valid for Re lambda != 0.
inline DispersionReport mus_predicted_report(Complex lambda, Complex beta, double mean_c) {
  const double re = std::real(lambda);
  const double im = std::imag(lambda);
  if (std::abs(re) < 1e-14)
    throw std::invalid_argument("mus_predicted_report: Re lambda = 0 branch needs <F>, not <C>");
  DispersionReport r;
  r.mean_a = std::real(beta) + (im / re) * std::imag(beta);
  r.mean_b = std::imag(beta) / re;
  r.var_a = std::abs(std::norm(lambda) * mean_c / (2.0 * re));
  r.var_b = std::abs(mean_c / (2.0 * re));
  r.mean_c = mean_c;
  r.mean_f = (im / re) * mean_c;
  r.delta = std::abs(std::abs(lambda) * mean_c / (2.0 * re));
  r.srur_residual = 0.0;
  return r;
}

/// Variance triple for the purely imaginary weight branch (Re lambda = 0),
/// where the commutator mean drops out and <F> carries the uncertainty.
inline DispersionReport mus_predicted_report_imaginary(Complex lambda, double mean_a,
                                                       double mean_b, double mean_f) {
  const double im = std::imag(lambda);
  if (std::abs(std::real(lambda)) > 1e-14 || im == 0.0)
    throw std::invalid_argument("mus_predicted_report_imaginary: lambda must be nonzero imaginary");
  DispersionReport r;
  r.mean_a = mean_a;
  r.mean_b = mean_b;
  r.var_a = 0.5 * std::abs(im * mean_f);
  r.var_b = 0.5 * std::abs(mean_f / im);
  r.mean_c = 0.0;
  r.mean_f = mean_f;
  r.delta = 0.5 * std::abs(mean_f);
  r.srur_residual = 0.0;
  return r;
}

/// || (A + i lambda B) psi - beta psi || / || psi ||.
inline double eigen_residual(const LinearOperator& A, const LinearOperator& B, Complex lambda,
                             Complex beta, const JointState& state) {
  const Eigen::VectorXcd v =
      A.mat * state.coeffs + iunit * lambda * (B.mat * state.coeffs) - beta * state.coeffs;
  return v.norm() / state.coeffs.norm();
}

}  // namespace aeslab

#endif  // AESLAB_MUS_ENGINE_HPP
