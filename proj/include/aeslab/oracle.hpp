#ifndef AESLAB_ORACLE_HPP
#define AESLAB_ORACLE_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "aeslab/coupled_aes.hpp"
#include "aeslab/fock_core.hpp"
#include "aeslab/special_functions.hpp"
#include "aeslab/su2_aes.hpp"
#include "aeslab/types.hpp"

namespace aeslab {

/// One holomorphic-representation solution: exp(c_quad z^2 + c_linear z)
/// times a spin-valued polynomial, poly(k, s) the zeta^k monomial coefficient
/// on weight component s.  c_quad = -alpha_plus / (2 alpha_minus) always.
struct BargmannSolution {
  Complex c_linear{0.0};
  Complex c_quad{0.0};
  Eigen::MatrixXcd poly;
  Complex eigenvalue{0.0};
  int two_m = 0;  // branch label; for collapsed branches the seed weight
};

/// Spin-block first-order system matrix, assembled directly from the weight
/// lattice.  Must agree entrywise with the generator combination used by the
/// state constructors.
inline Eigen::MatrixXcd appendix_spin_matrix(const AlgebraElement& e, int two_j) {
  const int sd = two_j + 1;
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(sd, sd);
  const double j = two_j / 2.0;
  for (int s = 0; s < sd; ++s) {
    const double u = -j + s;
    a(s, s) = e.beta_3 * u;
    if (s + 1 < sd) a(s + 1, s) += e.beta_minus * std::sqrt((j - u) * (j + u + 1.0));
    if (s - 1 >= 0) a(s - 1, s) += e.beta_plus * std::sqrt((j + u) * (j - u + 1.0));
  }
  return a;
}

namespace detail {

/// Triangular eigenvector columns when one ladder coefficient vanishes but
/// the diagonal one does not; explicit terminating sums, labels tied to the
/// principal branch root so they match the solver's.
inline Eigen::VectorXcd triangular_eigvec(const AlgebraElement& e, int two_j, int two_m) {
  const Su2Coeffs sc = spin_part(e);
  const double scale =
      std::max({std::abs(sc.c_jplus), std::abs(sc.c_jminus), std::abs(sc.c_j3)});
  if (std::abs(sc.c_j3) < 1e-14 * scale)
    throw std::invalid_argument("triangular_eigvec: needs a nonzero diagonal coefficient");
  const Complex b = su2_discriminant_root(sc);
  // b = +- beta_3 exactly; relabel onto the diagonal if the root flipped
  const int flip = (std::abs(b - sc.c_j3) <= std::abs(b + sc.c_j3)) ? 1 : -1;
  const int two_md = flip * two_m;
  const SpaceSpec spec(1, two_j);
  if (!spec.valid_two_m(two_m)) throw std::invalid_argument("triangular_eigvec: bad two_m");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(two_j + 1);
  const bool lower = std::abs(sc.c_jminus) < 1e-14 * scale;  // only J+ ladders
  if (!lower && std::abs(sc.c_jplus) >= 1e-14 * scale)
    throw std::invalid_argument("triangular_eigvec: both ladder coefficients nonzero");
  if (lower) {
    const Complex step = -sc.c_jplus / sc.c_j3;
    for (int two_u = two_md; two_u <= two_j; two_u += 2) {
      const int k = (two_u - two_md) / 2;
      const double w = std::sqrt((factorial_ratio((two_j + two_u) / 2, 0) /
                                  factorial_ratio((two_j - two_u) / 2, 0))
                                     .convert_to<double>());
      v(spec.index(0, two_u)) =
          w / factorial_ratio_d(k, 0) * ipow(step, k);
    }
  } else {
    const Complex step = sc.c_jminus / sc.c_j3;
    for (int two_u = -two_j; two_u <= two_md; two_u += 2) {
      const int k = (two_md - two_u) / 2;
      const double w = std::sqrt((factorial_ratio((two_j - two_u) / 2, 0) /
                                  factorial_ratio((two_j + two_u) / 2, 0))
                                     .convert_to<double>());
      v(spec.index(0, two_u)) =
          w / factorial_ratio_d(k, 0) * ipow(step, k);
    }
  }
  return v;
}

}  // namespace detail

/// All holomorphic solutions of (element - z) psi = 0 at fixed eigenvalue z.
/// Split branches (b != 0) carry a constant spin column each; the collapsed
/// case integrates the spin system iteratively, one polynomial solution per
/// seed weight.  alpha_minus = 0 admits no solution of this form.
inline std::vector<BargmannSolution> bargmann_solve(const AlgebraElement& e, int two_j,
                                                    Complex z) {
  if (std::abs(e.alpha_minus) == 0.0)
    throw std::invalid_argument("bargmann_solve: alpha_minus = 0 admits no solution");
  detail::check_boson_normalizable(e, "bargmann_solve");
  const Su2Coeffs sc = spin_part(e);
  const double scale =
      std::max({std::abs(sc.c_jplus), std::abs(sc.c_jminus), std::abs(sc.c_j3)});
  const Complex b = (scale == 0.0) ? Complex{0.0} : su2_discriminant_root(sc);
  const Complex c_quad = -0.5 * e.alpha_plus / e.alpha_minus;
  const int sd = two_j + 1;
  std::vector<BargmannSolution> out;

  if (scale > 0.0 && std::abs(b) > 1e-12 * scale) {
    for (int two_m = -two_j; two_m <= two_j; two_m += 2) {
      BargmannSolution sol;
      sol.two_m = two_m;
      sol.eigenvalue = z;
      sol.c_quad = c_quad;
      sol.c_linear = (z - e.alpha_3 - 0.5 * double(two_m) * b) / e.alpha_minus;
      Eigen::VectorXcd col;
      if (std::abs(sc.c_jminus) >= 1e-14 * scale)
        col = su2_eigvec_jacobi(two_j, sc, two_m);
      else
        col = detail::triangular_eigvec(e, two_j, two_m);
      sol.poly = Eigen::MatrixXcd::Zero(1, sd);
      sol.poly.row(0) = col.transpose();
      out.push_back(std::move(sol));
    }
    return out;
  }

  // collapsed spin branch: the system matrix is nilpotent, so the iterative
  // antiderivatives terminate and every seed weight yields a polynomial of
  // degree at most two_j; rounding keeps powers of a dense matrix from
  // reaching bitwise zero, so the step test is relative
  const Eigen::MatrixXcd a = appendix_spin_matrix(e, two_j);
  const double anorm = a.norm();
  for (int s = 0; s < sd; ++s) {
    BargmannSolution sol;
    sol.two_m = 2 * s - two_j;
    sol.eigenvalue = z;
    sol.c_quad = c_quad;
    sol.c_linear = (z - e.alpha_3) / e.alpha_minus;
    Eigen::MatrixXcd poly = Eigen::MatrixXcd::Zero(sd, sd);
    Eigen::VectorXcd wk = Eigen::VectorXcd::Zero(sd);
    wk(s) = 1.0;
    Complex fac{1.0};
    int deg = 0;
    for (int k = 0; k <= two_j; ++k) {
      poly.row(k) = (fac * wk).transpose();
      deg = k;
      const double prev = wk.norm();
      wk = a * wk;
      if (wk.norm() <= 1e-12 * anorm * prev) break;
      fac *= -1.0 / (e.alpha_minus * double(k + 1));
    }
    sol.poly = poly.topRows(deg + 1);
    out.push_back(std::move(sol));
  }
  return out;
}

/// Fock-basis state of one holomorphic solution; the Gaussian factor is
/// grown until the truncation tail is below tail_tol, then normalized.
inline JointState bargmann_to_fock(const BargmannSolution& sol, int two_j, int fock_dim,
                                   double tail_tol = 1e-10) {
  const int deg = static_cast<int>(sol.poly.rows()) - 1;
  Eigen::MatrixXcd bm = sol.poly;
  for (int k = 0; k <= deg; ++k)
    bm.row(k) *= std::sqrt(factorial_ratio_d(k, 0));  // monomial -> Fock weight
  return detail::grow_until_converged(
      std::max(fock_dim, deg + 4), two_j,
      [&](const SpaceSpec& spec) {
        return detail::gaussian_times_bracket(spec, sol.c_linear, sol.c_quad, bm);
      },
      tail_tol);
}

/// Every eigenstate of the element at eigenvalue z, via the holomorphic
/// route.  2j+1 states in both regimes; fock_dim is the starting truncation.
inline std::vector<JointState> appendix_b_solve(const AlgebraElement& e, int two_j, Complex z,
                                                int fock_dim, double tail_tol = 1e-10) {
  std::vector<JointState> out;
  for (const BargmannSolution& sol : bargmann_solve(e, two_j, z))
    out.push_back(bargmann_to_fock(sol, two_j, fock_dim, tail_tol));
  return out;
}

/// norm of (element - z) state, split by where it lands: the top two Fock
/// rows absorb the truncation edge, everything below is the honest residual.
struct ResidualReport {
  double full;
  double edge;
  double interior;
};

inline ResidualReport residual(const AlgebraElement& e, const JointState& st, Complex z) {
  const Eigen::VectorXcd r =
      detail::apply_element(e, st.spec, st.coeffs) - z * st.coeffs;
  const double nrm = st.coeffs.norm();
  if (nrm == 0.0) throw NumericalError("residual: zero state");
  const int sd = st.spec.spin_dim();
  const int cut = std::max(0, (st.spec.fock_dim - 2) * sd);
  const double interior = r.head(cut).norm() / nrm;
  const double edge = r.tail(r.size() - cut).norm() / nrm;
  return {r.norm() / nrm, edge, interior};
}

struct DenseEigen {
  Eigen::VectorXcd values;   // complex-lexicographic order (re, then im)
  Eigen::MatrixXcd vectors;  // columns follow values
};

/// Dense spectrum of the element on a finite truncation.  The truncated
/// boson ladder pollutes the large-|n| part of the spectrum; callers compare
/// against closed forms only where the spin block dominates.
inline DenseEigen dense_eigen(const AlgebraElement& e, const SpaceSpec& spec) {
  const Eigen::MatrixXcd m = element_matrix(e, spec).mat;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, true);
  if (es.info() != Eigen::Success)
    throw NumericalError("dense_eigen: eigensolver did not converge");
  const int d = spec.dim();
  std::vector<int> idx(d);
  std::iota(idx.begin(), idx.end(), 0);
  const Eigen::VectorXcd& ev = es.eigenvalues();
  std::sort(idx.begin(), idx.end(), [&](int a, int b2) {
    if (ev(a).real() != ev(b2).real()) return ev(a).real() < ev(b2).real();
    return ev(a).imag() < ev(b2).imag();
  });
  DenseEigen r;
  r.values.resize(d);
  r.vectors.resize(d, d);
  for (int i = 0; i < d; ++i) {
    r.values(i) = ev(idx[i]);
    r.vectors.col(i) = es.eigenvectors().col(idx[i]);
  }
  return r;
}

/// <J3> on the split-branch spin eigenvector labeled (j, m), by the
/// power-sum/Jacobi closed form.  Needs both b != 0 and a nonzero J-
/// coefficient; an independent route from expectation values.
inline double eigvec_mean_j3(int two_j, int two_m, const Su2Coeffs& c) {
  const Complex b = su2_discriminant_root(c);
  const double scale =
      std::max({std::abs(c.c_jplus), std::abs(c.c_jminus), std::abs(c.c_j3)});
  if (std::abs(b) < 1e-12 * scale)
    throw std::invalid_argument("eigvec_mean_j3: degenerate combination");
  if (std::abs(c.c_jminus) < 1e-14 * scale || std::abs(c.c_jplus) < 1e-14 * scale)
    throw std::invalid_argument("eigvec_mean_j3: needs both ladder coefficients nonzero");
  const double j = two_j / 2.0;
  const double m = two_m / 2.0;
  const double am = std::abs(two_m) / 2.0;
  const double sp = 1.0 + std::norm(2.0 * c.c_jplus / (c.c_j3 - b));
  const double sm = 1.0 + std::norm(2.0 * c.c_jplus / (c.c_j3 + b));
  const double t = std::norm(b / c.c_jminus);
  const double y = sp * sm - sp - sm;
  const double arg = 1.0 - 2.0 * t / (sp * sm);
  const int nd = (two_j - std::abs(two_m)) / 2;
  const double omega =
      (nd >= 1) ? jacobi_p<double>(nd - 1, -double(two_j), 1.0, arg) /
                      jacobi_p<double>(nd, -double(two_j) - 1.0, 0.0, arg)
                : 0.0;
  return (j * y + m * (sp - sm)) / (sp * sm) -
         (j + am) * y * t / (sp * sp * sm * sm) * omega;
}

/// Closed-form normalization of the oscillator Gaussian
/// exp(-eta1 zeta^2 / 2 + eta2 zeta): unit-norm scaling constant.
inline double ho_bargmann_norm(Complex eta1, Complex eta2) {
  const double d2 = std::norm(eta1);
  if (d2 >= 1.0) throw std::invalid_argument("ho_bargmann_norm: |eta1| must be < 1");
  const double expo =
      (std::norm(eta2) - std::real(std::conj(eta1) * eta2 * eta2)) / (1.0 - d2);
  return std::pow(1.0 - d2, 0.25) * std::exp(-0.5 * expo);
}

/// Exact squared Bargmann norm of a spin-valued polynomial: each monomial
/// zeta^k contributes k! per squared coefficient.
inline double polynomial_norm2(const Eigen::MatrixXcd& poly) {
  double acc = 0.0;
  for (int k = 0; k < poly.rows(); ++k)
    acc += factorial_ratio_d(k, 0) * poly.row(k).squaredNorm();
  return acc;
}

}  // namespace aeslab

#endif  // AESLAB_ORACLE_HPP
