#ifndef AESLAB_COUPLED_AES_HPP
#define AESLAB_COUPLED_AES_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fock_core.hpp"
#include "mus_engine.hpp"
#include "special_functions.hpp"
#include "su2_aes.hpp"

namespace aeslab {

/// General element of the coupled algebra.  alpha_* multiply a, a_dag, I;
/// beta_minus multiplies J+, beta_plus multiplies J-, beta_3 multiplies J3.
struct AlgebraElement {
  Complex alpha_minus{0.0};
  Complex alpha_plus{0.0};
  Complex alpha_3{0.0};
  Complex beta_minus{0.0};
  Complex beta_plus{0.0};
  Complex beta_3{0.0};
};

inline Su2Coeffs spin_part(const AlgebraElement& e) {
  return {e.beta_minus, e.beta_plus, e.beta_3};
}

inline Complex b_factor(const AlgebraElement& e) {
  return su2_discriminant_root(spin_part(e));
}

inline AlgebraElement adjoint_element(const AlgebraElement& e) {
  AlgebraElement a;
  a.alpha_minus = std::conj(e.alpha_plus);
  a.alpha_plus = std::conj(e.alpha_minus);
  a.alpha_3 = std::conj(e.alpha_3);
  a.beta_minus = std::conj(e.beta_plus);
  a.beta_plus = std::conj(e.beta_minus);
  a.beta_3 = std::conj(e.beta_3);
  return a;
}

inline bool is_hermitian_element(const AlgebraElement& e, double tol = 1e-12) {
  return std::abs(e.alpha_plus - std::conj(e.alpha_minus)) <= tol &&
         std::abs(std::imag(e.alpha_3)) <= tol &&
         std::abs(e.beta_plus - std::conj(e.beta_minus)) <= tol &&
         std::abs(std::imag(e.beta_3)) <= tol;
}

inline LinearOperator element_matrix(const AlgebraElement& e, const SpaceSpec& spec) {
  const Operators ops = build_ops(spec);
  return {spec, e.alpha_minus * ops.a.mat + e.alpha_plus * ops.a_dag.mat +
                    e.alpha_3 * ops.id.mat + e.beta_minus * ops.j_plus.mat +
                    e.beta_plus * ops.j_minus.mat + e.beta_3 * ops.j3.mat};
}

namespace detail {

/// Matrix-free action of an element; row (n, s) for n < fock_dim - 1 agrees
/// with the untruncated operator whenever the input vanishes at the top level.
inline Eigen::VectorXcd apply_element(const AlgebraElement& e, const SpaceSpec& spec,
                                      const Eigen::VectorXcd& v) {
  const int sd = spec.spin_dim();
  const double j = spec.two_j / 2.0;
  Eigen::VectorXcd r(spec.dim());
  for (int n = 0; n < spec.fock_dim; ++n) {
    for (int s = 0; s < sd; ++s) {
      const double u = s - j;
      Complex acc = (e.alpha_3 + e.beta_3 * u) * v(n * sd + s);
      if (n + 1 < spec.fock_dim)
        acc += e.alpha_minus * std::sqrt(n + 1.0) * v((n + 1) * sd + s);
      if (n > 0) acc += e.alpha_plus * std::sqrt(double(n)) * v((n - 1) * sd + s);
      if (s > 0)
        acc += e.beta_minus * std::sqrt((j - u + 1.0) * (j + u)) * v(n * sd + s - 1);
      if (s + 1 < sd)
        acc += e.beta_plus * std::sqrt((j + u + 1.0) * (j - u)) * v(n * sd + s + 1);
      r(n * sd + s) = acc;
    }
  }
  return r;
}

/// Relative residual of the eigenvalue equation, top two Fock levels excluded
/// (those rows carry the truncation edge, not construction error).
inline double interior_residual(const AlgebraElement& e, const SpaceSpec& spec,
                                const Eigen::VectorXcd& v, Complex z) {
  const Eigen::VectorXcd r = apply_element(e, spec, v) - z * v;
  const int cut = std::max(0, (spec.fock_dim - 2) * spec.spin_dim());
  return r.head(cut).norm() / v.norm();
}

/// Number-basis coefficients h_n of exp(c2 a_dag^2 + c1 a_dag)|0>.
inline Eigen::VectorXcd gaussian_fock_coeffs(Complex c1, Complex c2, int fock_dim) {
  Eigen::VectorXcd h = Eigen::VectorXcd::Zero(fock_dim);
  h(0) = 1.0;
  if (fock_dim > 1) h(1) = c1;
  for (int n = 1; n + 1 < fock_dim; ++n)
    h(n + 1) =
        (c1 * h(n) + 2.0 * c2 * std::sqrt(double(n)) * h(n - 1)) / std::sqrt(n + 1.0);
  return h;
}

/// exp(eta a_dag) v, exact on the retained levels.  The matrix entry
/// eta^{n-m} sqrt(n!/m!)/(n-m)! is accumulated incrementally so no factorial
/// is ever formed on its own.
inline Eigen::VectorXcd conv_exp_adag(const SpaceSpec& spec, const Eigen::VectorXcd& v,
                                      Complex eta) {
  const int sd = spec.spin_dim();
  Eigen::VectorXcd r = Eigen::VectorXcd::Zero(spec.dim());
  for (int n = 0; n < spec.fock_dim; ++n) {
    Complex c{1.0};
    for (int m = n; m >= 0; --m) {
      for (int s = 0; s < sd; ++s) r(n * sd + s) += c * v(m * sd + s);
      c *= eta * std::sqrt(double(m)) / double(n - m + 1);
    }
  }
  return r;
}

/// exp(eta a) v; terminates on the finite support of v.
inline Eigen::VectorXcd conv_exp_a(const SpaceSpec& spec, const Eigen::VectorXcd& v,
                                   Complex eta) {
  const int sd = spec.spin_dim();
  Eigen::VectorXcd r = Eigen::VectorXcd::Zero(spec.dim());
  for (int n = 0; n < spec.fock_dim; ++n) {
    Complex c{1.0};
    for (int m = n; m < spec.fock_dim; ++m) {
      for (int s = 0; s < sd; ++s) r(n * sd + s) += c * v(m * sd + s);
      c *= eta * std::sqrt(m + 1.0) / double(m - n + 1);
    }
  }
  return r;
}

/// Polynomial bracket states of the degenerate family.  Rows index the boson
/// level (0..j-m), columns the spin weight.  kind: -1 ladders down from the
/// top weight, +1 ladders up from the bottom one; theta adds the extra
/// exp(theta J+) twist of the all-coefficients-nonzero branch (kind +1 only).
inline Eigen::MatrixXcd degenerate_bracket(int two_j, int two_m, Complex ratio, int kind,
                                           Complex theta = 0.0) {
  const int K = (two_j - two_m) / 2;  // number of ladder insertions
  const int sd = two_j + 1;
  Eigen::MatrixXcd bm = Eigen::MatrixXcd::Zero(K + 1, sd);
  for (int k = 0; k <= K; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const Complex ck = sign * static_cast<double>(binomial(K, k)) *
                       factorial_ratio_d(two_j - k, two_j) * detail::ipow(ratio, k);
    const double boson = std::sqrt(factorial_ratio_d(K - k, 0));
    if (theta == Complex{0.0}) {
      // single ladder power: J-^k |j,j> or J+^k |j,-j>, both of weight
      // sqrt(k! (2j)!/(2j-k)!) on the shifted component
      const int s = (kind < 0) ? two_j - k : k;
      const double spin =
          std::sqrt(factorial_ratio_d(k, 0) * factorial_ratio_d(two_j, two_j - k));
      bm(K - k, s) += ck * boson * spin;
    } else {
      // J+^k exp(theta J+)|j,-j>: component q >= k picks theta^{q-k}/(q-k)!
      std::vector<Complex> tp(two_j + 1);
      tp[0] = 1.0;
      for (int i = 1; i <= two_j; ++i) tp[i] = tp[i - 1] * theta / double(i);
      for (int q = k; q <= two_j; ++q) {
        const double spin =
            std::sqrt(factorial_ratio_d(q, 0) * factorial_ratio_d(two_j, two_j - q));
        bm(K - k, q) += ck * boson * tp[q - k] * spin;
      }
    }
  }
  return bm;
}

/// Gaussian exponential applied to a low-degree bracket: out(n, s) =
/// sum_m bm(m, s) h_{n-m} sqrt(C(n, m)), the normally ordered convolution.
inline Eigen::VectorXcd gaussian_times_bracket(const SpaceSpec& spec, Complex c1,
                                               Complex c2, const Eigen::MatrixXcd& bm) {
  const int sd = spec.spin_dim();
  const Eigen::VectorXcd h = gaussian_fock_coeffs(c1, c2, spec.fock_dim);
  Eigen::VectorXcd r = Eigen::VectorXcd::Zero(spec.dim());
  const int deg = std::min<int>(bm.rows() - 1, spec.fock_dim - 1);
  for (int n = 0; n < spec.fock_dim; ++n) {
    for (int m = 0; m <= std::min(deg, n); ++m) {
      const double w = std::sqrt(generalized_binomial(double(n), m));
      for (int s = 0; s < sd; ++s) r(n * sd + s) += bm(m, s) * h(n - m) * w;
    }
  }
  return r;
}

}  // namespace detail

/// Coefficients of a hermitian combination
///   a1 a + conj(a1) a_dag + a2 I + a3 J+ + conj(a3) J- + a4 J3.
struct HermitianCoeffs {
  Complex a1{0.0};
  double a2 = 0.0;
  Complex a3{0.0};
  double a4 = 0.0;
};

inline AlgebraElement hermitian_element(const HermitianCoeffs& h) {
  AlgebraElement e;
  e.alpha_minus = h.a1;
  e.alpha_plus = std::conj(h.a1);
  e.alpha_3 = h.a2;
  e.beta_minus = h.a3;
  e.beta_plus = std::conj(h.a3);
  e.beta_3 = h.a4;
  return e;
}

inline LinearOperator hermitian_matrix(const HermitianCoeffs& h, const SpaceSpec& spec) {
  return element_matrix(hermitian_element(h), spec);
}

/// A + i lambda B for hermitian A, B.
inline AlgebraElement element_from_ab(const HermitianCoeffs& A, const HermitianCoeffs& B,
                                      Complex lambda) {
  const Complex il = iunit * lambda;
  AlgebraElement e;
  e.alpha_minus = A.a1 + il * B.a1;
  e.alpha_plus = std::conj(A.a1) + il * std::conj(B.a1);
  e.alpha_3 = Complex{A.a2} + il * B.a2;
  e.beta_minus = A.a3 + il * B.a3;
  e.beta_plus = std::conj(A.a3) + il * std::conj(B.a3);
  e.beta_3 = Complex{A.a4} + il * B.a4;
  return e;
}

/// C with [A, B] = iC; closed under the hermitian shape above (no a term).
inline HermitianCoeffs commutator_coeffs(const HermitianCoeffs& A,
                                         const HermitianCoeffs& B) {
  HermitianCoeffs c;
  c.a1 = 0.0;
  c.a2 = -2.0 * std::imag(std::conj(A.a1) * B.a1);
  c.a3 = iunit * (A.a3 * B.a4 - A.a4 * B.a3);
  c.a4 = -4.0 * std::imag(std::conj(A.a3) * B.a3);
  return c;
}

inline LinearOperator commutator_c(const HermitianCoeffs& A, const HermitianCoeffs& B,
                                   const SpaceSpec& spec) {
  return hermitian_matrix(commutator_coeffs(A, B), spec);
}

/// Constructed eigenstate bundle: element * state = z * state; b is the spin
/// discriminant root used for the branch labeling (0 in the degenerate family).
struct CoupledAes {
  JointState state;
  Complex z{0.0};
  Complex b{0.0};
};

namespace detail {

inline void check_boson_normalizable(const AlgebraElement& e, const char* who) {
  if (std::abs(e.alpha_minus) == 0.0)
    throw std::invalid_argument(std::string(who) +
                                ": alpha_minus = 0 admits no normalizable eigenstate");
  if (std::abs(e.alpha_plus / e.alpha_minus) >= 1.0)
    throw std::invalid_argument(std::string(who) +
                                ": |alpha_plus / alpha_minus| >= 1 is not normalizable");
}

inline void check_residual(const AlgebraElement& e, const JointState& st, Complex z,
                           const char* who) {
  const double res = interior_residual(e, st.spec, st.coeffs, z);
  if (!(res <= 1e-8))
    throw NumericalError(std::string(who) + ": eigen-residual " + std::to_string(res) +
                         " above 1e-8");
}

}  // namespace detail

/// Nondegenerate eigenstate (b != 0): Gaussian boson factor times the
/// disentangled spin eigenvector, eigenvalue z = rho + alpha_3 + m b.  rho is
/// the free boson part of the eigenvalue picked by the caller.
inline CoupledAes aes_general(const AlgebraElement& e, int two_j, int two_m, Complex rho,
                              int fock_dim_hint = 32, double tail_tol = 1e-10) {
  detail::check_boson_normalizable(e, "aes_general");
  const Su2Coeffs sc = spin_part(e);
  if (std::max({std::abs(sc.c_jplus), std::abs(sc.c_jminus), std::abs(sc.c_j3)}) == 0.0)
    throw std::invalid_argument("aes_general: spin part vanishes, use aes_degenerate");
  const Su2Solution spin = su2_aes_solve(two_j, sc);
  if (spin.degenerate)
    throw std::invalid_argument("aes_general: b = 0 is the degenerate family, use aes_degenerate");
  const Su2Eigenpair* pair = nullptr;
  for (const auto& p : spin.pairs)
    if (p.two_m == two_m) pair = &p;
  if (!pair)
    throw std::invalid_argument("aes_general: no spin branch labeled by this two_m");

  const Complex z = rho + e.alpha_3 + pair->eigenvalue;
  const Complex c1 = rho / e.alpha_minus;
  const Complex c2 = -0.5 * e.alpha_plus / e.alpha_minus;
  const Eigen::VectorXcd& sv = pair->state.coeffs;

  JointState st = detail::grow_until_converged(
      fock_dim_hint, two_j, [&](const SpaceSpec& spec) {
        const Eigen::VectorXcd h = detail::gaussian_fock_coeffs(c1, c2, spec.fock_dim);
        Eigen::VectorXcd v(spec.dim());
        for (int n = 0; n < spec.fock_dim; ++n)
          for (int s = 0; s < spec.spin_dim(); ++s) v(n * spec.spin_dim() + s) = h(n) * sv(s);
        return v;
      },
      tail_tol);
  detail::check_residual(e, st, z, "aes_general");
  return {std::move(st), z, spin.b};
}

/// Degenerate eigenstate (b = 0): polynomial bracket under the bare Gaussian
/// exponential, eigenvalue z = rho + alpha_3 for every branch label.  two_m
/// names the spin weight of the bracket's boson-degree-zero component.
inline CoupledAes aes_degenerate(const AlgebraElement& e, int two_j, int two_m, Complex rho,
                                 int fock_dim_hint = 32, double tail_tol = 1e-10) {
  detail::check_boson_normalizable(e, "aes_degenerate");
  if (!SpaceSpec(1, two_j).valid_two_m(two_m))
    throw std::invalid_argument("aes_degenerate: bad two_m label");
  const Su2Coeffs sc = spin_part(e);
  const double scale =
      std::max({std::abs(sc.c_jplus), std::abs(sc.c_jminus), std::abs(sc.c_j3)});
  const Complex z = rho + e.alpha_3;
  const Complex c1 = rho / e.alpha_minus;
  const Complex c2 = -0.5 * e.alpha_plus / e.alpha_minus;

  Eigen::MatrixXcd bm;
  if (scale == 0.0) {
    // spin is a spectator; plain Gaussian times |j, m>
    bm = Eigen::MatrixXcd::Zero(1, two_j + 1);
    bm(0, (two_m + two_j) / 2) = 1.0;
  } else {
    if (std::abs(b_factor(e)) > 1e-12 * scale)
      throw std::invalid_argument("aes_degenerate: b != 0, use aes_general");
    const bool mz = std::abs(e.beta_minus) < 1e-14 * scale;
    const bool pz = std::abs(e.beta_plus) < 1e-14 * scale;
    const bool tz = std::abs(e.beta_3) < 1e-14 * scale;
    if (pz && tz && !mz) {
      bm = detail::degenerate_bracket(two_j, two_m, e.alpha_minus / e.beta_minus, -1);
    } else if (mz && tz && !pz) {
      // the bracket argument counts insertions from the bottom weight, so the
      // degree-zero component lands on weight two_m only under the mirror
      bm = detail::degenerate_bracket(two_j, -two_m, e.alpha_minus / e.beta_plus, +1);
    } else if (!pz && !tz && !mz) {
      const Complex t1 = e.beta_3 / (2.0 * e.beta_plus);
      const Complex t2 = -2.0 * e.beta_minus / e.beta_3;
      if (std::abs(t1 - t2) > 1e-10 * std::max(1.0, std::abs(t1)))
        throw std::invalid_argument(
            "aes_degenerate: the two expressions for the J+ twist disagree; "
            "coefficients are not an exact b = 0 triple");
      bm = detail::degenerate_bracket(two_j, -two_m, e.alpha_minus / e.beta_plus, +1, t1);
    } else {
      throw std::invalid_argument(
          "aes_degenerate: spin coefficient pattern matches no b = 0 branch");
    }
  }

  JointState st = detail::grow_until_converged(
      fock_dim_hint, two_j,
      [&](const SpaceSpec& spec) { return detail::gaussian_times_bracket(spec, c1, c2, bm); },
      tail_tol);
  detail::check_residual(e, st, z, "aes_degenerate");
  return {std::move(st), z, 0.0};
}

/// Quadrature pair mixing the boson and spin ladders.
struct SuperXpSpec {
  Complex mu{1.0};
  Complex tau{0.0};
  DeltaPhi param;
  Complex z{0.0};
};

inline HermitianCoeffs super_x_coeffs(Complex mu, Complex tau) {
  return {mu / std::sqrt(2.0), 0.0, tau / std::sqrt(2.0), 0.0};
}

inline HermitianCoeffs super_p_coeffs(Complex mu, Complex tau) {
  return {-iunit * mu / std::sqrt(2.0), 0.0, -iunit * tau / std::sqrt(2.0), 0.0};
}

/// Dense (X, P) pair; [X, P] = i(|mu|^2 I + 2|tau|^2 J3).
inline std::pair<LinearOperator, LinearOperator> super_xp(Complex mu, Complex tau,
                                                          const SpaceSpec& spec) {
  if (std::abs(mu) == 0.0) throw std::invalid_argument("super_xp: mu must be nonzero");
  return {hermitian_matrix(super_x_coeffs(mu, tau), spec),
          hermitian_matrix(super_p_coeffs(mu, tau), spec)};
}

/// lambda = 1 eigenstates of X + iP: displaced bracket states, eigenvalue z.
inline CoupledAes scs_lambda1(const SuperXpSpec& s, int two_j, int two_m,
                              int fock_dim_hint = 32) {
  if (std::abs(s.mu) == 0.0) throw std::invalid_argument("scs_lambda1: mu must be nonzero");
  if (std::abs(s.tau) == 0.0)
    throw std::invalid_argument("scs_lambda1: tau = 0 leaves the spin side undetermined");
  if (!SpaceSpec(1, two_j).valid_two_m(two_m))
    throw std::invalid_argument("scs_lambda1: bad two_m label");
  const Complex eta = s.z / (s.mu * std::sqrt(2.0));
  const Eigen::MatrixXcd bm = detail::degenerate_bracket(two_j, two_m, s.mu / s.tau, -1);

  JointState st = detail::grow_until_converged(
      fock_dim_hint, two_j, [&](const SpaceSpec& spec) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(spec.dim());
        const int rows = std::min<int>(bm.rows(), spec.fock_dim);
        for (int n = 0; n < rows; ++n)
          for (int sp = 0; sp < spec.spin_dim(); ++sp) v(n * spec.spin_dim() + sp) = bm(n, sp);
        v = detail::conv_exp_a(spec, v, -std::conj(eta));
        return detail::conv_exp_adag(spec, v, eta);
      });
  const AlgebraElement e =
      element_from_ab(super_x_coeffs(s.mu, s.tau), super_p_coeffs(s.mu, s.tau), 1.0);
  detail::check_residual(e, st, s.z, "scs_lambda1");
  return {std::move(st), s.z, 0.0};
}

/// <C> on the lambda = 1 state labeled (j, m); spin weights are unchanged by
/// the displacement, so the average is a ratio of two short power sums.
inline double c_mean_lambda1(int two_j, int two_m, Complex mu, Complex tau) {
  if (std::abs(tau) == 0.0)
    throw std::invalid_argument("c_mean_lambda1: tau must be nonzero");
  const int K = (two_j - two_m) / 2;
  const double u = std::norm(mu) / std::norm(tau);
  double s0 = 0.0, s1 = 0.0;
  for (int k = 0; k <= K; ++k) {
    const double ck = static_cast<double>(binomial(K, k)) *
                      factorial_ratio_d(two_j - k, two_j) * std::pow(u, k);
    s0 += ck;
    s1 += k * ck;
  }
  return std::norm(mu) + 2.0 * std::norm(tau) * (two_j / 2.0 - s1 / s0);
}

/// Squared norm of the undisplaced lambda = 1 bracket state.
inline double xp_norm2_lambda1(int two_j, int two_m, Complex mu, Complex tau) {
  const int K = (two_j - two_m) / 2;
  const double u = std::norm(mu) / std::norm(tau);
  double acc = 0.0;
  for (int k = 0; k <= K; ++k)
    acc += static_cast<double>(binomial(K, k)) * factorial_ratio_d(two_j - k, two_j) *
           std::pow(u, k);
  return factorial_ratio_d(K, 0) * acc;
}

/// <C> on the squeezed (0 < delta < 1) XP eigenstate labeled (j, m).
inline double xp_mean_c(int two_j, int two_m, Complex mu, Complex tau, double delta) {
  const double j = two_j / 2.0;
  const double am = std::abs(two_m) / 2.0;
  const double op = (1.0 + delta) * (1.0 + delta);
  const double y = 1.0 - 8.0 * delta / op;
  const int deg = (two_j - std::abs(two_m)) / 2;
  double omega = 0.0;
  if (deg >= 1)
    omega = jacobi_p<double>(deg - 1, -double(two_j), 1.0, y) /
            jacobi_p<double>(deg, -double(two_j) - 1.0, 0.0, y);
  return std::norm(mu) +
         2.0 * std::norm(tau) * ((1.0 - delta) / (1.0 + delta)) *
             (j - 4.0 * (j + am) * delta * omega / op);
}

/// Squeezed XP eigenstate for lambda off the unit-circle special points:
/// boson Gaussian factor times the spin disentangling pair, eigenvalue z.
inline CoupledAes general_squeezed_xp(const SuperXpSpec& s, int two_j, int two_m,
                                      int fock_dim_hint = 32) {
  if (std::abs(s.mu) == 0.0)
    throw std::invalid_argument("general_squeezed_xp: mu must be nonzero");
  if (std::abs(s.tau) == 0.0)
    throw std::invalid_argument("general_squeezed_xp: tau = 0 has no spin twist; "
                                "use the oscillator constructions");
  const double delta = s.param.delta;
  const double phi = wrap_phi(s.param.phi);
  if (!(delta > 0.0))
    throw std::invalid_argument("general_squeezed_xp: delta = 0 is the lambda = 1 "
                                "family, use scs_lambda1");
  if (!(delta < 1.0))
    throw std::invalid_argument("general_squeezed_xp: delta >= 1 is not normalizable");
  if (!SpaceSpec(1, two_j).valid_two_m(two_m))
    throw std::invalid_argument("general_squeezed_xp: bad two_m label");

  const Complex lambda = lambda_from_delta_phi(delta, phi);
  const double phi_u = std::arg(s.mu);
  const Complex sd = std::sqrt(delta) * std::exp(iunit * (phi / 2.0));
  const Complex ed = Complex{1.0} + delta * std::exp(iunit * phi);
  const double m = two_m / 2.0;
  const Complex atau = s.tau / std::abs(s.tau);

  // bare Gaussian data: the squeeze-displace product collapses to
  // exp(c2 a_dag^2 + c1 a_dag)|0> with c1 the undressed displacement
  const Complex eta_m =
      (s.z * ed / std::sqrt(2.0) - 2.0 * m * std::abs(s.tau) * sd) / s.mu;
  const Complex c2 = -0.5 * delta * std::exp(iunit * (phi - 2.0 * phi_u));
  const Complex b_el = 2.0 * std::sqrt(2.0) * std::abs(s.tau) * sd / ed;

  const Operators sops = build_ops(SpaceSpec(1, two_j));
  Eigen::VectorXcd sv = detail::ladder_exp_on_basis(
      sops, -atau / sd, std::conj(atau) * sd / 2.0, two_m);

  JointState st = detail::grow_until_converged(
      fock_dim_hint, two_j, [&](const SpaceSpec& spec) {
        const Eigen::VectorXcd h = detail::gaussian_fock_coeffs(eta_m, c2, spec.fock_dim);
        Eigen::VectorXcd v(spec.dim());
        for (int n = 0; n < spec.fock_dim; ++n)
          for (int sp = 0; sp < spec.spin_dim(); ++sp)
            v(n * spec.spin_dim() + sp) = h(n) * sv(sp);
        return v;
      });
  const AlgebraElement e =
      element_from_ab(super_x_coeffs(s.mu, s.tau), super_p_coeffs(s.mu, s.tau), lambda);
  detail::check_residual(e, st, s.z, "general_squeezed_xp");
  return {std::move(st), s.z, b_el};
}

/// Closed-form dispersion data of the squeezed XP eigenstate.
inline DispersionReport xp_dispersions(const SuperXpSpec& s, int two_j, int two_m) {
  const double delta = s.param.delta;
  const double phi = wrap_phi(s.param.phi);
  if (!(delta >= 0.0 && delta < 1.0))
    throw std::invalid_argument("xp_dispersions: needs 0 <= delta < 1");
  const Complex lambda = lambda_from_delta_phi(delta, phi);
  const double mean_c = xp_mean_c(two_j, two_m, s.mu, s.tau, delta);
  return mus_predicted_report(lambda, s.z, mean_c);
}

}  // namespace aeslab

#endif  // AESLAB_COUPLED_AES_HPP
