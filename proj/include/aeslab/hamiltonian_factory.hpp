#ifndef AESLAB_HAMILTONIAN_FACTORY_HPP
#define AESLAB_HAMILTONIAN_FACTORY_HPP

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <unsupported/Eigen/MatrixFunctions>
#include <utility>

#include "aeslab/coupled_aes.hpp"
#include "aeslab/fock_core.hpp"
#include "aeslab/special_functions.hpp"
#include "aeslab/su2_aes.hpp"
#include "aeslab/types.hpp"

namespace aeslab {

/// Zero-extend a state to a larger Fock truncation (same spin space).
inline JointState pad_state(const JointState& st, int fock_dim) {
  if (fock_dim < st.spec.fock_dim)
    throw std::invalid_argument("pad_state: target truncation is smaller than the source");
  const SpaceSpec spec(fock_dim, st.spec.two_j);
  JointState out{spec, Eigen::VectorXcd::Zero(spec.dim()), st.norm_tail};
  out.coeffs.head(st.coeffs.size()) = st.coeffs;
  return out;
}

namespace detail {

/// exp(c a_dag^2) v.  Entry weights c^k/k! sqrt(n!/(n-2k)!) are built
/// incrementally; exact on the truncated space since a_dag^2 only raises.
inline Eigen::VectorXcd conv_exp_adag2(const SpaceSpec& spec, const Eigen::VectorXcd& v,
                                       Complex c) {
  const int sd = spec.spin_dim();
  Eigen::VectorXcd r = Eigen::VectorXcd::Zero(spec.dim());
  for (int n = 0; n < spec.fock_dim; ++n) {
    Complex w{1.0};
    int k = 0;
    for (int m = n; m >= 0; m -= 2, ++k) {
      for (int s = 0; s < sd; ++s) r(n * sd + s) += w * v(m * sd + s);
      if (m >= 2) w *= c * std::sqrt(double(m) * (m - 1.0)) / double(k + 1);
    }
  }
  return r;
}

/// exp(c a^2) v; the sum terminates on the finite support of v.
inline Eigen::VectorXcd conv_exp_a2(const SpaceSpec& spec, const Eigen::VectorXcd& v,
                                    Complex c) {
  const int sd = spec.spin_dim();
  Eigen::VectorXcd r = Eigen::VectorXcd::Zero(spec.dim());
  for (int n = 0; n < spec.fock_dim; ++n) {
    Complex w{1.0};
    int k = 0;
    for (int m = n; m < spec.fock_dim; m += 2, ++k) {
      for (int s = 0; s < sd; ++s) r(n * sd + s) += w * v(m * sd + s);
      w *= c * std::sqrt((m + 1.0) * (m + 2.0)) / double(k + 1);
    }
  }
  return r;
}

/// S(xi) v for S(xi) = exp(xi a_dag^2/2 - conj(xi) a^2/2), evaluated through
/// the normally ordered factorization so each factor is exact on the
/// truncation.  Boson-only action, spin components ride along.
inline Eigen::VectorXcd apply_squeeze(const SpaceSpec& spec, const Eigen::VectorXcd& v,
                                      Complex xi) {
  const double rr = std::abs(xi);
  if (rr == 0.0) return v;
  const Complex ph = xi / rr;
  const double th = std::tanh(rr);
  const double ch = std::cosh(rr);
  Eigen::VectorXcd out = conv_exp_a2(spec, v, -0.5 * std::conj(ph) * th);
  const int sd = spec.spin_dim();
  for (int n = 0; n < spec.fock_dim; ++n) {
    const double sc = std::pow(ch, -(n + 0.5));
    for (int s = 0; s < sd; ++s) out(n * sd + s) *= sc;
  }
  return conv_exp_adag2(spec, out, 0.5 * ph * th);
}

/// exp(-(tilt/2)(e^{-i sig} J+ - e^{i sig} J-)) |j, m>: the spin rotation that
/// diagonalizes a symmetric ladder pair.  Dense exponential on the spin block.
inline Eigen::VectorXcd tilted_spin_vector(int two_j, int two_m, double tilt, double sig) {
  const SpaceSpec ss(1, two_j);
  if (!ss.valid_two_m(two_m))
    throw std::invalid_argument("tilted_spin_vector: bad two_m label");
  const Operators ops = build_ops(ss);
  const Eigen::MatrixXcd g = -(tilt / 2.0) * (std::polar(1.0, -sig) * ops.j_plus.mat -
                                              std::polar(1.0, sig) * ops.j_minus.mat);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(ss.dim());
  v(ss.index(0, two_m)) = 1.0;
  return g.exp() * v;
}

inline Eigen::VectorXcd embed_bracket(const SpaceSpec& spec, const Eigen::MatrixXcd& bm) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(spec.dim());
  const int rows = std::min<int>(static_cast<int>(bm.rows()), spec.fock_dim);
  for (int n = 0; n < rows; ++n)
    for (int s = 0; s < spec.spin_dim(); ++s) v(n * spec.spin_dim() + s) = bm(n, s);
  return v;
}

/// <J3> on a normalized ladder bracket with k_ins insertions starting from
/// the top weight (dir < 0) or the bottom one (dir > 0); u is the squared
/// modulus of the boson-to-spin coefficient ratio.  Assemblies that multiply
/// by a linear Gaussian rather than displace unitarily reweight boson level
/// m by exp(gx) L_m(-gx); gx = |c1|^2, and 0 keeps the bare Fock norms.
inline double bracket_mean_j3(int two_j, int k_ins, double u, int dir, double gx = 0.0) {
  double s0 = 0.0, s1 = 0.0, uk = 1.0;
  for (int k = 0; k <= k_ins; ++k) {
    double lag = 1.0, t = 1.0;
    for (int i = 1; i <= k_ins - k; ++i) {
      t *= gx * double(k_ins - k - i + 1) / (double(i) * double(i));
      lag += t;
    }
    const double ck = static_cast<double>(binomial(k_ins, k)) *
                      factorial_ratio_d(two_j - k, two_j) * uk * lag;
    s0 += ck;
    s1 += k * ck;
    uk *= u;
  }
  const double kbar = s1 / s0;
  return (dir < 0) ? two_j / 2.0 - kbar : -two_j / 2.0 + kbar;
}

}  // namespace detail

/// H = w Adag A, dense.  The product of the two truncated factors is exact on
/// every entry except the top Fock band touched by the lost raising column.
inline LinearOperator build_hamiltonian(const AlgebraElement& e, double w,
                                        const SpaceSpec& spec) {
  if (w <= 0.0) throw std::invalid_argument("build_hamiltonian: w must be positive");
  const Eigen::MatrixXcd m = element_matrix(e, spec).mat;
  return {spec, w * (m.adjoint() * m)};
}

/// Quadrature pair of a (generally non-boson) ladder element.
inline std::pair<LinearOperator, LinearOperator> element_quadratures(const AlgebraElement& e,
                                                                     const SpaceSpec& spec) {
  const Eigen::MatrixXcd m = element_matrix(e, spec).mat;
  const Eigen::MatrixXcd md = m.adjoint();
  return {{spec, (m + md) / std::sqrt(2.0)}, {spec, iunit * (md - m) / std::sqrt(2.0)}};
}

struct EnergyStats {
  double mean_e;
  double var_e;
};

/// First two moments of H = w Adag A on an arbitrary state, matrix-free.
/// The state is zero-padded before applying the element twice, so the only
/// bias left is the (tail-mass sized) probability the construction already
/// dropped; callers needing 1e-8 moments must build states with tail ~1e-13.
inline EnergyStats energy_stats(const AlgebraElement& e, double w, const JointState& st0) {
  if (w <= 0.0) throw std::invalid_argument("energy_stats: w must be positive");
  const JointState st = pad_state(st0, st0.spec.fock_dim + 8);
  const Eigen::VectorXcd av = detail::apply_element(e, st.spec, st.coeffs);
  const Eigen::VectorXcd hv = w * detail::apply_element(adjoint_element(e), st.spec, av);
  const double n2 = st.coeffs.squaredNorm();
  const double mean = w * av.squaredNorm() / n2;
  double var = hv.squaredNorm() / n2 - mean * mean;
  if (var < 0.0 && var > -1e-8) var = 0.0;
  return {mean, var};
}

// ---------------------------------------------------------------------------
// boson-commutator family: [A, Adag] = I

struct CanonicalParams {
  double alpha = 0.0;          // boson Bogoliubov rapidity
  double theta_minus = 0.0;    // phase of the a coefficient
  double theta_plus = 0.0;     // phase of the a_dag coefficient
  double beta = 0.0;           // common ladder weight, >= 0
  double varphi_minus = 0.0;   // phase on J+
  double varphi_plus = 0.0;    // phase on J-
  double r = 0.0;              // J3 weight, >= 0
  Complex alpha_3 = 0.0;
  double w = 1.0;              // level spacing of H = w Adag A
};

inline AlgebraElement canonical_element(const CanonicalParams& p) {
  if (p.beta < 0.0 || p.r < 0.0)
    throw std::invalid_argument("canonical_element: beta and r are radial, need >= 0");
  if (p.w <= 0.0) throw std::invalid_argument("canonical_element: w must be positive");
  const double ph3 = 0.5 * (p.varphi_plus + p.varphi_minus);
  return {std::cosh(p.alpha) * std::polar(1.0, p.theta_minus),
          std::sinh(p.alpha) * std::polar(1.0, p.theta_plus),
          p.alpha_3,
          p.beta * std::polar(1.0, p.varphi_minus),
          p.beta * std::polar(1.0, p.varphi_plus),
          p.r * std::polar(1.0, ph3)};
}

/// Spin branch spacing; the matched ladder weights make 4 b- b+ + b3^2 a
/// perfect square, so the root needs no branch choice.
inline Complex canonical_b(const CanonicalParams& p) {
  return std::hypot(2.0 * p.beta, p.r) *
         std::polar(1.0, 0.5 * (p.varphi_plus + p.varphi_minus));
}

/// Exact eigenstate of the canonical element with eigenvalue z: a squeezed
/// displaced Gaussian times a rotated spin weight.  Unit-I commutator gives
/// var E = w^2 |z|^2 independent of every other parameter.
inline CoupledAes canonical_eigenstates(const CanonicalParams& p, int two_j, int two_m,
                                        Complex z, int fock_dim_hint = 32) {
  const AlgebraElement e = canonical_element(p);
  if (!SpaceSpec(1, two_j).valid_two_m(two_m))
    throw std::invalid_argument("canonical_eigenstates: bad two_m label");
  const Complex b = canonical_b(p);
  const double s_len = std::hypot(2.0 * p.beta, p.r);
  // tan(tilt/2) = (s - r) / (2 beta); beta = 0 collapses to no rotation
  const double tilt = 2.0 * std::atan2(s_len - p.r, 2.0 * p.beta);
  const double sig = 0.5 * (p.varphi_plus - p.varphi_minus);
  const Eigen::VectorXcd sv = detail::tilted_spin_vector(two_j, two_m, tilt, sig);

  const Complex eta = (z - p.alpha_3 - 0.5 * double(two_m) * b) *
                      std::polar(1.0, -p.theta_minus);
  const Complex c1 = eta / std::cosh(p.alpha);
  const Complex c2 =
      -0.5 * std::tanh(p.alpha) * std::polar(1.0, p.theta_plus - p.theta_minus);

  JointState st = detail::grow_until_converged(
      fock_dim_hint, two_j,
      [&](const SpaceSpec& spec) {
        const Eigen::VectorXcd h = detail::gaussian_fock_coeffs(c1, c2, spec.fock_dim);
        Eigen::VectorXcd v(spec.dim());
        for (int n = 0; n < spec.fock_dim; ++n)
          for (int s = 0; s < spec.spin_dim(); ++s) v(n * spec.spin_dim() + s) = h(n) * sv(s);
        return v;
      },
      1e-14);
  detail::check_residual(e, st, z, "canonical_eigenstates");
  return {std::move(st), z, b};
}

/// n-th ladder excitation over the z = 0 canonical eigenstate: energy n w,
/// (2j+1)-fold degenerate in the spin label.
inline JointState ladder_state(const CanonicalParams& p, int two_j, int two_m, int level,
                               int fock_dim_hint = 32) {
  if (level < 0) throw std::invalid_argument("ladder_state: level must be >= 0");
  canonical_element(p);  // validate parameters
  if (!SpaceSpec(1, two_j).valid_two_m(two_m))
    throw std::invalid_argument("ladder_state: bad two_m label");
  const double s_len = std::hypot(2.0 * p.beta, p.r);
  const double tilt = 2.0 * std::atan2(s_len - p.r, 2.0 * p.beta);
  const double sig = 0.5 * (p.varphi_plus - p.varphi_minus);
  const Eigen::VectorXcd sv = detail::tilted_spin_vector(two_j, two_m, tilt, sig);
  const Complex zeta = -(p.alpha_3 + 0.5 * double(two_m) * canonical_b(p)) *
                       std::polar(1.0, -p.theta_minus);
  const Complex lam = -p.alpha * std::polar(1.0, p.theta_plus - p.theta_minus);

  return detail::grow_until_converged(
      std::max(fock_dim_hint, level + 8), two_j,
      [&](const SpaceSpec& spec) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(spec.dim());
        if (level < spec.fock_dim)
          for (int s = 0; s < spec.spin_dim(); ++s) v(level * spec.spin_dim() + s) = sv(s);
        v = detail::conv_exp_a(spec, v, -std::conj(zeta));
        v = detail::conv_exp_adag(spec, v, zeta);
        return detail::apply_squeeze(spec, v, lam);
      },
      1e-14);
}

/// S(chi) D(zeta) acting on the z = 0 eigenstate through the element's own
/// ladder operators; dense, meant for moderate truncations.
inline JointState super_squeezed_state(const CanonicalParams& p, int two_j, int two_m,
                                       Complex chi, Complex zeta, int fock_dim = 48) {
  const CoupledAes g = canonical_eigenstates(p, two_j, two_m, 0.0, std::max(8, fock_dim / 2));
  const int nd = std::max(fock_dim, g.state.spec.fock_dim);
  JointState st = pad_state(g.state, nd);
  const Eigen::MatrixXcd a = element_matrix(canonical_element(p), st.spec).mat;
  const Eigen::MatrixXcd ad = a.adjoint();
  const Eigen::MatrixXcd d = (zeta * ad - std::conj(zeta) * a).exp();
  const Eigen::MatrixXcd s = (0.5 * chi * ad * ad - 0.5 * std::conj(chi) * a * a).exp();
  st.coeffs = s * (d * st.coeffs);
  st.normalize();
  return st;
}

// ---------------------------------------------------------------------------
// linear-J3 commutator family: [A, Adag] = I + 2 x J3

struct XCaseParams {
  double x = 1.0;              // J3 weight of the commutator, nonzero
  double beta = 0.0;           // spin rapidity, >= 0
  double alpha = 0.0;          // boson Bogoliubov rapidity
  double theta_minus = 0.0;
  double theta_plus = 0.0;
  double varphi_minus = 0.0;   // phase on J+
  double varphi_plus = 0.0;    // phase on J-
  Complex alpha_3 = 0.0;
  double w = 1.0;
};

inline AlgebraElement x_case_element(const XCaseParams& p) {
  if (p.x == 0.0)
    throw std::invalid_argument("x_case_element: x = 0 is the unit-commutator family");
  if (p.beta < 0.0) throw std::invalid_argument("x_case_element: beta must be >= 0");
  if (p.w <= 0.0) throw std::invalid_argument("x_case_element: w must be positive");
  const double rx = std::sqrt(std::abs(p.x));
  const double cb = std::cosh(p.beta), sb = std::sinh(p.beta);
  const double wminus = (p.x > 0.0) ? cb : sb;  // J+ weight
  const double wplus = (p.x > 0.0) ? sb : cb;   // J- weight
  return {std::cosh(p.alpha) * std::polar(1.0, p.theta_minus),
          std::sinh(p.alpha) * std::polar(1.0, p.theta_plus),
          p.alpha_3,
          rx * wminus * std::polar(1.0, p.varphi_minus),
          rx * wplus * std::polar(1.0, p.varphi_plus),
          0.0};
}

inline Complex x_case_b(const XCaseParams& p) {
  return std::sqrt(std::abs(p.x) * 2.0 * std::sinh(2.0 * p.beta)) *
         std::polar(1.0, 0.5 * (p.varphi_plus + p.varphi_minus));
}

/// Eigenstate of the x-case element with eigenvalue z.  beta > 0 pairs a
/// Gaussian with a J3-boosted rotated weight; beta = 0 is the nilpotent spin
/// ladder, a polynomial bracket under a unitary displacement (and squeeze).
/// For x < 0 the label two_m names the weight the bracket terminates on.
inline CoupledAes x_case_eigenstates(const XCaseParams& p, int two_j, int two_m, Complex z,
                                     int fock_dim_hint = 32) {
  const AlgebraElement e = x_case_element(p);
  if (!SpaceSpec(1, two_j).valid_two_m(two_m))
    throw std::invalid_argument("x_case_eigenstates: bad two_m label");
  const Complex em = std::polar(1.0, -p.theta_minus);
  const Complex lam = -p.alpha * std::polar(1.0, p.theta_plus - p.theta_minus);
  const double sig = 0.5 * (p.varphi_plus - p.varphi_minus);
  const double sgnx = (p.x > 0.0) ? 1.0 : -1.0;

  if (p.beta > 0.0) {
    Eigen::VectorXcd sv = detail::tilted_spin_vector(two_j, two_m, pi / 2.0, sig);
    const double lt = std::log(std::tanh(p.beta));
    for (int s = 0; s <= two_j; ++s) {
      const double u = s - two_j / 2.0;
      sv(s) *= std::exp(-sgnx * 0.5 * lt * u);
    }
    sv /= sv.norm();
    const Complex b = x_case_b(p);
    const Complex c1 = (z - p.alpha_3 - 0.5 * double(two_m) * b) * em / std::cosh(p.alpha);
    const Complex c2 =
        -0.5 * std::tanh(p.alpha) * std::polar(1.0, p.theta_plus - p.theta_minus);
    JointState st = detail::grow_until_converged(
        fock_dim_hint, two_j,
        [&](const SpaceSpec& spec) {
          const Eigen::VectorXcd h = detail::gaussian_fock_coeffs(c1, c2, spec.fock_dim);
          Eigen::VectorXcd v(spec.dim());
          for (int n = 0; n < spec.fock_dim; ++n)
            for (int s = 0; s < spec.spin_dim(); ++s)
              v(n * spec.spin_dim() + s) = h(n) * sv(s);
          return v;
        },
        1e-14);
    detail::check_residual(e, st, z, "x_case_eigenstates");
    return {std::move(st), z, b};
  }

  const double rx = std::sqrt(std::abs(p.x));
  const Eigen::MatrixXcd bm =
      (p.x > 0.0)
          ? detail::degenerate_bracket(
                two_j, two_m, std::polar(1.0, p.theta_minus - p.varphi_minus) / rx, -1)
          : detail::degenerate_bracket(
                two_j, -two_m, std::polar(1.0, p.theta_minus - p.varphi_plus) / rx, +1);
  const Complex eta = (z - p.alpha_3) * em;
  JointState st = detail::grow_until_converged(
      fock_dim_hint, two_j,
      [&](const SpaceSpec& spec) {
        Eigen::VectorXcd v = detail::embed_bracket(spec, bm);
        v = detail::conv_exp_a(spec, v, -std::conj(eta));
        v = detail::conv_exp_adag(spec, v, eta);
        return detail::apply_squeeze(spec, v, lam);
      },
      1e-14);
  detail::check_residual(e, st, z, "x_case_eigenstates");
  return {std::move(st), z, 0.0};
}

/// Closed-form var E on the (two_j, two_m) eigenstate: w^2 |z|^2 (1 + 2x<J3>).
/// beta > 0 reuses the tilted-state <J3> at delta = tanh(beta); beta = 0 is a
/// two-power-sum ratio over the bracket weights.
inline double x_case_dispersion(const XCaseParams& p, int two_j, int two_m, Complex z) {
  if (!SpaceSpec(1, two_j).valid_two_m(two_m))
    throw std::invalid_argument("x_case_dispersion: bad two_m label");
  const double s = std::abs(p.x);
  if (s == 0.0) throw std::invalid_argument("x_case_dispersion: x must be nonzero");
  double mj3;
  if (p.beta > 0.0) {
    mj3 = ((p.x > 0.0) ? 1.0 : -1.0) * su2_mean_j3(two_j, two_m, std::tanh(p.beta));
  } else {
    const int kin = (p.x > 0.0) ? (two_j - two_m) / 2 : (two_j + two_m) / 2;
    mj3 = detail::bracket_mean_j3(two_j, kin, 1.0 / s, (p.x > 0.0) ? -1 : +1);
  }
  return p.w * p.w * std::norm(z) * (1.0 + 2.0 * p.x * mj3);
}

/// Dense two-level single-mode coupling Hamiltonian
///   w (adag a + 1/2) + w0 J3 + sqrt(w w0) (adag J- + a J+) + (w0 - w)/2.
/// Entrywise equal to build_hamiltonian of the x-case element at beta = 0,
/// x = -w0/w, matched phases.
inline LinearOperator jaynes_cummings_limit(double w, double w0, int fock_dim) {
  if (w <= 0.0 || w0 <= 0.0)
    throw std::invalid_argument("jaynes_cummings_limit: both frequencies must be positive");
  const SpaceSpec spec(fock_dim, 1);
  const Operators ops = build_ops(spec);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(spec.dim(), spec.dim());
  Eigen::MatrixXcd h = w * (ops.a_dag.mat * ops.a.mat + 0.5 * id) + w0 * ops.j3.mat +
                       std::sqrt(w * w0) * (ops.a_dag.mat * ops.j_minus.mat +
                                            ops.a.mat * ops.j_plus.mat) +
                       0.5 * (w0 - w) * id;
  return {spec, std::move(h)};
}

// ---------------------------------------------------------------------------
// ladder-commutator family: [A, Adag] = I + 2 rho J3 in a rotated spin frame

struct NonCanonicalParams {
  double rho = 1.0;           // rotated-frame J3 weight of the commutator, > 0
  double nu = 0.0;            // azimuth of the rotated spin frame
  double beta = 1.0;          // lab-frame ladder weight, > 0
  double theta = pi;          // relative phase, in (-pi/2, 3 pi/2), cos != 0
  double theta_minus = 0.0;
  double varphi_minus = 0.0;
  double w = 1.0;
};

/// The element written in the rotated spin frame where the commutator is
/// diagonal; the standard J matrices of the code play the rotated generators.
inline AlgebraElement noncanonical_element(const NonCanonicalParams& p) {
  if (p.rho <= 0.0) throw std::invalid_argument("noncanonical_element: rho must be > 0");
  if (p.beta <= 0.0) throw std::invalid_argument("noncanonical_element: beta must be > 0");
  if (p.w <= 0.0) throw std::invalid_argument("noncanonical_element: w must be positive");
  if (p.theta <= -pi / 2.0 || p.theta >= 3.0 * pi / 2.0)
    throw std::invalid_argument("noncanonical_element: theta outside (-pi/2, 3 pi/2)");
  const double ct = std::cos(p.theta);
  const double act = std::abs(ct);
  if (act < 1e-12)
    throw std::invalid_argument(
        "noncanonical_element: cos(theta) = 0 makes the lab-frame J3 weight diverge");
  const Complex fl = std::polar(1.0, p.varphi_minus - p.nu);
  const Complex et = std::polar(1.0, p.theta);
  const double den = 4.0 * p.beta * act;
  const double b2 = 4.0 * p.beta * p.beta * act;
  return {std::polar(1.0, p.theta_minus), 0.0, 0.0,
          fl * (b2 - p.rho * et) / den, -fl * (b2 + p.rho * et) / den, 0.0};
}

/// Eigenstate with eigenvalue z.  The spin branch collapses (b = 0) exactly
/// when e^{i theta} is real and 4 beta^2 = rho; both zero patterns route to
/// the polynomial-bracket constructor.
inline CoupledAes noncanonical_eigenstates(const NonCanonicalParams& p, int two_j, int two_m,
                                           Complex z, int fock_dim_hint = 32) {
  const AlgebraElement e = noncanonical_element(p);
  const double scale = std::max(std::abs(e.beta_minus), std::abs(e.beta_plus));
  const Complex b = b_factor(e);
  if (std::abs(b) <= 1e-12 * scale)
    return aes_degenerate(e, two_j, two_m, z, fock_dim_hint, 1e-13);
  const Complex rho_arg = z - 0.5 * double(two_m) * b;
  return aes_general(e, two_j, two_m, rho_arg, fock_dim_hint, 1e-13);
}

/// <J3> (rotated frame) on the eigenstate labeled (two_j, two_m).  On the
/// split branch the state factorizes and the mean is z-free; the collapsed
/// bracket is reweighted by the Gaussian, so there z enters.
inline double noncanonical_mean_jj3(const NonCanonicalParams& p, int two_j, int two_m,
                                    Complex z) {
  if (!SpaceSpec(1, two_j).valid_two_m(two_m))
    throw std::invalid_argument("noncanonical_mean_jj3: bad two_m label");
  const AlgebraElement e = noncanonical_element(p);
  const double scale = std::max(std::abs(e.beta_minus), std::abs(e.beta_plus));
  const Complex b = b_factor(e);
  const double jj = two_j / 2.0, mm = two_m / 2.0;
  if (std::abs(b) <= 1e-12 * scale) {
    // insertion counts track the degree-zero-weight label of aes_degenerate
    const double gx = std::norm(z / e.alpha_minus);
    if (std::abs(e.beta_plus) < 1e-14 * scale)
      return detail::bracket_mean_j3(two_j, (two_j - two_m) / 2,
                                     1.0 / std::norm(e.beta_minus), -1, gx);
    return detail::bracket_mean_j3(two_j, (two_j + two_m) / 2,
                                   1.0 / std::norm(e.beta_plus), +1, gx);
  }
  const Complex phim = -2.0 * e.beta_minus / b;
  const Complex phip = e.beta_plus / b;
  const double n = std::norm(phim);
  const double lam = 1.0 + 2.0 * std::norm(phim + std::conj(phip) * (1.0 + n));
  const double lamt = 2.0 * (n * (1.0 + 2.0 * std::real(phim * phip)) +
                             std::norm(phip) * (n * n - 1.0));
  const int n0 = (two_j + two_m) / 2;
  const double ratio =
      (n0 >= 1) ? jacobi_p<double>(n0 - 1, 1.0, 1.0 - two_m, lam) /
                      jacobi_p<double>(n0, 0.0, double(-two_m), lam)
                : 0.0;
  return mm * (1.0 - n) / (1.0 + n) + 0.5 * (jj - mm + 1.0) * ratio * lamt;
}

/// var E = w^2 |z|^2 <[A, Adag]>; the commutator's J3 weight carries the sign
/// of cos(theta).
inline double noncanonical_dispersion(const NonCanonicalParams& p, int two_j, int two_m,
                                      Complex z) {
  const double sg = (std::cos(p.theta) > 0.0) ? 1.0 : -1.0;
  return p.w * p.w * std::norm(z) *
         (1.0 - 2.0 * p.rho * sg * noncanonical_mean_jj3(p, two_j, two_m, z));
}

/// j = 1/2 dispersion in closed form; both spin labels share it because the
/// two branch eigenvectors differ only in the sign of one component.  At the
/// collapse point it continues the curve (the bracket terminating on the top
/// weight), producing the slope break against the beta sweep.
inline double noncanonical_dispersion_halfspin(const NonCanonicalParams& p, Complex z) {
  noncanonical_element(p);  // validate
  const double c = std::cos(p.theta);
  const double sg = (c > 0.0) ? 1.0 : -1.0;
  const double b2 = p.beta * p.beta;
  const double q = 16.0 * b2 * b2 * c * c + p.rho * p.rho -
                   8.0 * p.rho * b2 * c * std::abs(c);
  const double t1 = 16.0 * b2 * b2 * c * c - p.rho * p.rho * std::cos(2.0 * p.theta);
  const double t2 = p.rho * p.rho * std::sin(2.0 * p.theta);
  // rr^2 = q * |4 beta^2 |c| + rho e^{i theta}|^2, so the quotient reduces to
  // the two branch weights; the commutator J3 term carries -sgn(cos theta)
  const double rr = std::hypot(t1, t2);
  return p.w * p.w * std::norm(z) * (1.0 - sg * p.rho * (q - rr) / (q + rr));
}

}  // namespace aeslab

#endif  // AESLAB_HAMILTONIAN_FACTORY_HPP
