#ifndef AESLAB_SU2_AES_HPP
#define AESLAB_SU2_AES_HPP

#include <unsupported/Eigen/MatrixFunctions>
#include <vector>

#include "aeslab/fock_core.hpp"
#include "aeslab/mus_engine.hpp"
#include "aeslab/special_functions.hpp"

namespace aeslab {

namespace detail {

/// exp(g) v as a bare series.  For nilpotent g (raising/lowering exponentials,
/// truncated creation polynomials) the series terminates exactly; max_terms
/// bounds runaway growth for misuse.
inline Eigen::VectorXcd apply_exp(const Eigen::MatrixXcd& g, const Eigen::VectorXcd& v,
                                  int max_terms) {
  Eigen::VectorXcd acc = v;
  Eigen::VectorXcd term = v;
  for (int k = 1; k <= max_terms; ++k) {
    term = (g * term) / static_cast<double>(k);
    if (term.norm() == 0.0) return acc;
    acc += term;
  }
  throw NumericalError("apply_exp: series did not terminate within max_terms");
}

}  // namespace detail

/// Coefficients of the spin ladder combination c_jplus J+ + c_jminus J- + c_j3 J3.
struct Su2Coeffs {
  Complex c_jplus{0.0};
  Complex c_jminus{0.0};
  Complex c_j3{0.0};
};

/// Principal square root of the Casimir-like discriminant; the eigenvalue
/// spectrum of the ladder combination is { m b : m = -j .. j } when b != 0.
inline Complex su2_discriminant_root(const Su2Coeffs& c) {
  return std::sqrt(4.0 * c.c_jplus * c.c_jminus + c.c_j3 * c.c_j3);
}

inline Eigen::MatrixXcd su2_matrix(int two_j, const Su2Coeffs& c) {
  const Operators ops = build_ops(SpaceSpec(1, two_j));
  return c.c_jplus * ops.j_plus.mat + c.c_jminus * ops.j_minus.mat + c.c_j3 * ops.j3.mat;
}

struct Su2Eigenpair {
  int two_m = 0;  // label: eigenvalue = (two_m / 2) * b
  Complex eigenvalue{0.0};
  JointState state;
};

struct Su2Solution {
  Complex b{0.0};
  bool degenerate = false;
  std::vector<Su2Eigenpair> pairs;
};

namespace detail {

inline JointState spin_state_from_vector(int two_j, Eigen::VectorXcd v) {
  JointState st{SpaceSpec(1, two_j), std::move(v), 0.0};
  st.normalize();
  return st;
}

/// exp(xi J+-) |j, u> built with the terminating series.
inline Eigen::VectorXcd ladder_exp_on_basis(const Operators& ops, Complex xi_plus,
                                            Complex xi_minus, int two_u) {
  const int d = ops.id.spec.dim();
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d);
  v(ops.id.spec.index(0, two_u)) = 1.0;
  v = apply_exp(xi_minus * ops.j_minus.mat, v, d + 1);
  v = apply_exp(xi_plus * ops.j_plus.mat, v, d + 1);
  return v;
}

}  // namespace detail

/// Eigenpairs of c_jplus J+ + c_jminus J- + c_j3 J3 on the spin-j module.
/// Nondegenerate (b != 0): all 2j+1 eigenvectors through the exponential
/// disentangling.  Degenerate (b == 0): the flag is set and pairs holds the
/// genuine eigenvectors only (the kernel; the rest of the module is a Jordan
/// tower above it).
inline Su2Solution su2_aes_solve(int two_j, const Su2Coeffs& c) {
  const double scale =
      std::max({std::abs(c.c_jplus), std::abs(c.c_jminus), std::abs(c.c_j3)});
  if (scale == 0.0) throw std::invalid_argument("su2_aes_solve: zero coefficient triple");
  const Operators ops = build_ops(SpaceSpec(1, two_j));
  const Complex b = su2_discriminant_root(c);

  Su2Solution sol;
  sol.b = b;

  if (std::abs(b) < 1e-12 * scale) {
    sol.degenerate = true;
    sol.b = 0.0;
    const Eigen::MatrixXcd A = su2_matrix(two_j, c);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    for (int i = 0; i < sv.size(); ++i) {
      if (sv(i) < 1e-12 * scale) {
        Su2Eigenpair p;
        p.two_m = 0;
        p.eigenvalue = 0.0;
        p.state = detail::spin_state_from_vector(two_j, svd.matrixV().col(i));
        sol.pairs.push_back(std::move(p));
      }
    }
    return sol;
  }

  const Complex prod = 4.0 * c.c_jplus * c.c_jminus;
  const bool ladder_gap = std::abs(c.c_jplus) < 1e-14 * scale ||
                          std::abs(c.c_jminus) < 1e-14 * scale;
  // triangular shortcut only where c_j3 carries the root; a gap coefficient
  // with c_j3^2 below the ladder product (near-Jordan data) must take the
  // general branch, where b + c_j3 is then free of cancellation
  const bool triangular = ladder_gap && std::norm(c.c_j3) >= 1e3 * std::abs(prod);
  for (int two_u = -two_j; two_u <= two_j; two_u += 2) {
    const double u = two_u / 2.0;
    Su2Eigenpair p;
    Eigen::VectorXcd v;
    if (triangular) {
      // conjugating by a single ladder exponential diagonalizes,
      // eigenvalue u * c_j3
      const Complex xi_plus =
          std::abs(c.c_jplus) < 1e-14 * scale ? 0.0 : -c.c_jplus / c.c_j3;
      const Complex xi_minus =
          std::abs(c.c_jminus) < 1e-14 * scale ? 0.0 : c.c_jminus / c.c_j3;
      v = detail::ladder_exp_on_basis(ops, xi_plus, xi_minus, two_u);
      p.eigenvalue = u * c.c_j3;
    } else {
      // (b + c3)(b - c3) = 4 c+ c-: the difference form sidesteps the
      // cancellation when c_j3 points against the principal root (c_jminus
      // is nonzero here, otherwise the triangular branch took over)
      const Complex denom = b + c.c_j3;
      const Complex xi_plus = std::abs(denom) >= 0.5 * std::abs(b)
                                  ? -2.0 * c.c_jplus / denom
                                  : (c.c_j3 - b) / (2.0 * c.c_jminus);
      v = detail::ladder_exp_on_basis(ops, xi_plus, c.c_jminus / b, two_u);
      p.eigenvalue = u * b;
    }
    p.two_m = static_cast<int>(std::lround(2.0 * std::real(p.eigenvalue / b)));
    p.state = detail::spin_state_from_vector(two_j, std::move(v));
    sol.pairs.push_back(std::move(p));
  }
  return sol;
}

/// Closed-form eigenvector of the ladder combination for label m, components
/// given by terminating Jacobi sums.  Requires b != 0 and c_jminus != 0.
inline Eigen::VectorXcd su2_eigvec_jacobi(int two_j, const Su2Coeffs& c, int two_m) {
  const Complex b = su2_discriminant_root(c);
  const double scale =
      std::max({std::abs(c.c_jplus), std::abs(c.c_jminus), std::abs(c.c_j3)});
  if (std::abs(b) < 1e-12 * scale)
    throw std::invalid_argument("su2_eigvec_jacobi: degenerate combination");
  if (std::abs(c.c_jminus) < 1e-14 * scale)
    throw std::invalid_argument("su2_eigvec_jacobi: needs a nonzero J- coefficient");
  const SpaceSpec spec(1, two_j);
  if (!spec.valid_two_m(two_m)) throw std::invalid_argument("su2_eigvec_jacobi: bad two_m");
  const double m = two_m / 2.0;
  const Complex x = c.c_j3 / b;
  const Complex ratio = b / c.c_jminus;
  Eigen::VectorXcd v(spec.dim());
  for (int two_u = -two_j; two_u <= two_j; two_u += 2) {
    const double u = two_u / 2.0;
    const int ju = (two_j + two_u) / 2;   // j + u
    const int jmu = (two_j - two_u) / 2;  // j - u
    const double w = std::sqrt((factorial_ratio(ju, 0) * factorial_ratio(jmu, 0) /
                                factorial_ratio((2 * two_j) / 2, 0))
                                   .convert_to<double>());
    v(spec.index(0, two_u)) =
        w * detail::ipow(ratio, ju) * jacobi_p<Complex>(ju, m - u, -u - m, x);
  }
  return v;
}

/// Spin dispersion scale for the angular minimum-uncertainty family.
/// delta = 0 is the analytic limit (only the extremal |m| = j state survives
/// there); continuous through delta = 1.
inline double spin_dispersion_scale(int two_j, int two_m, double delta) {
  if (delta < 0.0) throw std::invalid_argument("spin_dispersion_scale: delta must be >= 0");
  const double j = two_j / 2.0;
  const double am = std::abs(two_m) / 2.0;
  if (delta == 0.0) return j / 2.0;
  const int n_num = (two_j - std::abs(two_m)) / 2 - 1;  // j - |m| - 1
  const int n_den = (two_j - std::abs(two_m)) / 2;
  const double y = (1.0 + delta * delta) / (2.0 * delta);
  const double p_num = jacobi_p<double>(n_num, 1.0, 1.0 + std::abs(two_m), y);
  const double p_den = jacobi_p<double>(n_den, 0.0, std::abs(two_m), y);
  return am / (2.0 * (1.0 + delta) * (1.0 + delta)) +
         (j + am + 1.0) / (8.0 * delta) * p_num / p_den;
}

/// <J3> on the tilted angular state.  The (J1, J2) commutator is 2 J3 times
/// the dispersion-scale normalization, so this is 2 (1 - delta^2) times the
/// scale; it vanishes at delta = 1 and tends to j as delta -> 0.
inline double su2_mean_j3(int two_j, int two_m, double delta) {
  return 2.0 * (1.0 - delta * delta) * spin_dispersion_scale(two_j, two_m, delta);
}

/// Closed-form moment report for the angular state: A = J1, B = J2, C = J3.
inline DispersionReport su2_closed_form(int two_j, int two_m, double delta, double phi) {
  const double m = two_m / 2.0;
  const double L = spin_dispersion_scale(two_j, two_m, delta);
  const double d2 = delta * delta;
  DispersionReport r;
  r.mean_a = 2.0 * m * std::sqrt(delta) * std::cos(phi / 2.0) / (1.0 + delta);
  r.mean_b = 2.0 * m * std::sqrt(delta) * std::sin(phi / 2.0) / (1.0 + delta);
  r.var_a = (1.0 - 2.0 * delta * std::cos(phi) + d2) * L;
  r.var_b = (1.0 + 2.0 * delta * std::cos(phi) + d2) * L;
  r.mean_c = 2.0 * (1.0 - d2) * L;
  r.mean_f = -4.0 * delta * std::sin(phi) * L;
  r.delta = std::sqrt(1.0 - 2.0 * d2 * std::cos(2.0 * phi) + d2 * d2) * L;
  r.srur_residual = 0.0;
  return r;
}

/// delta = 1 limit of the angular family (the isotropic-noise point): the
/// dispersion scale collapses to [j(j+1) - m^2] / 8.
inline DispersionReport su2_isotropic_closed_form(int two_j, int two_m, double phi) {
  const double j = two_j / 2.0;
  const double m = two_m / 2.0;
  const double k = j * (j + 1.0) - m * m;
  DispersionReport r;
  r.mean_a = m * std::cos(phi / 2.0);
  r.mean_b = m * std::sin(phi / 2.0);
  const double sh = std::sin(phi / 2.0);
  const double ch = std::cos(phi / 2.0);
  r.var_a = 0.5 * k * sh * sh;
  r.var_b = 0.5 * k * ch * ch;
  r.mean_c = 0.0;
  r.mean_f = -0.5 * k * std::sin(phi);
  r.delta = 0.25 * k * std::abs(std::sin(phi));
  r.srur_residual = 0.0;
  return r;
}

/// Angular minimum-uncertainty state, (J1 + i lambda J2)|psi> = beta|psi>,
/// lambda mapped from (delta, phi).  Built as a scaled rotation of |j, m>;
/// the companion eigenvalue is m (1 + lambda) sqrt(delta) e^{i phi / 2}.
struct Su2MusState {
  JointState state;
  Complex lambda{0.0};
  Complex beta{0.0};
};

inline Su2MusState su2_mus_state(int two_j, int two_m, double delta, double phi) {
  const SpaceSpec spec(1, two_j);
  if (!spec.valid_two_m(two_m)) throw std::invalid_argument("su2_mus_state: bad two_m");
  if (delta < 0.0) throw std::invalid_argument("su2_mus_state: delta must be >= 0");
  const Complex lambda = lambda_from_delta_phi(delta, phi);
  Su2MusState out;
  out.lambda = lambda;
  out.beta = (two_m / 2.0) * (1.0 + lambda) * std::sqrt(delta) * std::exp(iunit * phi / 2.0);

  if (delta == 0.0) {
    if (two_m != two_j)
      throw std::invalid_argument("su2_mus_state: delta = 0 only supports the top weight m = j");
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(spec.dim());
    v(spec.index(0, two_j)) = 1.0;
    out.state = detail::spin_state_from_vector(two_j, std::move(v));
    return out;
  }

  const Operators ops = build_ops(spec);
  const Eigen::MatrixXcd gen =
      -(pi / 4.0) * (std::exp(-iunit * phi / 2.0) * ops.j_plus.mat -
                     std::exp(iunit * phi / 2.0) * ops.j_minus.mat);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(spec.dim());
  v(spec.index(0, two_m)) = 1.0;
  v = gen.exp() * v;
  // scaled J3 weighting, exponent shifted so every factor stays <= 1
  const double anchor = delta < 1.0 ? two_j / 2.0 : -two_j / 2.0;
  for (int two_u = -two_j; two_u <= two_j; two_u += 2)
    v(spec.index(0, two_u)) *= std::pow(delta, (anchor - two_u / 2.0) / 2.0);
  out.state = detail::spin_state_from_vector(two_j, std::move(v));
  return out;
}

}  // namespace aeslab

#endif  // AESLAB_SU2_AES_HPP
