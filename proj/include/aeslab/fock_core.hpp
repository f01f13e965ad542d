#ifndef AESLAB_FOCK_CORE_HPP
#define AESLAB_FOCK_CORE_HPP

#include <Eigen/Dense>
#include <cmath>
#include <string>
#include <utility>

#include "aeslab/types.hpp"

namespace aeslab {

/// Truncated boson (x) spin product space.  two_j is the doubled spin label so
/// half-integer representations stay exact; basis order is (n, m) lexicographic
/// with n the Fock level and m ascending.
struct SpaceSpec {
  int fock_dim = 1;  // Fock levels 0 .. fock_dim-1
  int two_j = 0;

  SpaceSpec() = default;
  SpaceSpec(int fock_dim_, int two_j_) : fock_dim(fock_dim_), two_j(two_j_) {
    if (fock_dim < 1) throw std::invalid_argument("SpaceSpec: fock_dim must be >= 1");
    if (two_j < 0) throw std::invalid_argument("SpaceSpec: two_j must be >= 0");
  }

  int spin_dim() const { return two_j + 1; }
  int dim() const { return fock_dim * spin_dim(); }

  bool valid_two_m(int two_m) const {
    return std::abs(two_m) <= two_j && (two_m + two_j) % 2 == 0;
  }

  int index(int n, int two_m) const {
    if (n < 0 || n >= fock_dim) throw std::invalid_argument("SpaceSpec: Fock level out of range");
    if (!valid_two_m(two_m)) throw std::invalid_argument("SpaceSpec: invalid two_m");
    return n * spin_dim() + (two_m + two_j) / 2;
  }

  bool operator==(const SpaceSpec& o) const {
    return fock_dim == o.fock_dim && two_j == o.two_j;
  }
};

struct LinearOperator {
  SpaceSpec spec;
  Eigen::MatrixXcd mat;
};

/// State vector on a SpaceSpec.  norm_tail records the estimated probability
/// mass lost to truncation (relative mass of the top two Fock levels at build
/// time); constructors keep it below 1e-10 or raise TruncationError.
struct JointState {
  SpaceSpec spec;
  Eigen::VectorXcd coeffs;
  double norm_tail = 0.0;

  Complex coeff(int n, int two_m) const { return coeffs(spec.index(n, two_m)); }
  double norm() const { return coeffs.norm(); }

  /// Scale to unit norm and rotate the global phase so the first nonzero
  /// coefficient in (n, m) order is real positive.
  void normalize() {
    const double n2 = coeffs.norm();
    if (n2 == 0.0) throw NumericalError("JointState::normalize: zero vector");
    coeffs /= n2;
    const double threshold = 1e-12 * coeffs.cwiseAbs().maxCoeff();
    for (int i = 0; i < coeffs.size(); ++i) {
      const Complex c = coeffs(i);
      if (std::abs(c) > threshold) {
        coeffs *= std::conj(c) / std::abs(c);
        break;
      }
    }
  }
};

/// |<psi1|psi2>| for unit-normalized inputs.
inline double overlap(const JointState& a, const JointState& b) {
  if (!(a.spec == b.spec)) {
    // compare on the common truncation
    const int nmin = std::min(a.spec.fock_dim, b.spec.fock_dim);
    if (a.spec.two_j != b.spec.two_j)
      throw std::invalid_argument("overlap: mismatched spin spaces");
    const int sd = a.spec.spin_dim();
    Complex acc = 0.0;
    for (int i = 0; i < nmin * sd; ++i) acc += std::conj(a.coeffs(i)) * b.coeffs(i);
    return std::abs(acc);
  }
  return std::abs(a.coeffs.dot(b.coeffs));
}

struct Operators {
  LinearOperator a;
  LinearOperator a_dag;
  LinearOperator id;
  LinearOperator j_plus;
  LinearOperator j_minus;
  LinearOperator j3;
};

/// Dense matrices for the algebra generators.  The creation operator is
/// truncated hard: a_dag |N-1> = 0, so the top Fock level is the only place
/// the algebra relations are violated.
inline Operators build_ops(const SpaceSpec& spec) {
  const int d = spec.dim();
  const int sd = spec.spin_dim();
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(d, d);
  Eigen::MatrixXcd jp = Eigen::MatrixXcd::Zero(d, d);
  Eigen::MatrixXcd j3 = Eigen::MatrixXcd::Zero(d, d);
  const double j = spec.two_j / 2.0;
  for (int n = 0; n < spec.fock_dim; ++n) {
    for (int s = 0; s < sd; ++s) {
      const int i = n * sd + s;
      const double m = -j + s;
      j3(i, i) = m;
      if (n >= 1) a((n - 1) * sd + s, i) = std::sqrt(static_cast<double>(n));
      if (s + 1 < sd) jp(n * sd + s + 1, i) = std::sqrt((j - m) * (j + m + 1.0));
    }
  }
  return Operators{
      {spec, a},
      {spec, a.adjoint()},
      {spec, Eigen::MatrixXcd::Identity(d, d)},
      {spec, jp},
      {spec, jp.adjoint()},
      {spec, j3},
  };
}

inline LinearOperator position_op(const Operators& ops) {
  return {ops.a.spec, (ops.a.mat + ops.a_dag.mat) / std::sqrt(2.0)};
}

inline LinearOperator momentum_op(const Operators& ops) {
  return {ops.a.spec, iunit * (ops.a_dag.mat - ops.a.mat) / std::sqrt(2.0)};
}

inline LinearOperator j1_op(const Operators& ops) {
  return {ops.a.spec, (ops.j_plus.mat + ops.j_minus.mat) / 2.0};
}

inline LinearOperator j2_op(const Operators& ops) {
  return {ops.a.spec, (ops.j_plus.mat - ops.j_minus.mat) / (2.0 * iunit)};
}

inline Complex expectation(const LinearOperator& op, const JointState& state) {
  return state.coeffs.dot(op.mat * state.coeffs) / state.coeffs.squaredNorm();
}

/// (Delta X)^2 = <X^2> - <X>^2 for hermitian X; tiny negative round-off
/// (>= -1e-12) is clamped to zero.
inline double dispersion(const LinearOperator& op, const JointState& state) {
  const double n2 = state.coeffs.squaredNorm();
  const Eigen::VectorXcd v = op.mat * state.coeffs;
  const double e = std::real(state.coeffs.dot(v)) / n2;
  const double var = v.squaredNorm() / n2 - e * e;
  if (var < -1e-12) throw NumericalError("dispersion: variance below -1e-12");
  return std::max(var, 0.0);
}

/// Means, variances and the Schrodinger-Robertson data for a hermitian pair:
/// [A,B] = iC, F the centered anticommutator.  srur_residual is
/// var_a * var_b - delta^2 and is >= 0 up to round-off, zero exactly on
/// minimum-uncertainty states.
struct DispersionReport {
  double mean_a = 0.0;
  double mean_b = 0.0;
  double var_a = 0.0;
  double var_b = 0.0;
  double mean_c = 0.0;
  double mean_f = 0.0;
  double delta = 0.0;
  double srur_residual = 0.0;
};

inline void require_hermitian(const LinearOperator& op, const char* who) {
  const double dev = (op.mat - op.mat.adjoint()).cwiseAbs().maxCoeff();
  if (dev > 1e-10)
    throw std::invalid_argument(std::string(who) + ": operator not hermitian (max deviation " +
                                std::to_string(dev) + ")");
}

inline DispersionReport srur_report(const LinearOperator& A, const LinearOperator& B,
                                    const JointState& state) {
  require_hermitian(A, "srur_report(A)");
  require_hermitian(B, "srur_report(B)");
  const double n2 = state.coeffs.squaredNorm();
  const Eigen::VectorXcd va = A.mat * state.coeffs;
  const Eigen::VectorXcd vb = B.mat * state.coeffs;

  DispersionReport r;
  r.mean_a = std::real(state.coeffs.dot(va)) / n2;
  r.mean_b = std::real(state.coeffs.dot(vb)) / n2;
  r.var_a = std::max(va.squaredNorm() / n2 - r.mean_a * r.mean_a, 0.0);
  r.var_b = std::max(vb.squaredNorm() / n2 - r.mean_b * r.mean_b, 0.0);
  const Complex ab = va.dot(vb) / n2;  // <A B>
  r.mean_c = 2.0 * std::imag(ab);      // <-i[A,B]>
  r.mean_f = 2.0 * std::real(ab) - 2.0 * r.mean_a * r.mean_b;
  r.delta = 0.5 * std::hypot(r.mean_c, r.mean_f);
  r.srur_residual = r.var_a * r.var_b - r.delta * r.delta;
  return r;
}

namespace detail {

/// Relative probability mass sitting in the top two Fock levels.
inline double tail_mass(const SpaceSpec& spec, const Eigen::VectorXcd& coeffs) {
  const int sd = spec.spin_dim();
  double top = 0.0;
  for (int n = std::max(0, spec.fock_dim - 2); n < spec.fock_dim; ++n)
    for (int s = 0; s < sd; ++s) top += std::norm(coeffs(n * sd + s));
  const double total = coeffs.squaredNorm();
  if (total == 0.0) throw NumericalError("tail_mass: zero vector");
  return top / total;
}

/// Run a coefficient builder at growing Fock dimension until the truncation
/// tail drops below tol.  builder(spec) must return the unnormalized
/// coefficient vector for that spec.
template <typename Builder>
JointState grow_until_converged(int fock_dim_hint, int two_j, Builder&& builder,
                                double tol = 1e-10) {
  int n = std::max(fock_dim_hint, 4);
  for (;;) {
    const SpaceSpec spec(n, two_j);
    if (spec.dim() > max_total_dim())
      throw TruncationError("state construction exceeded AES_LAB_MAX_DIM = " +
                            std::to_string(max_total_dim()));
    Eigen::VectorXcd coeffs = builder(spec);
    const double tail = tail_mass(spec, coeffs);
    if (tail < tol) {
      JointState st{spec, std::move(coeffs), tail};
      st.normalize();
      return st;
    }
    n *= 2;
  }
}

}  // namespace detail

}  // namespace aeslab

#endif  // AESLAB_FOCK_CORE_HPP
