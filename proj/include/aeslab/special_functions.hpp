#ifndef AESLAB_SPECIAL_FUNCTIONS_HPP
#define AESLAB_SPECIAL_FUNCTIONS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

#include "aeslab/types.hpp"

namespace aeslab {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact binomial coefficient C(n, k), n >= k >= 0.
inline BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("binomial: need n >= k >= 0");
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact at every step
  }
  return r;
}

/// Exact a!/b! as a rational, for nonnegative a, b.
inline BigRational factorial_ratio(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("factorial_ratio: negative argument");
  BigInt prod = 1;
  for (int i = std::min(a, b) + 1; i <= std::max(a, b); ++i) prod *= i;
  return a >= b ? BigRational(prod) : BigRational(1) / BigRational(prod);
}

inline double factorial_ratio_d(int a, int b) {
  return factorial_ratio(a, b).convert_to<double>();
}

/// Generalized binomial C(t, k) = t (t-1) ... (t-k+1) / k! for real t, integer k >= 0.
/// Finite for every real t, including negative integers.
inline double generalized_binomial(double t, int k) {
  if (k < 0) return 0.0;
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= (t - i) / (i + 1);
  return r;
}

namespace detail {
template <typename Scalar>
Scalar ipow(Scalar base, int e) {
  Scalar r{1.0};
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}
}  // namespace detail

/// Jacobi polynomial P_n^{(alpha,beta)}(x) by the terminating double-binomial sum
///
///   P_n^{(a,b)}(x) = sum_s C(n+a, n-s) C(n+b, s) ((x-1)/2)^s ((x+1)/2)^{n-s},
///
/// evaluated term by term so negative integer parameters never route through
/// Gamma-function poles.  Degrees up to at least n = 128 are supported; negative
/// degree returns 0 (the convention used by the spin dispersion ratios, where a
/// vanished numerator encodes the extremal-m case).
template <typename Scalar>
Scalar jacobi_p(int n, double alpha, double beta, Scalar x) {
  if (n < 0) return Scalar{0.0};
  if (n > 128) throw std::invalid_argument("jacobi_p: degree above supported bound 128");
  const Scalar u = (x - Scalar{1.0}) / Scalar{2.0};
  const Scalar v = (x + Scalar{1.0}) / Scalar{2.0};
  Scalar acc{0.0};
  for (int s = 0; s <= n; ++s) {
    const double c = generalized_binomial(n + alpha, n - s) * generalized_binomial(n + beta, s);
    if (c != 0.0) acc += Scalar{c} * detail::ipow(u, s) * detail::ipow(v, n - s);
  }
  return acc;
}

/// Three-term-recurrence evaluation of P_n^{(alpha,beta)}(x).  Valid for
/// parameters where the classical recurrence is nondegenerate (alpha, beta > -1);
/// kept as an independent cross-check of the terminating-sum form.
inline double jacobi_p_recurrence(int n, double alpha, double beta, double x) {
  if (n < 0) return 0.0;
  double pm2 = 1.0;
  if (n == 0) return pm2;
  double pm1 = (alpha + 1.0) + (alpha + beta + 2.0) * (x - 1.0) / 2.0;
  for (int k = 2; k <= n; ++k) {
    const double s = 2.0 * k + alpha + beta;
    const double a1 = 2.0 * k * (k + alpha + beta) * (s - 2.0);
    const double a2 = (s - 1.0) * (alpha * alpha - beta * beta);
    const double a3 = (s - 2.0) * (s - 1.0) * s;
    const double a4 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * s;
    const double pk = ((a2 + a3 * x) * pm1 - a4 * pm2) / a1;
    pm2 = pm1;
    pm1 = pk;
  }
  return pm1;
}

/// P_n^{(alpha,beta)}(1) = (alpha+1)(alpha+2)...(alpha+n) / n!.
inline double jacobi_p_at_one(int n, double alpha) {
  return generalized_binomial(n + alpha, n);
}

}  // namespace aeslab

#endif  // AESLAB_SPECIAL_FUNCTIONS_HPP
