#ifndef AESLAB_TYPES_HPP
#define AESLAB_TYPES_HPP

#include <complex>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>

namespace aeslab {

using Complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr Complex iunit{0.0, 1.0};

/// Truncated Fock space grew past the configured dimension cap.
class TruncationError : public std::runtime_error {
 public:
  explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

/// A numerical procedure failed to reach its accuracy contract.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Hard cap on the total (Fock x spin) dimension state constructors may grow to.
/// Overridable through the AES_LAB_MAX_DIM environment variable.
inline int max_total_dim() {
  static const int cap = [] {
    if (const char* env = std::getenv("AES_LAB_MAX_DIM")) {
      const long v = std::strtol(env, nullptr, 10);
      if (v > 0) return static_cast<int>(v);
    }
    return 4096;
  }();
  return cap;
}

}  // namespace aeslab

#endif  // AESLAB_TYPES_HPP
