// Walk the oscillator minimum-uncertainty family along delta and show the
// closed moments, the state-route moments, and the two-construction overlap.
#include <cstdio>

#include "aeslab/fock_core.hpp"
#include "aeslab/oscillator_states.hpp"

using namespace aeslab;

int main() {
  const Complex beta{1.0, 0.5};
  const double phi = pi / 6.0;

  std::printf("oscillator family at phi = pi/6, eigenvalue beta = 1 + 0.5i\n\n");
  std::printf("%7s %14s %14s %14s %12s %12s\n", "delta", "var_x", "var_p", "Delta",
              "|residual|", "1-overlap");
  for (double delta : {0.0, 0.2, 0.4, 0.6, 0.8, 0.9}) {
    const JointState st = oscillator_mus_recurrence(delta, phi, beta, 16, 1e-12);
    const Operators ops = build_ops(st.spec);
    const DispersionReport num = srur_report(position_op(ops), momentum_op(ops), st);
    const DispersionReport cf = oscillator_closed_form(delta, phi, beta);
    const JointState alt = oscillator_mus_squeezed(delta, phi, beta, 16, 1e-12);
    std::printf("%7.2f %14.10f %14.10f %14.10f %12.2e %12.2e\n", delta, cf.var_a, cf.var_b,
                cf.delta, std::abs(num.srur_residual), 1.0 - overlap(st, alt));
  }

  std::printf("\nvariances squeeze below 1/2 on one quadrature while the product bound\n"
              "var_x * var_p = Delta^2 stays saturated; at delta = 0 all three curves\n"
              "meet at 1/2.\n");
  return 0;
}
