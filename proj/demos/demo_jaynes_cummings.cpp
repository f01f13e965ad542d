// The collapsed x-case Hamiltonian at x = -w0/w is the resonant two-level
// single-mode coupling model.  Compare matrices, then show how the lower
// eigenstate branch beats the flat w^2|z|^2 dispersion floor.
#include <cstdio>

#include "aeslab/hamiltonian_factory.hpp"

using namespace aeslab;

int main() {
  const double w = 1.0, w0 = 0.6;
  XCaseParams p;
  p.x = -w0 / w;
  p.beta = 0.0;
  p.w = w;

  const SpaceSpec spec(32, 1);
  const Eigen::MatrixXcd h = build_hamiltonian(x_case_element(p), w, spec).mat;
  const Eigen::MatrixXcd jc = jaynes_cummings_limit(w, w0, 32).mat;
  std::printf("w = %.2f, w0 = %.2f: factorized vs two-level model, entrywise max dev = %.3e\n\n",
              w, w0, (h - jc).cwiseAbs().maxCoeff());

  const Complex z{1.0, 0.0};
  std::printf("%7s %18s %18s\n", "|x|", "var_H (m = +1/2)", "var_H (m = -1/2)");
  for (double x : {0.1, 0.25, std::sqrt(2.0) - 1.0, 0.7, 1.0, 2.0}) {
    XCaseParams q;
    q.x = x;
    q.beta = 0.0;
    const CoupledAes up = x_case_eigenstates(q, 1, 1, z);
    const CoupledAes dn = x_case_eigenstates(q, 1, -1, z);
    std::printf("%7.4f %18.12f %18.12f\n", x,
                energy_stats(x_case_element(q), q.w, up.state).var_e,
                energy_stats(x_case_element(q), q.w, dn.state).var_e);
  }
  std::printf("\nthe lower branch dips to 2(sqrt(2)-1) ~ 0.8284 at |x| = sqrt(2)-1 ~ 0.4142,\n"
              "below the flat unit floor of the canonical commutator case.\n");
  return 0;
}
