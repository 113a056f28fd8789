// c_k = I_k(beta) e^-beta for a few beta, and how many terms the series keeps.
#include <cmath>
#include <cstdio>
#include <numbers>

#include "vmwin/vmwin.hpp"

int main() {
  for (double beta : {1.0, 3.0, 5.0, 10.0}) {
    const auto c = vmwin::vonmises_series_coefficients(beta, 1e-14);
    std::printf("beta=%g  K=%d  1/sqrt(2 pi beta)=%.6f\n", beta, c.order(),
                1.0 / std::sqrt(2.0 * std::numbers::pi * beta));
    for (int k = 0; k <= 6 && k <= c.order(); ++k) std::printf("  c_%d = %.10f\n", k, c.terms[k]);
  }
}
