#include "thuelab/lll/qseries.hpp"

#include <cmath>

#include "thuelab/errors.hpp"

namespace thuelab::lll {

double euler_phi(double q, double tol) {
  if (!(q >= 0.0 && q < 1.0)) throw domain_error("euler_phi: q must lie in [0, 1)");
  if (q == 0.0) return 1.0;
  // Pentagonal exponents r(3r-1)/2 for r = 1, -1, 2, -2, ...; sign (-1)^|r|.
  double sum = 1.0;
  double sign = -1.0;
  for (long r = 1;; ++r, sign = -sign) {
    const double e1 = 0.5 * r * (3.0 * r - 1.0);
    const double e2 = 0.5 * r * (3.0 * r + 1.0);
    const double t1 = std::pow(q, e1);
    const double t2 = std::pow(q, e2);
    sum += sign * (t1 + t2);
    if (t1 < tol) break;
  }
  return sum;
}

double euler_phi_product(double q, double tol) {
  if (!(q >= 0.0 && q < 1.0)) throw domain_error("euler_phi_product: q must lie in [0, 1)");
  if (q == 0.0) return 1.0;
  // Tail bound: prod_{j>J}(1-q^j) >= 1 - q^{J+1}/(1-q), so stop once the
  // geometric remainder is below tol.
  double prod = 1.0;
  double qj = q;
  while (qj / (1.0 - q) >= tol) {
    prod *= 1.0 - qj;
    qj *= q;
  }
  return prod;
}

}  // namespace thuelab::lll
