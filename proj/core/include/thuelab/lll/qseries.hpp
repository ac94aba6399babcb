#pragma once

namespace thuelab::lll {

/// Euler's q-Pochhammer phi(q) = prod_{j>=1} (1 - q^j), evaluated through the
/// pentagonal-number series sum_r (-1)^r q^{r(3r-1)/2}. Summation stops once
/// terms drop below tol. Throws domain_error unless 0 <= q < 1.
double euler_phi(double q, double tol = 1e-15);

/// Truncated-product evaluation of the same function, kept as an independent
/// route for cross-checking the series.
double euler_phi_product(double q, double tol = 1e-15);

}  // namespace thuelab::lll
