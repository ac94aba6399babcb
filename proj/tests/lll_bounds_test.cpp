#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "doctest.h"
#include "thuelab/errors.hpp"
#include "thuelab/lll/bounds.hpp"
#include "thuelab/lll/qseries.hpp"
#include "thuelab/rng.hpp"

using namespace thuelab;
using namespace thuelab::lll;

namespace {

double param(const BoundReport& rep, const std::string& key) {
  for (const auto& [k, v] : rep.params)
    if (k == key) return v;
  FAIL("missing param ", key);
  return 0.0;
}

}  // namespace

TEST_CASE("euler phi series agrees with the product route") {
  CHECK(euler_phi(0.0) == 1.0);
  CHECK(euler_phi_product(0.0) == 1.0);
  Rng rng(20240517);
  for (int i = 0; i < 1000; ++i) {
    const double q = 0.9 * rng.unit();
    const double s = euler_phi(q);
    const double p = euler_phi_product(q);
    CAPTURE(q);
    CHECK(s == doctest::Approx(p).epsilon(1e-12));
  }
}

TEST_CASE("euler phi golden at one half") {
  CHECK(euler_phi(0.5) == doctest::Approx(0.288788095087).epsilon(1e-9));
}

TEST_CASE("euler phi is sandwiched by its leading partial sums") {
  // Pentagonal series groups alternate in sign with shrinking magnitude,
  // so 1 - q - q^2 <= phi(q) <= 1 - q on [0, 1).
  for (int i = 0; i <= 990; ++i) {
    const double q = i / 1000.0;
    const double phi = euler_phi(q);
    CAPTURE(q);
    CHECK(phi >= 1.0 - q - q * q - 1e-15);
    CHECK(phi <= 1.0 - q + 1e-15);
  }
}

TEST_CASE("euler phi domain") {
  CHECK_THROWS_AS(euler_phi(-0.001), domain_error);
  CHECK_THROWS_AS(euler_phi(1.0), domain_error);
  CHECK_THROWS_AS(euler_phi_product(-0.001), domain_error);
  CHECK_THROWS_AS(euler_phi_product(1.0), domain_error);
}

TEST_CASE("optimal_ak matches a local-minimum probe of the simplified form") {
  auto simplified = [](std::size_t k, double a) {
    return 0.5 * std::pow(1.0 - a - a * a, -6.0 * static_cast<double>(k)) / a *
           static_cast<double>(k) * static_cast<double>(k - 1);
  };
  for (std::size_t k = 2; k <= 12; ++k) {
    const double a = optimal_ak(k);
    CAPTURE(k);
    CHECK(a > 0.0);
    CHECK(a < 1.0 / static_cast<double>(k));
    const double at = simplified(k, a);
    CHECK(at <= simplified(k, a * (1.0 + 1e-4)));
    CHECK(at <= simplified(k, a * (1.0 - 1e-4)));
  }
  CHECK(optimal_ak(2) == doctest::Approx(0.0680244).epsilon(1e-5));
  CHECK_THROWS_AS(optimal_ak(1), domain_error);
}

TEST_CASE("bound_Ck value and nonnegative simplification margin") {
  const BoundReport rep = bound_Ck(3, 0.05);
  CHECK(rep.name == "C_k");
  CHECK(param(rep, "k") == 3.0);
  CHECK(param(rep, "a") == 0.05);
  // Independent recomputation through the product route of phi.
  const double expect = 3.0 * std::pow(euler_phi_product(0.05), -18.0) / 0.05;
  CHECK(rep.value == doctest::Approx(expect).epsilon(1e-12));
  CHECK(rep.ceil_value == std::ceil(rep.value));
  CHECK(rep.margin >= 0.0);

  for (std::size_t k = 2; k <= 6; ++k) {
    const double hi = 1.0 / static_cast<double>(k);
    for (int i = 1; i <= 20; ++i) {
      const double a = hi * i / 20.0;
      CAPTURE(k);
      CAPTURE(a);
      CHECK(bound_Ck(k, a).margin >= 0.0);
    }
  }
}

TEST_CASE("bound_Ck domain") {
  CHECK_THROWS_AS(bound_Ck(1, 0.1), domain_error);
  CHECK_THROWS_AS(bound_Ck(2, 0.0), domain_error);
  CHECK_THROWS_AS(bound_Ck(2, 0.5001), domain_error);
  CHECK_THROWS_AS(bound_Ck(2, -0.1), domain_error);
  CHECK_NOTHROW(bound_Ck(2, 0.5));
}

TEST_CASE("minimize_Ck golden for pairs") {
  const BoundReport rep = minimize_Ck(2);
  const double argmin = param(rep, "argmin");
  CHECK(argmin == doctest::Approx(0.0680244).epsilon(1e-3));
  CHECK(argmin == doctest::Approx(param(rep, "argmin_closed_form")).epsilon(1e-6));
  CHECK(rep.value == doctest::Approx(36.343).epsilon(1e-3));
  CHECK(rep.ceil_value == 37.0);
  CHECK(rep.margin >= 0.0);
  CHECK(!rep.trace.empty());
  CHECK_THROWS_AS(minimize_Ck(1), domain_error);
}

TEST_CASE("minimize_Ck never beats its own closed-form argmin") {
  for (std::size_t k : {2, 3, 5, 9}) {
    const BoundReport rep = minimize_Ck(k);
    const BoundReport at_closed = bound_Ck(k, optimal_ak(k));
    CAPTURE(k);
    // value is the simplified form, margin its gap down to the phi form.
    CHECK(rep.value >= at_closed.value);
    CHECK(rep.value - rep.margin == doctest::Approx(bound_Ck(k, param(rep, "argmin")).value).epsilon(1e-9));
  }
}

TEST_CASE("bound_Ct golden at the published weight pair") {
  const BoundReport rep = bound_Ct(1, 0.0514, 0.0426);
  CHECK(rep.name == "C_t");
  CHECK(rep.value == doctest::Approx(63.893).epsilon(1e-3));
  CHECK(rep.ceil_value == 64.0);
  REQUIRE(rep.trace.size() == 2);
  const double t1 = rep.trace[0].second, t2 = rep.trace[1].second;
  CHECK(rep.value == std::max(t1, t2));
  CHECK(rep.margin == doctest::Approx(t1 - t2));
}

TEST_CASE("bound_Ct domain") {
  CHECK_THROWS_AS(bound_Ct(0, 0.05, 0.05), domain_error);
  CHECK_THROWS_AS(bound_Ct(1, 0.0, 0.05), domain_error);
  CHECK_THROWS_AS(bound_Ct(1, 0.05, 1.0), domain_error);
  // a too close to the golden ratio makes 1 - a - a^2 nonpositive.
  CHECK_THROWS_AS(bound_Ct(1, 0.7, 0.05), domain_error);
}

TEST_CASE("minimize_Ct does at least as well as the published pair") {
  const BoundReport rep = minimize_Ct(1);
  CHECK(rep.name == "C_t");
  CHECK(rep.value <= bound_Ct(1, 0.0514, 0.0426).value + 0.5);
  CHECK(rep.value > 10.0);
  CHECK(rep.ceil_value == std::ceil(rep.value));
  const double a = param(rep, "argmin_a"), b = param(rep, "argmin_b");
  CHECK(a > 0.0);
  CHECK(a < 0.618);
  CHECK(b > 0.0);
  CHECK(b < 1.0);
  CHECK(bound_Ct(1, a, b).value == doctest::Approx(rep.value).epsilon(1e-9));
  CHECK_THROWS_AS(minimize_Ct(0), domain_error);
}

TEST_CASE("bound_pattern golden") {
  const BoundReport rep = bound_pattern(0.045);
  CHECK(rep.name == "C_pattern");
  CHECK(param(rep, "b") == 0.045);
  CHECK(rep.value == doctest::Approx(428.4888).epsilon(1e-4));
  CHECK(rep.ceil_value == 429.0);
  CHECK(rep.margin == doctest::Approx(429.0 - rep.value));
  CHECK_THROWS_AS(bound_pattern(0.0), domain_error);
  CHECK_THROWS_AS(bound_pattern(0.5001), domain_error);
  CHECK_NOTHROW(bound_pattern(0.5));
}

TEST_CASE("minimize_pattern golden") {
  const BoundReport rep = minimize_pattern();
  CHECK(param(rep, "argmin") == doctest::Approx(0.046921).epsilon(1e-3));
  CHECK(rep.value == doctest::Approx(428.06).epsilon(1e-3));
  CHECK(rep.ceil_value == 429.0);
  // The dedicated-weight evaluation can only sit above the minimum.
  CHECK(bound_pattern(0.045).value >= rep.value);
}

TEST_CASE("binomial agrees with a Pascal-triangle oracle") {
  std::vector<std::uint64_t> row{1};  // row n of the triangle
  for (unsigned n = 0; n <= 62; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(binomial(n, k) == row[k]);
    }
    CHECK(binomial(n, n + 1) == 0);
    std::vector<std::uint64_t> next(n + 2, 1);
    for (unsigned k = 1; k <= n; ++k) next[k] = row[k - 1] + row[k];
    row = std::move(next);
  }
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(62, 0) == 1);
  CHECK_THROWS_AS(binomial(63, 0), domain_error);
}

TEST_CASE("binomial_alpha at zero slack has margin ln 2") {
  const BoundReport rep = binomial_alpha(0.0);
  CHECK(rep.name == "alpha");
  CHECK(rep.value == 1.0);
  // binom(N, ceil(N/2)) <= 2^N is tight in log terms at N = 1 and 2.
  CHECK(rep.margin == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(rep.trace.size() == 60);
  for (const auto& [n, gap] : rep.trace) {
    CAPTURE(n);
    CHECK(gap >= rep.margin - 1e-15);
  }
}

TEST_CASE("binomial_alpha with positive slack stays verified") {
  for (double eps0 : {0.05, 0.1, 0.25}) {
    const BoundReport rep = binomial_alpha(eps0);
    CAPTURE(eps0);
    CHECK(rep.value == doctest::Approx(1.0 / std::sqrt(1.0 + 4.0 * eps0 * eps0)));
    CHECK(rep.value < 1.0);
    CHECK(rep.margin >= 0.0);
  }
  CHECK_THROWS_AS(binomial_alpha(-0.01), domain_error);
}
