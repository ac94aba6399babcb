#include "thuelab/lll/bounds.hpp"

#include <cmath>

#include "thuelab/errors.hpp"
#include "thuelab/lll/qseries.hpp"

namespace thuelab::lll {

namespace {

double checked_ceil(double v) {
  if (!std::isfinite(v)) throw domain_error("bound is not finite at these parameters");
  return std::ceil(v);
}

// Simplified k-block form (1-a-a^2)^{-6k} k(k-1) / (2a).
double ck_simplified(std::size_t k, double a) {
  const double base = 1.0 - a - a * a;
  return 0.5 * std::pow(base, -6.0 * static_cast<double>(k)) / a *
         static_cast<double>(k) * static_cast<double>(k - 1);
}

double ck_phi_form(std::size_t k, double a) {
  const double kk = static_cast<double>(k);
  return 0.5 * kk * (kk - 1.0) * std::pow(euler_phi(a), -6.0 * kk) / a;
}

void require_ck_domain(std::size_t k, double a) {
  if (k < 2) throw domain_error("k must be >= 2");
  if (!(a > 0.0 && a <= 1.0 / static_cast<double>(k)))
    throw domain_error("a must lie in (0, 1/k]");
}

// Golden-section minimum of f on [lo, hi]; assumes unimodality, records
// evaluated points into trace (decimated to every 4th probe).
template <class F>
double golden_min(F f, double lo, double hi, double tol,
                  std::vector<std::pair<double, double>>* trace) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  int probes = 0;
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
      if (trace && ++probes % 4 == 0) trace->push_back({c, fc});
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
      if (trace && ++probes % 4 == 0) trace->push_back({d, fd});
    }
  }
  return (a + b) / 2.0;
}

}  // namespace

double optimal_ak(std::size_t k) {
  if (k < 2) throw domain_error("k must be >= 2");
  const double kk = static_cast<double>(k);
  return (std::sqrt(36.0 * kk * kk + 60.0 * kk + 5.0) - (6.0 * kk + 1.0)) /
         (24.0 * kk + 2.0);
}

BoundReport bound_Ck(std::size_t k, double a) {
  require_ck_domain(k, a);
  BoundReport rep;
  rep.name = "C_k";
  rep.params = {{"k", static_cast<double>(k)}, {"a", a}};
  rep.value = ck_phi_form(k, a);
  rep.ceil_value = checked_ceil(rep.value);
  const double simplified = ck_simplified(k, a);
  rep.margin = simplified - rep.value;
  rep.trace = {{a, rep.value}, {a, simplified}};
  return rep;
}

BoundReport minimize_Ck(std::size_t k) {
  if (k < 2) throw domain_error("k must be >= 2");
  const double hi = 1.0 / static_cast<double>(k);
  const double lo = 1e-4 * hi;
  BoundReport rep;
  rep.name = "C_k";
  auto f = [&](double a) { return ck_simplified(k, a); };
  const double argmin = golden_min(f, lo, hi, 1e-10, &rep.trace);
  rep.value = ck_simplified(k, argmin);
  rep.ceil_value = checked_ceil(rep.value);
  rep.margin = rep.value - ck_phi_form(k, argmin);
  rep.params = {{"k", static_cast<double>(k)},
                {"argmin", argmin},
                {"argmin_closed_form", optimal_ak(k)}};
  return rep;
}

namespace {

// Both requirement terms of the t-biased constant, in log space.
struct CtTerms {
  double log1, log2;
};

CtTerms ct_log_terms(std::size_t t, double a, double b) {
  if (t < 1) throw domain_error("t must be >= 1");
  if (!(a > 0.0 && a < 1.0 && b > 0.0 && b < 1.0))
    throw domain_error("a and b must lie in (0, 1)");
  const double base = (1.0 - b) * (1.0 - a - a * a);
  if (!(base > 0.0)) throw domain_error("(1-b)(1-a-a^2) must be positive");
  const double tt = static_cast<double>(t);
  const double lb = std::log(base);
  return {-std::log(a) - (2.0 * tt + 1.0) * (2.0 * tt + 2.0) * lb,
          std::log(1.5 * tt) - std::log(b) - (3.0 * tt * tt + 3.0) * lb};
}

}  // namespace

BoundReport bound_Ct(std::size_t t, double a, double b) {
  const CtTerms terms = ct_log_terms(t, a, b);
  BoundReport rep;
  rep.name = "C_t";
  rep.params = {{"t", static_cast<double>(t)}, {"a", a}, {"b", b}};
  const double t1 = std::exp(terms.log1), t2 = std::exp(terms.log2);
  rep.value = std::max(t1, t2);
  rep.ceil_value = checked_ceil(rep.value);
  rep.margin = t1 - t2;
  rep.trace = {{a, t1}, {b, t2}};
  return rep;
}

BoundReport minimize_Ct(std::size_t t) {
  if (t < 1) throw domain_error("t must be >= 1");
  auto log_value = [&](double a, double b) {
    const CtTerms terms = ct_log_terms(t, a, b);
    return std::max(terms.log1, terms.log2);
  };
  // Log-spaced coarse grid, then three rounds of local refinement.
  const double lo = 1e-4, hi = 0.6;
  double best_a = lo, best_b = lo, best = 1e300;
  const int n = 60;
  auto probe = [&](double a, double b) {
    if (!(a > 0.0 && a < 0.618 && b > 0.0 && b < 1.0)) return;
    const double v = log_value(a, b);
    if (v < best) {
      best = v;
      best_a = a;
      best_b = b;
    }
  };
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      probe(lo * std::pow(hi / lo, i / static_cast<double>(n)),
            lo * std::pow(hi / lo, j / static_cast<double>(n)));
  double span = std::pow(hi / lo, 1.0 / n);  // one coarse cell, as a ratio
  BoundReport rep;
  rep.name = "C_t";
  for (int round = 0; round < 3; ++round) {
    rep.trace.push_back({best_a, std::exp(best)});
    const double ca = best_a, cb = best_b;
    for (int i = -10; i <= 10; ++i)
      for (int j = -10; j <= 10; ++j)
        probe(ca * std::pow(span, i / 10.0), cb * std::pow(span, j / 10.0));
    span = std::pow(span, 0.2);
  }
  rep.value = std::exp(best);
  rep.ceil_value = checked_ceil(rep.value);
  const CtTerms terms = ct_log_terms(t, best_a, best_b);
  rep.margin = std::exp(terms.log1) - std::exp(terms.log2);
  rep.params = {{"t", static_cast<double>(t)}, {"argmin_a", best_a}, {"argmin_b", best_b}};
  return rep;
}

namespace {

double pattern_value(double b) {
  return 8.0 * std::pow(1.0 - b, 6.0) / (b * std::pow(euler_phi(b), 24.0));
}

}  // namespace

BoundReport bound_pattern(double b) {
  if (!(b > 0.0 && b <= 0.5)) throw domain_error("b must lie in (0, 1/2]");
  BoundReport rep;
  rep.name = "C_pattern";
  rep.params = {{"b", b}};
  rep.value = pattern_value(b);
  rep.ceil_value = checked_ceil(rep.value);
  rep.margin = rep.ceil_value - rep.value;
  rep.trace = {{b, rep.value}};
  return rep;
}

BoundReport minimize_pattern() {
  BoundReport rep;
  rep.name = "C_pattern";
  const double argmin = golden_min(pattern_value, 1e-4, 0.5, 1e-10, &rep.trace);
  rep.value = pattern_value(argmin);
  rep.ceil_value = checked_ceil(rep.value);
  rep.margin = rep.ceil_value - rep.value;
  rep.params = {{"argmin", argmin}};
  return rep;
}

std::uint64_t binomial(unsigned n, unsigned k) {
  if (n > 62) throw domain_error("binomial: n must be <= 62");
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 c = 1;
  for (unsigned i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;  // exact: prefix products are binomials
  }
  return static_cast<std::uint64_t>(c);
}

BoundReport binomial_alpha(double eps0) {
  if (!(eps0 >= 0.0)) throw domain_error("eps0 must be >= 0");
  BoundReport rep;
  rep.name = "alpha";
  rep.params = {{"eps0", eps0}};
  rep.value = 1.0 / std::sqrt(1.0 + 4.0 * eps0 * eps0);
  rep.ceil_value = checked_ceil(rep.value);
  const double log2a = std::log(2.0 * rep.value);
  double worst = 1e300;
  for (unsigned n = 1; n <= 60; ++n) {
    const auto idx = static_cast<unsigned>(std::ceil((0.5 + eps0) * n));
    if (idx > n) continue;  // binomial is 0, inequality trivial
    const double gap =
        n * log2a - std::log(static_cast<double>(binomial(n, idx)));
    rep.trace.push_back({static_cast<double>(n), gap});
    worst = std::min(worst, gap);
  }
  rep.margin = worst;
  return rep;
}

}  // namespace thuelab::lll
