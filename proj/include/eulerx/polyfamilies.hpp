#pragma once

// Laguerre polynomials, generalized geometric polynomials and the closed
// forms for power sums weighted by (extended) harmonic numbers.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "eulerx/exactnum.hpp"
#include "eulerx/rat.hpp"
#include "eulerx/series.hpp"
#include "eulerx/transforms.hpp"

namespace eulerx {

/// L_n(x) = sum_k C(n,k) (-x)^k / k!.
inline Poly laguerre(long n) {
  if (n < 0) throw std::invalid_argument("laguerre: n must be nonnegative");
  std::vector<Rat> c(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k)
    c[static_cast<std::size_t>(k)] = binomial_int(n, k) * sign_power(k) / factorial(k);
  return Poly(std::move(c));
}

/// integral_0^x (L_n(t) - 1)/t dt = sum_{k=1..n} C(n,k) (-x)^k / (k! k).
/// n = 0 yields the zero polynomial.
inline Poly laguerre_log_integral(long n) {
  if (n < 0) throw std::invalid_argument("laguerre_log_integral: n must be nonnegative");
  std::vector<Rat> c(static_cast<std::size_t>(n) + 1);
  for (long k = 1; k <= n; ++k)
    c[static_cast<std::size_t>(k)] = binomial_int(n, k) * sign_power(k) / (factorial(k) * Rat(k));
  return Poly(std::move(c));
}

/// omega_{m,p+1}(x) = sum_k S(m,k) (p+1)(p+2)...(p+k) x^k.
///
/// The rising factorial is Gamma(p+k+1)/Gamma(p+1); at p = 0 this is the
/// ordinary geometric polynomial sum_k S(m,k) k! x^k.
inline Poly geometric_poly(long m, const Rat& p) {
  if (m < 0) throw std::invalid_argument("geometric_poly: m must be nonnegative");
  std::vector<Rat> c(static_cast<std::size_t>(m) + 1);
  for (long k = 0; k <= m; ++k)
    c[static_cast<std::size_t>(k)] = Rat(stirling2(m, k)) * rising_factorial(p, k);
  return Poly(std::move(c));
}

/// sum C(p+n,n) n^m z^n  vs  (1-z)^{-(p+1)} omega_{m,p+1}(z/(1-z)).
inline SeriesSides nbinom_power_series_sides(long m, const Rat& p, std::size_t order) {
  if (m < 0) throw std::invalid_argument("nbinom_power_series_sides: m must be nonnegative");
  Series lhs = Series::from_generator(order, [&](std::size_t n) {
    return binomial_rat(p + Rat(n), static_cast<long>(n)) * Rat(n).pow(m);
  });
  Series prefactor = series_scale_argument(series_binom_pow(-(p + Rat(1)), order), Rat(-1));
  Series omega = series_compose(poly_to_series(geometric_poly(m, p), order), euler_substitution(order));
  return {std::move(lhs), prefactor * omega};
}

/// sum (H_{p+n}-H_p) C(p+n,n) n^m z^n  vs
/// (1-z)^{-(p+1)} { -log(1-z) omega_{m,p+1}(z/(1-z))
///                  + sum_{n=0..m} (z/(1-z))^n (H_{p+n}-H_p) C(p+n,n) n! S(m,n) }.
/// Throws PoleError when some p + k = 0.
inline SeriesSides hsum_closed_form_sides(long m, const Rat& p, std::size_t order) {
  if (m < 0) throw std::invalid_argument("hsum_closed_form_sides: m must be nonnegative");
  auto weight = [&](long n) { return harmonic_diff(p, n) * binomial_rat(p + Rat(n), n); };

  Series lhs = Series::from_generator(order, [&](std::size_t n) {
    return weight(static_cast<long>(n)) * Rat(n).pow(m);
  });

  std::vector<Rat> finite(static_cast<std::size_t>(m) + 1);
  for (long n = 0; n <= m; ++n)
    finite[static_cast<std::size_t>(n)] = weight(n) * factorial(n) * Rat(stirling2(m, n));

  Series sub = euler_substitution(order);
  Series neg_log = series_scale_argument(series_log1p(order), Rat(-1));
  neg_log = series_scale(Rat(-1), neg_log);  // -log(1-z)
  Series omega = series_compose(poly_to_series(geometric_poly(m, p), order), sub);
  Series finite_part = series_compose(poly_to_series(Poly(std::move(finite)), order), sub);
  Series prefactor = series_scale_argument(series_binom_pow(-(p + Rat(1)), order), Rat(-1));
  Series rhs = prefactor * (neg_log * omega + finite_part);
  return {std::move(lhs), std::move(rhs)};
}

}  // namespace eulerx
