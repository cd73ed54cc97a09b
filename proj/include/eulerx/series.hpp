#pragma once

// Truncated formal power series and univariate polynomials over Rat.
//
// A Series of order N carries exactly the coefficients c_0..c_N. Binary
// operations truncate to the smaller operand order, so results never claim
// coefficients beyond what both inputs determine.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eulerx/exactnum.hpp"
#include "eulerx/rat.hpp"

namespace eulerx {

/// Raised when composing with an inner series whose constant term is nonzero.
class CompositionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class Series {
 public:
  /// Zero series of order 0.
  Series() : coeffs_(1) {}

  explicit Series(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("Series: needs at least one coefficient");
  }

  Series(std::initializer_list<Rat> coeffs) : Series(std::vector<Rat>(coeffs)) {}

  static Series zero(std::size_t order) { return Series(std::vector<Rat>(order + 1)); }

  static Series constant(const Rat& c, std::size_t order) {
    Series s = zero(order);
    s.coeffs_[0] = c;
    return s;
  }

  /// The series z (identity under composition).
  static Series variable(std::size_t order) {
    Series s = zero(order);
    if (order >= 1) s.coeffs_[1] = Rat(1);
    return s;
  }

  /// Coefficients produced by gen(n) for n = 0..order.
  template <class Gen>
  static Series from_generator(std::size_t order, Gen&& gen) {
    std::vector<Rat> c;
    c.reserve(order + 1);
    for (std::size_t n = 0; n <= order; ++n) c.push_back(gen(n));
    return Series(std::move(c));
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rat& operator[](std::size_t n) const { return coeffs_.at(n); }
  std::span<const Rat> coeffs() const { return coeffs_; }

  Series truncated(std::size_t order) const {
    if (order > this->order())
      throw std::invalid_argument("Series::truncated: cannot extend order " +
                                  std::to_string(this->order()) + " to " + std::to_string(order));
    return Series(std::vector<Rat>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order) + 1));
  }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c.is_zero(); });
  }

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<Rat> coeffs_;
};

/// Dense polynomial, lowest degree first, no trailing zero coefficient.
class Poly {
 public:
  Poly() = default;

  explicit Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Rat> coeffs) : Poly(std::vector<Rat>(coeffs)) {}

  static Poly constant(const Rat& c) { return Poly({c}); }
  static Poly x() { return Poly({Rat(0), Rat(1)}); }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::span<const Rat> coeffs() const { return coeffs_; }

  /// Coefficient of x^k (zero beyond the degree).
  Rat coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rat(0); }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Rat> coeffs_;
};

// ---------------------------------------------------------------------------
// Series algebra

inline Series series_add(const Series& a, const Series& b) {
  std::size_t n = std::min(a.order(), b.order());
  return Series::from_generator(n, [&](std::size_t k) { return a[k] + b[k]; });
}

inline Series series_sub(const Series& a, const Series& b) {
  std::size_t n = std::min(a.order(), b.order());
  return Series::from_generator(n, [&](std::size_t k) { return a[k] - b[k]; });
}

inline Series series_scale(const Rat& c, const Series& a) {
  return Series::from_generator(a.order(), [&](std::size_t k) { return c * a[k]; });
}

/// Cauchy product truncated to the smaller order.
inline Series series_mul(const Series& a, const Series& b) {
  std::size_t n = std::min(a.order(), b.order());
  std::vector<Rat> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) c[i + j] += a[i] * b[j];
  }
  return Series(std::move(c));
}

inline Series operator+(const Series& a, const Series& b) { return series_add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return series_sub(a, b); }
inline Series operator*(const Series& a, const Series& b) { return series_mul(a, b); }
inline Series operator*(const Rat& c, const Series& a) { return series_scale(c, a); }

/// outer(inner(z)) by Horner's scheme; inner must have zero constant term.
inline Series series_compose(const Series& outer, const Series& inner) {
  if (!inner[0].is_zero())
    throw CompositionError("series_compose: inner series has nonzero constant term " +
                           inner[0].to_string());
  std::size_t n = std::min(outer.order(), inner.order());
  Series acc = Series::constant(outer[n], n);
  Series in = inner.truncated(n);
  for (std::size_t k = n; k-- > 0;) {
    acc = series_mul(acc, in);
    std::vector<Rat> c(acc.coeffs().begin(), acc.coeffs().end());
    c[0] += outer[k];
    acc = Series(std::move(c));
  }
  return acc;
}

/// (1+z)^alpha with coefficients C(alpha, n).
inline Series series_binom_pow(const Rat& alpha, std::size_t order) {
  std::vector<Rat> c;
  c.reserve(order + 1);
  Rat term(1);
  for (std::size_t n = 0; n <= order; ++n) {
    c.push_back(term);
    term *= (alpha - Rat(n)) / Rat(n + 1);
  }
  return Series(std::move(c));
}

/// log(1+z).
inline Series series_log1p(std::size_t order) {
  return Series::from_generator(order, [](std::size_t n) {
    if (n == 0) return Rat(0);
    return sign_power(static_cast<long>(n) - 1) * Rat(1, static_cast<long>(n));
  });
}

/// e^z.
inline Series series_exp(std::size_t order) {
  std::vector<Rat> c;
  c.reserve(order + 1);
  Rat term(1);
  for (std::size_t n = 0; n <= order; ++n) {
    c.push_back(term);
    term /= Rat(n + 1);
  }
  return Series(std::move(c));
}

/// 1/(1-z).
inline Series series_geometric(std::size_t order) {
  return Series::from_generator(order, [](std::size_t) { return Rat(1); });
}

/// a(lambda z).
inline Series series_scale_argument(const Series& a, const Rat& lambda) {
  Rat power(1);
  std::vector<Rat> c;
  c.reserve(a.order() + 1);
  for (std::size_t n = 0; n <= a.order(); ++n) {
    c.push_back(a[n] * power);
    power *= lambda;
  }
  return Series(std::move(c));
}

/// z/(1-z), the Euler substitution.
inline Series euler_substitution(std::size_t order) {
  return Series::from_generator(order, [](std::size_t n) { return n == 0 ? Rat(0) : Rat(1); });
}

/// z/(1+z), inverse of the Euler substitution.
inline Series inverse_euler_substitution(std::size_t order) {
  return Series::from_generator(order, [](std::size_t n) {
    return n == 0 ? Rat(0) : sign_power(static_cast<long>(n) - 1);
  });
}

/// Coefficientwise product a_n b_n.
inline Series hadamard(const Series& a, const Series& b) {
  std::size_t n = std::min(a.order(), b.order());
  return Series::from_generator(n, [&](std::size_t k) { return a[k] * b[k]; });
}

/// c_n = a_0 + ... + a_n, i.e. a(z)/(1-z).
inline Series partial_sums(const Series& a) {
  std::vector<Rat> c;
  c.reserve(a.order() + 1);
  Rat running(0);
  for (Rat x : a.coeffs()) {
    running += x;
    c.push_back(running);
  }
  return Series(std::move(c));
}

/// (1 + lambda t)^alpha a(t), by the convolution sum_k C(alpha, n-k) a_k lambda^(n-k).
inline Series binom_shift_mul(const Rat& alpha, const Rat& lambda, const Series& a) {
  std::size_t order = a.order();
  std::vector<Rat> weight;  // C(alpha, j) lambda^j
  weight.reserve(order + 1);
  Rat binom(1), power(1);
  for (std::size_t j = 0; j <= order; ++j) {
    weight.push_back(binom * power);
    binom *= (alpha - Rat(j)) / Rat(j + 1);
    power *= lambda;
  }
  return Series::from_generator(order, [&](std::size_t n) {
    Rat s(0);
    for (std::size_t k = 0; k <= n; ++k) s += weight[n - k] * a[k];
    return s;
  });
}

/// Termwise antiderivative with zero constant term; order grows by one.
inline Series series_integrate(const Series& a) {
  std::vector<Rat> c(a.order() + 2);
  for (std::size_t n = 1; n <= a.order() + 1; ++n) c[n] = a[n - 1] / Rat(n);
  return Series(std::move(c));
}

/// Formal derivative; order shrinks by one (an order-0 series maps to zero).
inline Series series_derivative(const Series& a) {
  if (a.order() == 0) return Series::zero(0);
  return Series::from_generator(a.order() - 1, [&](std::size_t n) { return Rat(n + 1) * a[n + 1]; });
}

/// Index of the first coefficient where a and b differ, compared up to the
/// smaller order; -1 when they agree.
inline long first_mismatch(const Series& a, const Series& b) {
  std::size_t n = std::min(a.order(), b.order());
  for (std::size_t k = 0; k <= n; ++k)
    if (a[k] != b[k]) return static_cast<long>(k);
  return -1;
}

// ---------------------------------------------------------------------------
// Polynomials

inline Rat poly_eval(const Poly& p, const Rat& x) {
  Rat acc(0);
  auto c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
  return acc;
}

/// Embeds p as a series of the given order, zero-padding or truncating.
inline Series poly_to_series(const Poly& p, std::size_t order) {
  return Series::from_generator(order, [&](std::size_t n) { return p.coeff(n); });
}

inline Poly poly_add(const Poly& a, const Poly& b) {
  std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<Rat> c(n);
  for (std::size_t k = 0; k < n; ++k) c[k] = a.coeff(k) + b.coeff(k);
  return Poly(std::move(c));
}

inline Poly poly_sub(const Poly& a, const Poly& b) {
  std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<Rat> c(n);
  for (std::size_t k = 0; k < n; ++k) c[k] = a.coeff(k) - b.coeff(k);
  return Poly(std::move(c));
}

inline Poly poly_scale(const Rat& s, const Poly& a) {
  std::vector<Rat> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : c) x *= s;
  return Poly(std::move(c));
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> c(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return Poly(std::move(c));
}

inline Poly poly_derivative(const Poly& a) {
  if (a.degree() < 1) return Poly();
  std::vector<Rat> c(a.coeffs().size() - 1);
  for (std::size_t k = 1; k < a.coeffs().size(); ++k) c[k - 1] = Rat(k) * a.coeffs()[k];
  return Poly(std::move(c));
}

/// Antiderivative vanishing at 0.
inline Poly poly_integrate(const Poly& a) {
  if (a.is_zero()) return Poly();
  std::vector<Rat> c(a.coeffs().size() + 1);
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) c[k + 1] = a.coeffs()[k] / Rat(k + 1);
  return Poly(std::move(c));
}

/// (p(x) - p(0)) / x.
inline Poly poly_drop_constant_div_x(const Poly& a) {
  if (a.degree() < 1) return Poly();
  return Poly(std::vector<Rat>(a.coeffs().begin() + 1, a.coeffs().end()));
}

/// Degree of the first differing coefficient; -1 when equal.
inline long first_mismatch(const Poly& a, const Poly& b) {
  std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  for (std::size_t k = 0; k < n; ++k)
    if (a.coeff(k) != b.coeff(k)) return static_cast<long>(k);
  return -1;
}

}  // namespace eulerx
