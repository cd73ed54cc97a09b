#pragma once

// The binomial transform and the Euler-type series transformations built on
// it. Each transformation is exposed as a "sides" constructor returning both
// members of the identity as exact values; the identity holds iff they are
// equal.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eulerx/exactnum.hpp"
#include "eulerx/rat.hpp"
#include "eulerx/series.hpp"

namespace eulerx {

/// A named, parameterized coefficient sequence a_0, a_1, ...
///
/// Built-in ids:
///   ones                a_k = 1
///   zero                a_k = 0
///   delta               a_0 = 1, a_k = 0 otherwise
///   alt-ones            a_k = (-1)^k
///   recip-alt           a_0 = 0, a_k = (-1)^(k-1)/k
///   alt-harmonic-coeff  a_k = (-1)^(k-1) H_k
///   laguerre-exp        a_k = (-x)^k / k!          (param x)
///   binom-alpha         a_k = C(alpha, k)          (param alpha)
///   power               a_k = (-1)^k k^m           (param m, integer >= 0)
///   values              explicit finite list, zero-padded
class SequenceSpec {
 public:
  using Params = std::map<std::string, Rat>;

  SequenceSpec(std::string id, Params params = {}) : id_(std::move(id)), params_(std::move(params)) {
    validate();
  }

  static SequenceSpec values(std::vector<Rat> v) {
    SequenceSpec s("values");
    s.values_ = std::move(v);
    return s;
  }

  static const std::vector<std::string>& builtin_ids() {
    static const std::vector<std::string> ids = {
        "ones",         "zero",        "delta", "alt-ones", "recip-alt", "alt-harmonic-coeff",
        "laguerre-exp", "binom-alpha", "power", "values"};
    return ids;
  }

  const std::string& id() const { return id_; }
  const Params& params() const { return params_; }

  /// a_0..a_order.
  std::vector<Rat> generate(std::size_t order) const {
    std::vector<Rat> a;
    a.reserve(order + 1);
    for (std::size_t k = 0; k <= order; ++k) a.push_back(term(static_cast<long>(k)));
    return a;
  }

  Series as_series(std::size_t order) const { return Series(generate(order)); }

  /// Short label such as "binom-alpha(alpha=1/2)".
  std::string label() const {
    std::string s = id_;
    if (!params_.empty()) {
      s += "(";
      bool first = true;
      for (const auto& [k, v] : params_) {
        if (!first) s += ",";
        s += k + "=" + v.to_string();
        first = false;
      }
      s += ")";
    }
    return s;
  }

 private:
  const Rat& param(const std::string& name) const { return params_.at(name); }

  void require(const std::string& name) const {
    if (!params_.contains(name))
      throw std::invalid_argument("sequence \"" + id_ + "\" requires parameter " + name);
  }

  void validate() const {
    bool known = false;
    for (const auto& b : builtin_ids()) known = known || b == id_;
    if (!known) throw std::invalid_argument("unknown sequence id \"" + id_ + "\"");
    if (id_ == "laguerre-exp") require("x");
    if (id_ == "binom-alpha") require("alpha");
    if (id_ == "power") {
      require("m");
      const Rat& m = param("m");
      if (!m.is_integer() || m.sign() < 0)
        throw std::invalid_argument("sequence \"power\" needs a nonnegative integer m");
    }
  }

  Rat term(long k) const {
    if (id_ == "ones") return Rat(1);
    if (id_ == "zero") return Rat(0);
    if (id_ == "delta") return k == 0 ? Rat(1) : Rat(0);
    if (id_ == "alt-ones") return sign_power(k);
    if (id_ == "recip-alt") return k == 0 ? Rat(0) : sign_power(k - 1) * Rat(1, k);
    if (id_ == "alt-harmonic-coeff") return sign_power(k - 1) * harmonic(k);
    if (id_ == "laguerre-exp") return (-param("x")).pow(k) / factorial(k);
    if (id_ == "binom-alpha") return binomial_rat(param("alpha"), k);
    if (id_ == "power") return sign_power(k) * Rat(k).pow(param("m").num().get_si());
    // values
    return static_cast<std::size_t>(k) < values_.size() ? values_[static_cast<std::size_t>(k)] : Rat(0);
  }

  std::string id_;
  Params params_;
  std::vector<Rat> values_;
};

/// c_n = sum_{k=0..n} C(n,k) a_k.
inline std::vector<Rat> binomial_transform(const std::vector<Rat>& a) {
  std::vector<Rat> c(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    Rat binom(1), s(0);
    for (std::size_t k = 0; k <= n; ++k) {
      s += binom * a[k];
      binom = binom * Rat(n - k) / Rat(k + 1);
    }
    c[n] = s;
  }
  return c;
}

/// a_n = sum_{k=0..n} C(n,k) (-1)^(n-k) c_k.
inline std::vector<Rat> inverse_binomial_transform(const std::vector<Rat>& c) {
  std::vector<Rat> a(c.size());
  for (std::size_t n = 0; n < c.size(); ++n) {
    Rat binom(1), s(0);
    for (std::size_t k = 0; k <= n; ++k) {
      s += sign_power(static_cast<long>(n - k)) * binom * c[k];
      binom = binom * Rat(n - k) / Rat(k + 1);
    }
    a[n] = s;
  }
  return a;
}

struct SeriesSides {
  Series lhs;
  Series rhs;

  bool equal() const { return lhs == rhs; }
  long first_mismatch() const { return eulerx::first_mismatch(lhs, rhs); }
};

namespace detail {

// sum_n weight(n) c_n w^n composed with w = z/(1+z).
template <class Weight>
Series transformed_in_euler_variable(const std::vector<Rat>& c, std::size_t order, Weight&& weight) {
  Series inner_sum = Series::from_generator(order, [&](std::size_t n) { return weight(n) * c[n]; });
  return series_compose(inner_sum, inverse_euler_substitution(order));
}

}  // namespace detail

/// (1/(1-t)) f(t/(1-t))  vs  sum_n t^n (binomial transform)_n.
inline SeriesSides euler_transform_sides(const SequenceSpec& a, std::size_t order) {
  Series f = a.as_series(order);
  Series lhs = series_geometric(order) * series_compose(f, euler_substitution(order));
  Series rhs(binomial_transform(a.generate(order)));
  return {std::move(lhs), std::move(rhs)};
}

/// sum C(alpha,n)(-1)^n a_n z^n  vs
/// (1+z)^alpha sum (z/(z+1))^n C(alpha,n)(-1)^n c_n.
inline SeriesSides generalized_euler_sides(const Rat& alpha, const SequenceSpec& a, std::size_t order) {
  std::vector<Rat> seq = a.generate(order);
  std::vector<Rat> c = binomial_transform(seq);
  auto weight = [&](std::size_t n) { return binomial_rat(alpha, static_cast<long>(n)) * sign_power(static_cast<long>(n)); };
  Series lhs = Series::from_generator(order, [&](std::size_t n) { return weight(n) * seq[n]; });
  Series rhs = series_binom_pow(alpha, order) * detail::transformed_in_euler_variable(c, order, weight);
  return {std::move(lhs), std::move(rhs)};
}

/// sum a_n z^n / n!  vs  e^{-z} sum (z^n/n!) c_n.
inline SeriesSides exponential_euler_sides(const SequenceSpec& a, std::size_t order) {
  std::vector<Rat> seq = a.generate(order);
  std::vector<Rat> c = binomial_transform(seq);
  Series lhs = Series::from_generator(order, [&](std::size_t n) { return seq[n] / factorial(static_cast<long>(n)); });
  Series transformed = Series::from_generator(order, [&](std::size_t n) { return c[n] / factorial(static_cast<long>(n)); });
  Series rhs = series_scale_argument(series_exp(order), Rat(-1)) * transformed;
  return {std::move(lhs), std::move(rhs)};
}

/// a_0 log(1+z) + sum_{n>=1} a_n z^n/n  vs  sum_{n>=1} (z/(z+1))^n c_n / n.
inline SeriesSides log_euler_sides(const SequenceSpec& a, std::size_t order) {
  std::vector<Rat> seq = a.generate(order);
  std::vector<Rat> c = binomial_transform(seq);
  Series tail = Series::from_generator(order, [&](std::size_t n) {
    return n == 0 ? Rat(0) : seq[n] / Rat(n);
  });
  Series lhs = seq[0] * series_log1p(order) + tail;
  Series rhs = detail::transformed_in_euler_variable(c, order, [](std::size_t n) {
    return n == 0 ? Rat(0) : Rat(1) / Rat(n);
  });
  return {std::move(lhs), std::move(rhs)};
}

/// With b_n = (H_{p+n} - H_p) C(p+n, n):
///   sum b_n a_n z^n + log(1+z) sum C(p+n,n) a_n z^n
///   vs (1+z)^{-(p+1)} sum (z/(z+1))^n b_n c_n.
/// p = 0 gives the plain harmonic-number transformation.
/// Throws PoleError when some p + k = 0.
inline SeriesSides prop4_sides(const Rat& p, const SequenceSpec& a, std::size_t order) {
  std::vector<Rat> seq = a.generate(order);
  std::vector<Rat> c = binomial_transform(seq);
  std::vector<Rat> nbinom(order + 1), b(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    nbinom[n] = binomial_rat(p + Rat(n), static_cast<long>(n));
    b[n] = harmonic_diff(p, static_cast<long>(n)) * nbinom[n];
  }
  Series lhs = Series::from_generator(order, [&](std::size_t n) { return b[n] * seq[n]; }) +
               series_log1p(order) *
                   Series::from_generator(order, [&](std::size_t n) { return nbinom[n] * seq[n]; });
  Series rhs = series_binom_pow(-(p + Rat(1)), order) *
               detail::transformed_in_euler_variable(c, order, [&](std::size_t n) { return b[n]; });
  return {std::move(lhs), std::move(rhs)};
}

struct ScalarSides {
  Rat lhs;
  Rat rhs;
  bool equal() const { return lhs == rhs; }
};

struct Prop5Sides {
  Rat lhs;          // sum a_n b_n t^n
  Rat rhs;          // sum g^(n)(-t)/n! t^n c_n
  Rat rhs_variant;  // sum (-1)^n g^(n)(t)/n! t^n sum_k C(n,k)(-1)^k a_k
  bool equal() const { return lhs == rhs && lhs == rhs_variant; }
};

/// Hadamard-type transformation for polynomial g = sum b_n t^n. Uses a_0..a_deg(g);
/// `order` only bounds how many terms of `a` are drawn and must be >= deg(g).
inline Prop5Sides prop5_sides(const Poly& g, const SequenceSpec& a, const Rat& t, std::size_t order) {
  if (g.is_zero()) return {Rat(0), Rat(0), Rat(0)};
  std::size_t deg = static_cast<std::size_t>(g.degree());
  if (order < deg)
    throw std::invalid_argument("prop5_sides: order must be at least deg(g) = " + std::to_string(deg));
  std::vector<Rat> seq = a.generate(deg);
  std::vector<Rat> c = binomial_transform(seq);
  std::vector<Rat> alternated(seq.size());
  for (std::size_t k = 0; k < seq.size(); ++k) alternated[k] = sign_power(static_cast<long>(k)) * seq[k];
  std::vector<Rat> c_alt = binomial_transform(alternated);

  Prop5Sides out{Rat(0), Rat(0), Rat(0)};
  Rat t_pow(1);
  Poly derivative = g;
  for (std::size_t n = 0; n <= deg; ++n) {
    out.lhs += seq[n] * g.coeff(n) * t_pow;
    Rat taylor = factorial(static_cast<long>(n));
    out.rhs += poly_eval(derivative, -t) / taylor * t_pow * c[n];
    out.rhs_variant += sign_power(static_cast<long>(n)) * poly_eval(derivative, t) / taylor * t_pow * c_alt[n];
    derivative = poly_derivative(derivative);
    t_pow *= t;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Series acceleration: log 2 = sum (-1)^(k-1)/k = sum_{m>=1} H_m / 2^(m+1).

/// ln 2 to 64 decimal places. Cross-checked in the test suite against an
/// exact evaluation of sum 1/(k 2^k) with a rigorous tail bound.
inline constexpr const char* kLn2Digits =
    "0.6931471805599453094172321214581765680755001343602552541206800094";

/// kLn2Digits as an exact rational (numerator over 10^64).
inline Rat ln2_reference() {
  std::string digits = std::string(kLn2Digits).substr(2);
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(digits.size()));
  return Rat(BigInt(digits, 10), den);
}

struct AccelerationRow {
  long n;
  Rat raw;          // sum_{k=1..n} (-1)^(k-1)/k
  Rat transformed;  // sum_{m=1..n} H_m / 2^(m+1)
};

inline std::vector<AccelerationRow> accelerate_alternating(long terms) {
  if (terms < 1) throw std::invalid_argument("accelerate_alternating: terms must be >= 1");
  std::vector<AccelerationRow> rows;
  rows.reserve(static_cast<std::size_t>(terms));
  Rat raw(0), transformed(0), h(0), scale(1, 2);
  for (long n = 1; n <= terms; ++n) {
    raw += sign_power(n - 1) * Rat(1, n);
    h += Rat(1, n);
    scale /= Rat(2);
    transformed += h * scale;
    rows.push_back({n, raw, transformed});
  }
  return rows;
}

}  // namespace eulerx
