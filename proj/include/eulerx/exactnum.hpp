#pragma once

// Binomial coefficients, harmonic numbers and their telescoped extensions,
// Stirling numbers of the second kind.

#include <cstddef>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "eulerx/rat.hpp"

namespace eulerx {

/// Raised when an extended harmonic difference hits a nonpositive-integer
/// argument of the digamma function.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// C(n, k) for integer n >= 0; zero outside 0 <= k <= n.
inline Rat binomial_int(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial_int: n must be nonnegative");
  if (k < 0 || k > n) return Rat(0);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rat(r);
}

/// Generalized binomial coefficient alpha (alpha-1) ... (alpha-k+1) / k!.
inline Rat binomial_rat(const Rat& alpha, long k) {
  if (k < 0) throw std::invalid_argument("binomial_rat: k must be nonnegative");
  Rat r(1);
  for (long j = 0; j < k; ++j) r *= (alpha - Rat(j)) / Rat(j + 1);
  return r;
}

/// (p+1)(p+2)...(p+k); 1 for k = 0.
inline Rat rising_factorial(const Rat& p, long k) {
  if (k < 0) throw std::invalid_argument("rising_factorial: k must be nonnegative");
  Rat r(1);
  for (long j = 1; j <= k; ++j) r *= p + Rat(j);
  return r;
}

inline Rat factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: n must be nonnegative");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rat(r);
}

/// H_n = 1 + 1/2 + ... + 1/n, H_0 = 0.
inline Rat harmonic(long n) {
  if (n < 0) throw std::invalid_argument("harmonic: n must be nonnegative");
  Rat h(0);
  for (long k = 1; k <= n; ++k) h += Rat(1, k);
  return h;
}

/// H_{p+n} - H_p = sum_{k=1..n} 1/(p+k).
inline Rat harmonic_diff(const Rat& p, long n) {
  if (n < 0) throw std::invalid_argument("harmonic_diff: n must be nonnegative");
  Rat h(0);
  for (long k = 1; k <= n; ++k) {
    Rat denom = p + Rat(k);
    if (denom.is_zero())
      throw PoleError("harmonic_diff: pole at p + " + std::to_string(k) +
                      " = 0 (p = " + p.to_string() + ")");
    h += Rat(1) / denom;
  }
  return h;
}

/// H_alpha + H_n - H_{alpha+n} = alpha * sum_{k=1..n} 1/(k (k+alpha)).
inline Rat harmonic_symm(const Rat& alpha, long n) {
  if (n < 0) throw std::invalid_argument("harmonic_symm: n must be nonnegative");
  Rat s(0);
  for (long k = 1; k <= n; ++k) {
    Rat shifted = alpha + Rat(k);
    if (shifted.is_zero())
      throw PoleError("harmonic_symm: pole at alpha + " + std::to_string(k) +
                      " = 0 (alpha = " + alpha.to_string() + ")");
    s += Rat(1) / (Rat(k) * shifted);
  }
  return alpha * s;
}

namespace detail {

// Rows of S(m, k) grown on demand with S(m,k) = k S(m-1,k) + S(m-1,k-1).
class StirlingTable {
 public:
  BigInt get(std::size_t m, std::size_t k) {
    if (k > m) return BigInt(0);
    {
      std::shared_lock lock(mutex_);
      if (m < rows_.size()) return rows_[m][k];
    }
    std::unique_lock lock(mutex_);
    if (rows_.empty()) rows_.push_back({BigInt(1)});
    while (rows_.size() <= m) {
      const auto& prev = rows_.back();
      std::size_t i = rows_.size();
      std::vector<BigInt> row(i + 1, BigInt(0));
      for (std::size_t j = 1; j <= i; ++j) {
        BigInt left = j < prev.size() ? prev[j] : BigInt(0);
        row[j] = BigInt(static_cast<unsigned long>(j)) * left + prev[j - 1];
      }
      rows_.push_back(std::move(row));
    }
    return rows_[m][k];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<std::vector<BigInt>> rows_;
};

inline StirlingTable& stirling_table() {
  static StirlingTable table;
  return table;
}

}  // namespace detail

/// Stirling number of the second kind S(m, k).
inline BigInt stirling2(long m, long k) {
  if (m < 0 || k < 0) throw std::invalid_argument("stirling2: arguments must be nonnegative");
  return detail::stirling_table().get(static_cast<std::size_t>(m), static_cast<std::size_t>(k));
}

}  // namespace eulerx
