#pragma once

// Exact rational scalar backed by GMP. Every value is kept in canonical
// form: positive denominator, numerator and denominator coprime.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

namespace eulerx {

using BigInt = mpz_class;

/// Raised when text does not parse as "p" or "p/q".
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Rat {
 public:
  Rat() = default;
  template <std::integral T>
  Rat(T value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>)
      q_ = static_cast<long>(value);
    else
      q_ = static_cast<unsigned long>(value);
  }
  explicit Rat(const BigInt& value) : q_(value) {}

  Rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  Rat(long num, long den) : Rat(BigInt(num), BigInt(den)) {}

  /// Parses "p" or "p/q" with an optional leading '-' on the numerator.
  static Rat parse(std::string_view text) {
    auto digits_only = [](std::string_view s) {
      if (s.empty()) return false;
      for (char c : s)
        if (c < '0' || c > '9') return false;
      return true;
    };
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
      negative = true;
      body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den =
        slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!digits_only(num) || !digits_only(den))
      throw ParseError("malformed rational: \"" + std::string(text) + "\"");
    BigInt n(std::string(num), 10);
    BigInt d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator: \"" + std::string(text) + "\"");
    if (negative) n = -n;
    return Rat(n, d);
  }

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }
  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  const mpq_class& mpq() const { return q_; }

  std::string to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  Rat operator-() const { return from_mpq(-q_); }
  Rat abs() const { return from_mpq(::abs(q_)); }

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.q_, b.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Integer power; negative exponents invert (error on 0^negative). 0^0 = 1.
  Rat pow(long e) const {
    if (e < 0) return Rat(1) / pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rat(n, d);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.to_string();
  }

 private:
  static Rat from_mpq(const mpq_class& q) {
    Rat r;
    r.q_ = q;
    return r;
  }

  mpq_class q_;  // canonical
};

/// (-1)^k as a Rat.
inline Rat sign_power(long k) { return (k % 2 == 0) ? Rat(1) : Rat(-1); }

/// Decimal rendering in scientific notation with `digits` significant digits,
/// rounded half away from zero, e.g. "1.2345e-10". Zero renders as "0".
inline std::string to_decimal(const Rat& value, int digits) {
  if (digits < 1) throw std::invalid_argument("to_decimal: digits must be >= 1");
  if (value.is_zero()) return "0";
  BigInt a = abs(value.num());
  BigInt b = value.den();

  // exponent e with 10^e <= a/b < 10^(e+1)
  long e = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 10));
  auto pow10 = [](long k) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(k));
    return r;
  };
  auto ge_pow10 = [&](long k) {  // a/b >= 10^k
    return k >= 0 ? a >= b * pow10(k) : a * pow10(-k) >= b;
  };
  while (!ge_pow10(e)) --e;
  while (ge_pow10(e + 1)) ++e;

  // scaled = round(a/b * 10^(digits-1-e))
  long shift = digits - 1 - e;
  BigInt num = shift >= 0 ? a * pow10(shift) : a;
  BigInt den = shift >= 0 ? b : b * pow10(-shift);
  BigInt scaled = (2 * num + den) / (2 * den);
  if (scaled == pow10(digits)) {
    scaled = pow10(digits - 1);
    ++e;
  }
  std::string s = scaled.get_str();
  std::string out = value.sign() < 0 ? "-" : "";
  out += s.substr(0, 1);
  if (s.size() > 1) out += "." + s.substr(1);
  out += "e";
  out += e < 0 ? "-" : "+";
  std::string ex = std::to_string(e < 0 ? -e : e);
  if (ex.size() < 2) ex = "0" + ex;
  out += ex;
  return out;
}

}  // namespace eulerx
