#pragma once

// Registry of the harmonic-number and series-transformation identities and an
// engine that checks each one by exhaustive exact evaluation over a finite
// parameter grid.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

#include "eulerx/exactnum.hpp"
#include "eulerx/polyfamilies.hpp"
#include "eulerx/rat.hpp"
#include "eulerx/series.hpp"
#include "eulerx/transforms.hpp"

namespace eulerx {

class UnknownIdentityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class CaseStatus { verified, failed, skipped_pole };

inline const char* to_string(CaseStatus s) {
  switch (s) {
    case CaseStatus::verified: return "verified";
    case CaseStatus::failed: return "failed";
    case CaseStatus::skipped_pole: return "skipped-pole";
  }
  return "?";
}

using ParamValue = std::variant<Rat, std::string>;
using ParamList = std::vector<std::pair<std::string, ParamValue>>;

inline std::string param_text(const ParamValue& v) {
  if (const auto* r = std::get_if<Rat>(&v)) return r->to_string();
  return std::get<std::string>(v);
}

/// First point where the two sides disagree. `kind` names what `index`
/// counts: "degree" (series coefficient), "coefficient" (polynomial
/// coefficient), "n" (sequence index) or "form" (alternative statement).
struct Witness {
  std::string kind;
  long index = 0;
  Rat lhs;
  Rat rhs;
};

struct IdentityCase {
  ParamList params;
  CaseStatus status = CaseStatus::verified;
  std::optional<Witness> witness;  // present iff status == failed
  std::string note;                // pole diagnostic for skipped cases
};

struct IdentitySummary {
  std::size_t verified = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
};

struct IdentityReport {
  std::string identity;
  std::string anchor;
  std::vector<IdentityCase> cases;

  IdentitySummary summary() const {
    IdentitySummary s;
    for (const auto& c : cases) {
      switch (c.status) {
        case CaseStatus::verified: ++s.verified; break;
        case CaseStatus::failed: ++s.failed; break;
        case CaseStatus::skipped_pole: ++s.skipped; break;
      }
    }
    return s;
  }

  bool ok() const { return summary().failed == 0; }
};

inline bool all_verified(const std::vector<IdentityReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.ok(); });
}

/// The values of alpha and p used when no explicit grid is given.
inline std::vector<Rat> default_parameter_grid() {
  return {Rat(-3), Rat(-2), Rat(2), Rat(3), Rat(0), Rat(1), Rat(1, 2), Rat(-1, 2), Rat(3, 7), Rat(-3, 7)};
}

/// Sequences fed to the series-transformation identities.
inline std::vector<SequenceSpec> default_sequences() {
  return {
      SequenceSpec("ones"),
      SequenceSpec("zero"),
      SequenceSpec("delta"),
      SequenceSpec("alt-ones"),
      SequenceSpec("recip-alt"),
      SequenceSpec("alt-harmonic-coeff"),
      SequenceSpec("laguerre-exp", {{"x", Rat(1)}}),
      SequenceSpec("laguerre-exp", {{"x", Rat(-3, 7)}}),
      SequenceSpec("binom-alpha", {{"alpha", Rat(1, 2)}}),
      SequenceSpec("binom-alpha", {{"alpha", Rat(-3)}}),
      SequenceSpec("power", {{"m", Rat(2)}}),
  };
}

struct Bounds {
  long n_max = 24;     // finite identities: n = 0..n_max
  long order = 24;     // series identities: coefficients 0..order
  std::vector<Rat> alpha_grid = default_parameter_grid();
  std::vector<Rat> p_grid = default_parameter_grid();
  std::size_t fuzz = 0;         // extra seeded random rationals added to both grids
  std::uint64_t seed = 20091215;
  std::size_t prop5_trials = 9;
  bool parallel = true;
};

struct IdentityInfo {
  std::string id;
  std::string anchor;
  std::string statement;
};

namespace detail {

using Check = std::function<std::optional<Witness>()>;

struct CaseTask {
  ParamList params;
  Check run;
};

struct RegistryEntry {
  IdentityInfo info;
  std::function<std::vector<CaseTask>(const Bounds&)> cases;
};

inline std::optional<Witness> compare(const Series& lhs, const Series& rhs) {
  long k = first_mismatch(lhs, rhs);
  if (k < 0 && lhs.order() == rhs.order()) return std::nullopt;
  if (k < 0) k = static_cast<long>(std::min(lhs.order(), rhs.order())) + 1;  // order mismatch
  auto at = [k](const Series& s) {
    return static_cast<std::size_t>(k) <= s.order() ? s[static_cast<std::size_t>(k)] : Rat(0);
  };
  return Witness{"degree", k, at(lhs), at(rhs)};
}

inline std::optional<Witness> compare(const SeriesSides& s) { return compare(s.lhs, s.rhs); }

inline std::optional<Witness> compare(const Poly& lhs, const Poly& rhs) {
  long k = first_mismatch(lhs, rhs);
  if (k < 0) return std::nullopt;
  return Witness{"coefficient", k, lhs.coeff(static_cast<std::size_t>(k)), rhs.coeff(static_cast<std::size_t>(k))};
}

/// Checks lhs(n) == rhs(n) for n = from..to.
template <class Lhs, class Rhs>
std::optional<Witness> sweep(long from, long to, Lhs&& lhs, Rhs&& rhs) {
  for (long n = from; n <= to; ++n) {
    Rat l = lhs(n), r = rhs(n);
    if (l != r) return Witness{"n", n, l, r};
  }
  return std::nullopt;
}

inline std::vector<Rat> normalized_grid(std::vector<Rat> grid, const Bounds& b, std::uint64_t salt) {
  if (b.fuzz > 0) {
    std::mt19937_64 rng(b.seed ^ salt);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 12);
    for (std::size_t i = 0; i < b.fuzz; ++i) grid.emplace_back(num(rng), den(rng));
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

inline std::vector<Rat> alpha_grid(const Bounds& b) { return normalized_grid(b.alpha_grid, b, 0xa1fa); }
inline std::vector<Rat> p_grid(const Bounds& b) { return normalized_grid(b.p_grid, b, 0x9999); }

inline std::size_t order_of(const Bounds& b) { return static_cast<std::size_t>(std::max(0L, b.order)); }
inline long n_max_of(const Bounds& b) { return std::max(0L, b.n_max); }

// One case per built-in sequence.
template <class Sides>
std::vector<CaseTask> per_sequence(const Bounds& b, Sides sides) {
  std::vector<CaseTask> out;
  std::size_t order = order_of(b);
  for (const auto& seq : default_sequences())
    out.push_back({{{"sequence", seq.label()}, {"order", Rat(order)}},
                   [=] { return compare(sides(seq, order)); }});
  return out;
}

// One case per (grid value, built-in sequence).
template <class Sides>
std::vector<CaseTask> per_param_sequence(const std::string& name, const std::vector<Rat>& grid,
                                         const Bounds& b, Sides sides) {
  std::vector<CaseTask> out;
  std::size_t order = order_of(b);
  for (const auto& v : grid)
    for (const auto& seq : default_sequences())
      out.push_back({{{name, v}, {"sequence", seq.label()}, {"order", Rat(order)}},
                     [=] { return compare(sides(v, seq, order)); }});
  return out;
}

inline Series neg_log1m(std::size_t order) {
  return Series::from_generator(order, [](std::size_t n) { return n == 0 ? Rat(0) : Rat(1) / Rat(n); });
}

// sum_k C(n,k) C(alpha,k) H_k
inline Rat symmetric_lhs(const Rat& alpha, long n) {
  Rat s(0), h(0);
  for (long k = 1; k <= n; ++k) {
    h += Rat(1, k);
    s += binomial_int(n, k) * binomial_rat(alpha, k) * h;
  }
  return s;
}

// sum_k C(top, n-k) C(alpha+k, k) (-1)^(n-k) H_k
inline Rat alternating_harmonic_sum(const Rat& top, const Rat& alpha, long n) {
  Rat s(0), h(0);
  for (long k = 1; k <= n; ++k) {
    h += Rat(1, k);
    s += binomial_rat(top, n - k) * binomial_rat(alpha + Rat(k), k) * sign_power(n - k) * h;
  }
  return s;
}

inline const std::vector<RegistryEntry>& registry() {
  static const std::vector<RegistryEntry> entries = [] {
    std::vector<RegistryEntry> r;

    r.push_back({{"euler-1.2", "Eq. (1.2)", "(1/(1-t)) f(t/(1-t)) = sum t^n sum_k C(n,k) a_k"},
                 [](const Bounds& b) {
                   return per_sequence(b, [](const SequenceSpec& a, std::size_t n) {
                     return euler_transform_sides(a, n);
                   });
                 }});

    r.push_back({{"prop1-2.4", "Eq. (2.4)",
                  "sum C(alpha,n)(-1)^n a_n z^n = (z+1)^alpha sum (z/(z+1))^n C(alpha,n)(-1)^n c_n"},
                 [](const Bounds& b) {
                   return per_param_sequence("alpha", alpha_grid(b), b,
                                             [](const Rat& al, const SequenceSpec& a, std::size_t n) {
                                               return generalized_euler_sides(al, a, n);
                                             });
                 }});

    r.push_back({{"prop2-2.9", "Eq. (2.9)", "sum a_n z^n/n! = e^{-z} sum c_n z^n/n!"},
                 [](const Bounds& b) {
                   return per_sequence(b, [](const SequenceSpec& a, std::size_t n) {
                     return exponential_euler_sides(a, n);
                   });
                 }});

    r.push_back({{"prop3-2.11", "Eq. (2.11)",
                  "a_0 log(1+z) + sum_{n>=1} a_n z^n/n = sum_{n>=1} (z/(z+1))^n c_n/n"},
                 [](const Bounds& b) {
                   return per_sequence(b, [](const SequenceSpec& a, std::size_t n) {
                     return log_euler_sides(a, n);
                   });
                 }});

    r.push_back({{"eq-2.15", "Eq. (2.15)",
                  "-log(1-t)/(1-t)^{p+1} = sum (H_{p+n}-H_p) C(p+n,n) t^n"},
                 [](const Bounds& b) {
                   std::vector<CaseTask> out;
                   std::size_t order = order_of(b);
                   for (const auto& p : p_grid(b))
                     out.push_back({{{"p", p}, {"order", Rat(order)}}, [=] {
                                      Series lhs = neg_log1m(order) *
                                                   series_scale_argument(series_binom_pow(-(p + Rat(1)), order), Rat(-1));
                                      Series rhs = Series::from_generator(order, [&](std::size_t n) {
                                        long k = static_cast<long>(n);
                                        return harmonic_diff(p, k) * binomial_rat(p + Rat(k), k);
                                      });
                                      return compare(lhs, rhs);
                                    }});
                   return out;
                 }});

    r.push_back({{"prop4-2.17", "Eq. (2.17)",
                  "sum b_n a_n z^n + log(1+z) sum C(p+n,n) a_n z^n = (1+z)^{-(p+1)} sum (z/(z+1))^n b_n c_n, "
                  "b_n = (H_{p+n}-H_p) C(p+n,n)"},
                 [](const Bounds& b) {
                   return per_param_sequence("p", p_grid(b), b,
                                             [](const Rat& p, const SequenceSpec& a, std::size_t n) {
                                               return prop4_sides(p, a, n);
                                             });
                 }});

    r.push_back({{"cor1-2.23", "Eq. (2.23)",
                  "sum H_n a_n z^n + log(1+z) f(z) = (1/(1+z)) sum (z/(z+1))^n H_n c_n"},
                 [](const Bounds& b) {
                   return per_sequence(b, [](const SequenceSpec& a, std::size_t order) {
                     std::vector<Rat> seq = a.generate(order);
                     std::vector<Rat> c = binomial_transform(seq);
                     Series lhs = Series::from_generator(order, [&](std::size_t n) {
                                    return harmonic(static_cast<long>(n)) * seq[n];
                                  }) +
                                  series_log1p(order) * Series(seq);
                     Series inner = Series::from_generator(order, [&](std::size_t n) {
                       return harmonic(static_cast<long>(n)) * c[n];
                     });
                     Series rhs = series_binom_pow(Rat(-1), order) *
                                  series_compose(inner, inverse_euler_substitution(order));
                     return SeriesSides{lhs, rhs};
                   });
                 }});

    r.push_back({{"eq-2.25", "Eq. (2.25)",
                  "sum C(p+n,n) n^m z^n = (1-z)^{-(p+1)} omega_{m,p+1}(z/(1-z))"},
                 [](const Bounds& b) {
                   std::vector<CaseTask> out;
                   std::size_t order = order_of(b);
                   long m_max = std::min(6L, n_max_of(b));
                   for (const auto& p : p_grid(b))
                     for (long m = 0; m <= m_max; ++m)
                       out.push_back({{{"p", p}, {"m", Rat(m)}, {"order", Rat(order)}},
                                      [=] { return compare(nbinom_power_series_sides(m, p, order)); }});
                   return out;
                 }});

    r.push_back({{"eq-2.27", "Eq. (2.27)", "(-1)^n n! S(m,n) = sum_k C(n,k) (-1)^k k^m"},
                 [](const Bounds& b) {
                   std::vector<CaseTask> out;
                   long n_max = n_max_of(b);
                   for (long m = 0; m <= n_max; ++m)
                     out.push_back({{{"m", Rat(m)}, {"n_max", Rat(n_max)}}, [=] {
                                      return sweep(
                                          0, n_max,
                                          [&](long n) { return sign_power(n) * factorial(n) * Rat(stirling2(m, n)); },
                                          [&](long n) {
                                            Rat s(0);
                                            for (long k = 0; k <= n; ++k)
                                              s += binomial_int(n, k) * sign_power(k) * Rat(k).pow(m);
                                            return s;
                                          });
                                    }});
                   return out;
                 }});

    r.push_back({{"cor2-2.28", "Eq. (2.28)",
                  "sum (H_{p+n}-H_p) C(p+n,n) n^m z^n = (1-z)^{-(p+1)} { -log(1-z) omega_{m,p+1}(z/(1-z)) "
                  "+ sum_{n<=m} (z/(1-z))^n (H_{p+n}-H_p) C(p+n,n) n! S(m,n) }"},
                 [](const Bounds& b) {
                   std::vector<CaseTask> out;
                   std::size_t order = order_of(b);
                   long m_max = std::min(5L, n_max_of(b));
                   for (const auto& p : p_grid(b))
                     for (long m = 0; m <= m_max; ++m)
                       out.push_back({{{"p", p}, {"m", Rat(m)}, {"order", Rat(order)}},
                                      [=] { return compare(hsum_closed_form_sides(m, p, order)); }});
                   return out;
                 }});

    r.push_back({{"eq-2.29", "Eq. (2.29)",
                  "sum H_n n^m z^n = (1/(1-z)) { -log(1-z) omega_m(z/(1-z)) + sum_{n<=m} (z/(1-z))^n H_n n! S(m,n) }"},
                 [](const Bounds& b) {
                   std::vector<CaseTask> out;
                   std::size_t order = order_of(b);
                   long m_max = std::min(5L, n_max_of(b));
                   for (long m = 0; m <= m_max; ++m)
                     out.push_back({{{"m", Rat(m)}, {"order", Rat(order)}}, [=] {
                                      Series lhs = Series::from_generator(order, [&](std::size_t n) {
                                        return harmonic(static_cast<long>(n)) * Rat(n).pow(m);
                                      });
                                      return compare(lhs, hsum_closed_form_sides(m, Rat(0), order).rhs);
                                    }});
                   return out;
                 }});

    r.push_back({{"prop5-2.31", "Eq. (2.31)",
                  "sum a_n b_n t^n = sum g^(n)(-t)/n! t^n c_n = sum (-1)^n g^(n)(t)/n! t^n sum_k C(n,k)(-1)^k a_k"},
                 [](const Bounds& b) {
                   std::vector<CaseTask> out;
                   long max_degree = std::min(8L, n_max_of(b));
                   std::mt19937_64 rng(b.seed);
                   std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
                   auto random_rat = [&] { return Rat(num(rng), den(rng)); };
                   for (std::size_t trial = 0; trial < b.prop5_trials; ++trial) {
                     long degree = static_cast<long>(trial) % (max_degree + 1);
                     std::vector<Rat> g(static_cast<std::size_t>(degree) + 1), a(g.size());
                     for (auto& x : g) x = random_rat();
                     if (g.back().is_zero()) g.back() = Rat(1);
                     for (auto& x : a) x = random_rat();
                     Rat t = random_rat();
                     Poly gp(g);
                     out.push_back({{{"trial", Rat(trial)}, {"degree", Rat(degree)}, {"t", t}}, [=] {
                                      Prop5Sides s = prop5_sides(gp, SequenceSpec::values(a), t,
                                                                 static_cast<std::size_t>(degree));
                                      if (s.lhs != s.rhs) return std::optional<Witness>(Witness{"form", 0, s.lhs, s.rhs});
                                      if (s.lhs != s.rhs_variant)
                                        return std::optional<Witness>(Witness{"form", 1, s.lhs, s.rhs_variant});
                                      return std::optional<Witness>();
                                    }});
                   }
                   return out;
                 }});

    r.push_back({{"laguerre-3.1", "Eq. (3.1)",
                  "integral_0^x (L_n(t)-1)/t dt = sum_{k=1..n} (L_k(x)-1)/k"},
                 [](const Bounds& b) {
                   std::vector<CaseTask> out;
                   for (long n = 1; n <= n_max_of(b); ++n)
                     out.push_back({{{"n", Rat(n)}}, [=] {
                                      Poly rhs;
                                      for (long k = 1; k <= n; ++k)
                                        rhs = poly_add(rhs, poly_scale(Rat(1, k), poly_sub(laguerre(k), Poly::constant(Rat(1)))));
                                      if (auto w = compare(laguerre_log_integral(n), rhs)) return w;
                                      // the closed form must also match direct integration of (L_n(t)-1)/t
                                      return compare(poly_integrate(poly_drop_constant_div_x(laguerre(n))), rhs);
                                    }});
                   return out;
                 }});

    r.push_back({{"eq-3.10", "Eq. (3.10)", "-log(1-t)/(1-t) = sum H_n t^n"},
                 [](const Bounds& b) {
                   std::size_t order = order_of(b);
                   return std::vector<CaseTask>{{{{"order", Rat(order)}}, [=] {
                                                   Series rhs = Series::from_generator(order, [](std::size_t n) {
                                                     return harmonic(static_cast<long>(n));
                                                   });
                                                   return compare(neg_log1m(order) * series_geometric(order), rhs);
                                                 }}};
                 }});

    r.push_back({{"cor4-4.1", "Eq. (4.1)",
                  "-log(1-t)/(1-t)^{alpha+1} = sum t^n { C(alpha+n,n) H_n - sum_{k=1..n} C(n,k) C(alpha,k) H_k }"},
                 [](const Bounds& b) {
                   std::vector<CaseTask> out;
                   std::size_t order = order_of(b);
                   for (const auto& al : alpha_grid(b))
                     out.push_back({{{"alpha", al}, {"order", Rat(order)}}, [=] {
                                      Series lhs = neg_log1m(order) *
                                                   series_scale_argument(series_binom_pow(-(al + Rat(1)), order), Rat(-1));
                                      Series rhs = Series::from_generator(order, [&](std::size_t n) {
                                        long k = static_cast<long>(n);
                                        return binomial_rat(al + Rat(k), k) * harmonic(k) - symmetric_lhs(al, k);
                                      });
                                      return compare(lhs, rhs);
                                    }});
                   return out;
                 }});

    r.push_back({{"vandermonde-4.4", "Eq. (4.4)", "sum_k C(n,k) C(alpha,k) = C(alpha+n,n)"},
                 [](const Bounds& b) {
                   std::vector<CaseTask> out;
                   long n_max = n_max_of(b);
                   for (const auto& al : alpha_grid(b))
                     out.push_back({{{"alpha", al}, {"n_max", Rat(n_max)}}, [=] {
                                      return sweep(
                                          0, n_max,
                                          [&](long n) {
                                            Rat s(0);
                                            for (long k = 0; k <= n; ++k) s += binomial_int(n, k) * binomial_rat(al, k);
                                            return s;
                                          },
                                          [&](long n) { return binomial_rat(al + Rat(n), n); });
                                    }});
                   return out;
                 }});

    r.push_back({{"cor5-4.7", "Eq. (4.7)",
                  "sum_k C(n,k) C(alpha,k) H_k = C(alpha+n,n) (H_alpha + H_n - H_{alpha+n})"},
                 [](const Bounds& b) {
                   std::vector<CaseTask> out;
                   long n_max = n_max_of(b);
                   for (const auto& al : alpha_grid(b))
                     out.push_back({{{"alpha", al}, {"n_max", Rat(n_max)}}, [=] {
                                      return sweep(
                                          0, n_max, [&](long n) { return symmetric_lhs(al, n); },
                                          [&](long n) { return binomial_rat(al + Rat(n), n) * harmonic_symm(al, n); });
                                    }});
                   return out;
                 }});

    r.push_back({{"eq-5.1", "Eq. (5.1)",
                  "sum_k C(alpha+1,n-k) C(alpha+k,k) (-1)^{n-k} H_k = 1/n + C(alpha,n) (-1)^{n-1}/n, n >= 1"},
                 [](const Bounds& b) {
                   std::vector<CaseTask> out;
                   long n_max = n_max_of(b);
                   for (const auto& al : alpha_grid(b))
                     out.push_back({{{"alpha", al}, {"n_max", Rat(n_max)}}, [=] {
                                      return sweep(
                                          1, n_max,
                                          [&](long n) { return alternating_harmonic_sum(al + Rat(1), al, n); },
                                          [&](long n) {
                                            return Rat(1, n) + binomial_rat(al, n) * sign_power(n - 1) / Rat(n);
                                          });
                                    }});
                   return out;
                 }});

    r.push_back({{"eq-5.2", "Eq. (5.2)",
                  "sum_k C(alpha,n-k) C(alpha+k,k) (-1)^{n-k} H_k = H_n + sum_{k=1..n} C(alpha,k) (-1)^{k-1}/k"},
                 [](const Bounds& b) {
                   std::vector<CaseTask> out;
                   long n_max = n_max_of(b);
                   for (const auto& al : alpha_grid(b))
                     out.push_back({{{"alpha", al}, {"n_max", Rat(n_max)}}, [=] {
                                      return sweep(
                                          0, n_max, [&](long n) { return alternating_harmonic_sum(al, al, n); },
                                          [&](long n) {
                                            Rat s = harmonic(n);
                                            for (long k = 1; k <= n; ++k)
                                              s += binomial_rat(al, k) * sign_power(k - 1) / Rat(k);
                                            return s;
                                          });
                                    }});
                   return out;
                 }});

    r.push_back({{"eq-5.3", "Eq. (5.3)",
                  "sum_k C(n+1,n-k) C(n+k,k) (-1)^{n-k} H_k = (1 + (-1)^{n-1})/n, n >= 1"},
                 [](const Bounds& b) {
                   long n_max = n_max_of(b);
                   return std::vector<CaseTask>{{{{"n_max", Rat(n_max)}}, [=] {
                                                   return sweep(
                                                       1, n_max,
                                                       [](long n) {
                                                         return alternating_harmonic_sum(Rat(n + 1), Rat(n), n);
                                                       },
                                                       [](long n) { return (Rat(1) + sign_power(n - 1)) / Rat(n); });
                                                 }}};
                 }});

    r.push_back({{"eq-5.4", "Eq. (5.4)", "sum_k C(n,n-k) C(n+k,k) (-1)^{n-k} H_k = 2 H_n"},
                 [](const Bounds& b) {
                   long n_max = n_max_of(b);
                   return std::vector<CaseTask>{{{{"n_max", Rat(n_max)}}, [=] {
                                                   return sweep(
                                                       0, n_max,
                                                       [](long n) { return alternating_harmonic_sum(Rat(n), Rat(n), n); },
                                                       [](long n) { return Rat(2) * harmonic(n); });
                                                 }}};
                 }});

    r.push_back({{"eq-5.8", "Eq. (5.8)", "sum_{k=1..n} C(n,k) (-1)^{k-1} H_k = 1/n"},
                 [](const Bounds& b) {
                   long n_max = n_max_of(b);
                   return std::vector<CaseTask>{{{{"n_max", Rat(n_max)}}, [=] {
                                                   std::vector<Rat> c = binomial_transform(
                                                       SequenceSpec("alt-harmonic-coeff").generate(static_cast<std::size_t>(n_max)));
                                                   return sweep(
                                                       0, n_max, [&](long n) { return c[static_cast<std::size_t>(n)]; },
                                                       [](long n) { return n == 0 ? Rat(0) : Rat(1, n); });
                                                 }}};
                 }});

    r.push_back({{"lemma2-5.5", "Eq. (5.5)", "(1/(1-t)) sum a_n t^n = sum t^n sum_{k<=n} a_k"},
                 [](const Bounds& b) {
                   return per_sequence(b, [](const SequenceSpec& a, std::size_t order) {
                     Series s = a.as_series(order);
                     return SeriesSides{partial_sums(s), series_geometric(order) * s};
                   });
                 }});

    r.push_back({{"lemma2-5.6", "Eq. (5.6)",
                  "(1+lambda t)^alpha sum a_n t^n = sum t^n sum_k C(alpha,n-k) a_k lambda^{n-k}"},
                 [](const Bounds& b) {
                   std::vector<CaseTask> out;
                   std::size_t order = order_of(b);
                   const std::vector<SequenceSpec> seqs = {SequenceSpec("ones"), SequenceSpec("recip-alt"),
                                                           SequenceSpec("binom-alpha", {{"alpha", Rat(1, 2)}})};
                   for (const auto& al : alpha_grid(b))
                     for (const Rat& lambda : {Rat(1), Rat(-1, 2), Rat(3)})
                       for (const auto& seq : seqs)
                         out.push_back({{{"alpha", al}, {"lambda", lambda}, {"sequence", seq.label()}, {"order", Rat(order)}},
                                        [=] {
                                          Series s = seq.as_series(order);
                                          Series factor = series_scale_argument(series_binom_pow(al, order), lambda);
                                          return compare(binom_shift_mul(al, lambda, s), factor * s);
                                        }});
                   return out;
                 }});

    return r;
  }();
  return entries;
}

inline const RegistryEntry& lookup(const std::string& id) {
  for (const auto& e : registry())
    if (e.info.id == id) return e;
  std::string known;
  for (const auto& e : registry()) known += (known.empty() ? "" : ", ") + e.info.id;
  throw UnknownIdentityError("unknown identity \"" + id + "\"; registered: " + known);
}

inline bool params_less(const ParamList& a, const ParamList& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].first != b[i].first) return a[i].first < b[i].first;
    const auto& x = a[i].second;
    const auto& y = b[i].second;
    if (x.index() != y.index()) return x.index() < y.index();
    if (const auto* rx = std::get_if<Rat>(&x)) {
      const Rat& ry = std::get<Rat>(y);
      if (*rx != ry) return *rx < ry;
    } else if (std::get<std::string>(x) != std::get<std::string>(y)) {
      return std::get<std::string>(x) < std::get<std::string>(y);
    }
  }
  return a.size() < b.size();
}

inline IdentityCase run_case(const CaseTask& task) {
  IdentityCase out{task.params, CaseStatus::verified, std::nullopt, {}};
  try {
    out.witness = task.run();
    if (out.witness) out.status = CaseStatus::failed;
  } catch (const PoleError& e) {
    out.status = CaseStatus::skipped_pole;
    out.note = e.what();
  }
  return out;
}

inline std::vector<IdentityCase> run_cases(const std::vector<CaseTask>& tasks, bool parallel) {
  std::vector<IdentityCase> results(tasks.size());
  unsigned workers = parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = run_case(tasks[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) results[i] = run_case(tasks[i]);
      });
  }
  std::stable_sort(results.begin(), results.end(),
                   [](const IdentityCase& a, const IdentityCase& b) { return params_less(a.params, b.params); });
  return results;
}

}  // namespace detail

/// Registered identities in registry order.
inline std::vector<IdentityInfo> registered_identities() {
  std::vector<IdentityInfo> out;
  for (const auto& e : detail::registry()) out.push_back(e.info);
  return out;
}

/// Checks one identity over every case implied by `bounds`.
inline IdentityReport verify(const std::string& identity_id, const Bounds& bounds = {}) {
  const auto& entry = detail::lookup(identity_id);
  IdentityReport report{entry.info.id, entry.info.anchor, {}};
  report.cases = detail::run_cases(entry.cases(bounds), bounds.parallel);
  return report;
}

inline std::vector<IdentityReport> verify_all(const Bounds& bounds = {}) {
  std::vector<IdentityReport> out;
  for (const auto& e : detail::registry()) out.push_back(verify(e.info.id, bounds));
  return out;
}

}  // namespace eulerx
