#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "eulerx/transforms.hpp"
#include "oracles.hpp"

namespace eulerx {
namespace {

std::vector<Rat> pascal_transform(const std::vector<Rat>& a) {
  auto rows = oracle::pascal_triangle(a.size());
  std::vector<Rat> c(a.size());
  for (std::size_t n = 0; n < a.size(); ++n)
    for (std::size_t k = 0; k <= n; ++k) c[n] += rows[n][k] * a[k];
  return c;
}

// L_n(x) by the three-term recurrence.
Rat laguerre_value(long n, const Rat& x) {
  Rat prev(1), cur = Rat(1) - x;
  if (n == 0) return prev;
  for (long k = 1; k < n; ++k) {
    Rat next = ((Rat(2 * k + 1) - x) * cur - Rat(k) * prev) / Rat(k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<SequenceSpec> all_builtins() {
  return {SequenceSpec("ones"),
          SequenceSpec("zero"),
          SequenceSpec("delta"),
          SequenceSpec("alt-ones"),
          SequenceSpec("recip-alt"),
          SequenceSpec("alt-harmonic-coeff"),
          SequenceSpec("laguerre-exp", {{"x", Rat(2, 3)}}),
          SequenceSpec("binom-alpha", {{"alpha", Rat(-5, 3)}}),
          SequenceSpec("power", {{"m", Rat(3)}}),
          SequenceSpec::values({Rat(1, 2), Rat(-4), Rat(7, 9)})};
}

TEST(SequenceSpec, BuiltinsAndErrors) {
  EXPECT_THROW(SequenceSpec("nope"), std::invalid_argument);
  EXPECT_THROW(SequenceSpec("binom-alpha"), std::invalid_argument);
  EXPECT_THROW(SequenceSpec("power", {{"m", Rat(1, 2)}}), std::invalid_argument);
  EXPECT_EQ(SequenceSpec("alt-harmonic-coeff").generate(3), (std::vector<Rat>{Rat(0), Rat(1), Rat(-3, 2), Rat(11, 6)}));
  EXPECT_EQ(SequenceSpec("power", {{"m", Rat(0)}}).generate(2), (std::vector<Rat>{Rat(1), Rat(-1), Rat(1)}));
  EXPECT_EQ(SequenceSpec::values({Rat(5)}).generate(2), (std::vector<Rat>{Rat(5), Rat(0), Rat(0)}));
  SequenceSpec s("laguerre-exp", {{"x", Rat(3, 7)}});
  EXPECT_EQ(s.generate(9), s.generate(9));
  EXPECT_EQ(s.label(), "laguerre-exp(x=3/7)");
}

TEST(BinomialTransform, Examples) {
  auto c = binomial_transform(SequenceSpec("ones").generate(10));
  for (std::size_t n = 0; n <= 10; ++n) EXPECT_EQ(c[n], Rat(2).pow(static_cast<long>(n)));

  auto h = binomial_transform(SequenceSpec("alt-harmonic-coeff").generate(20));
  EXPECT_EQ(h[0], Rat(0));
  for (long n = 1; n <= 20; ++n) EXPECT_EQ(h[static_cast<std::size_t>(n)], Rat(1, n));

  Rat alpha(3, 7);
  auto v = binomial_transform(SequenceSpec("binom-alpha", {{"alpha", alpha}}).generate(15));
  for (long n = 0; n <= 15; ++n) EXPECT_EQ(v[static_cast<std::size_t>(n)], binomial_rat(alpha + Rat(n), n));
}

TEST(BinomialTransform, MatchesPascalOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = oracle::random_vector(rng, 1 + rng() % 32);
    ASSERT_EQ(binomial_transform(a), pascal_transform(a));
  }
}

TEST(InverseBinomialTransform, Examples) {
  std::vector<Rat> powers;
  for (long n = 0; n <= 10; ++n) powers.push_back(Rat(2).pow(n));
  EXPECT_EQ(inverse_binomial_transform(powers), std::vector<Rat>(11, Rat(1)));
  std::vector<Rat> delta(9);
  delta[0] = Rat(1);
  auto a = inverse_binomial_transform(delta);
  for (long n = 0; n <= 8; ++n) EXPECT_EQ(a[static_cast<std::size_t>(n)], sign_power(n));
  EXPECT_TRUE(inverse_binomial_transform({}).empty());
}

TEST(InverseBinomialTransform, IsTwoSidedInverse) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = oracle::random_vector(rng, rng() % 33);
    ASSERT_EQ(inverse_binomial_transform(binomial_transform(a)), a);
    ASSERT_EQ(binomial_transform(inverse_binomial_transform(a)), a);
  }
}

TEST(EulerTransform, Examples) {
  auto ones = euler_transform_sides(SequenceSpec("ones"), 12);
  EXPECT_TRUE(ones.equal());
  for (std::size_t n = 0; n <= 12; ++n) EXPECT_EQ(ones.lhs[n], Rat(2).pow(static_cast<long>(n)));

  auto delta = euler_transform_sides(SequenceSpec("delta"), 12);
  EXPECT_TRUE(delta.equal());
  EXPECT_EQ(delta.lhs, series_geometric(12));

  Rat x(3, 5);
  auto lag = euler_transform_sides(SequenceSpec("laguerre-exp", {{"x", x}}), 12);
  EXPECT_TRUE(lag.equal());
  for (long n = 0; n <= 12; ++n) EXPECT_EQ(lag.rhs[static_cast<std::size_t>(n)], laguerre_value(n, x));
}

TEST(GeneralizedEuler, Examples) {
  auto zero = generalized_euler_sides(Rat(5, 2), SequenceSpec("zero"), 10);
  EXPECT_TRUE(zero.lhs.is_zero());
  EXPECT_TRUE(zero.rhs.is_zero());
  auto two = generalized_euler_sides(Rat(2), SequenceSpec("ones"), 10);
  EXPECT_TRUE(two.equal());
  // (1 - z)^2 truncated
  EXPECT_EQ(two.lhs, poly_to_series(Poly{Rat(1), Rat(-2), Rat(1)}, 10));
}

TEST(GeneralizedEuler, AlphaMinusOneIsEulerTransformAfterSubstitution) {
  const std::size_t order = 16;
  for (const auto& seq : all_builtins()) {
    auto gen = generalized_euler_sides(Rat(-1), seq, order);
    auto euler = euler_transform_sides(seq, order);
    EXPECT_EQ(gen.lhs, seq.as_series(order));
    // z = t/(1-t), then multiply by 1/(1-t): both sides map onto the t-form
    auto to_t = [&](const Series& s) { return series_geometric(order) * series_compose(s, euler_substitution(order)); };
    EXPECT_EQ(to_t(gen.lhs), euler.lhs) << seq.label();
    EXPECT_EQ(to_t(gen.rhs), euler.rhs) << seq.label();
  }
}

TEST(GeneralizedEuler, HoldsOverAlphaGrid) {
  std::vector<Rat> grid = {Rat(1, 2),  Rat(-1, 2), Rat(3, 7),  Rat(-3, 7), Rat(5, 3), Rat(-7, 4),
                           Rat(11, 5), Rat(-9, 2), Rat(-3),    Rat(-2),    Rat(-1),   Rat(0),
                           Rat(1),     Rat(2),     Rat(3)};
  for (const auto& alpha : grid)
    for (const auto& seq : all_builtins()) {
      auto s = generalized_euler_sides(alpha, seq, 32);
      ASSERT_TRUE(s.equal()) << alpha << " " << seq.label() << " at " << s.first_mismatch();
    }
}

TEST(ExponentialEuler, Examples) {
  auto ones = exponential_euler_sides(SequenceSpec("ones"), 14);
  EXPECT_TRUE(ones.equal());
  EXPECT_EQ(ones.lhs, series_exp(14));

  auto zero = exponential_euler_sides(SequenceSpec("zero"), 14);
  EXPECT_TRUE(zero.equal());
  EXPECT_TRUE(zero.lhs.is_zero());

  auto alt = exponential_euler_sides(SequenceSpec("alt-ones"), 14);
  EXPECT_TRUE(alt.equal());
  EXPECT_EQ(alt.rhs, series_scale_argument(series_exp(14), Rat(-1)));
}

TEST(LogEuler, Examples) {
  auto zero = log_euler_sides(SequenceSpec("zero"), 12);
  EXPECT_TRUE(zero.equal());
  auto delta = log_euler_sides(SequenceSpec("delta"), 12);
  EXPECT_TRUE(delta.equal());
  EXPECT_EQ(delta.lhs, series_log1p(12));

  Rat x(-2, 5);
  auto lag = log_euler_sides(SequenceSpec("laguerre-exp", {{"x", x}}), 12);
  EXPECT_TRUE(lag.equal());
}

TEST(HarmonicWeightedSides, Examples) {
  const std::size_t order = 14;
  Rat alpha(3, 7);
  auto s = prop4_sides(Rat(0), SequenceSpec("binom-alpha", {{"alpha", alpha}}), order);
  EXPECT_TRUE(s.equal());
  // sum C(alpha,n) H_n z^n + (1+z)^alpha log(1+z) = (1/(1+z)) sum (z/(1+z))^n H_n C(alpha+n,n)
  Series lhs = Series::from_generator(order, [&](std::size_t n) {
                 return binomial_rat(alpha, static_cast<long>(n)) * oracle::harmonic_sum(static_cast<long>(n));
               }) +
               series_binom_pow(alpha, order) * series_log1p(order);
  Series inner = Series::from_generator(order, [&](std::size_t n) {
    long k = static_cast<long>(n);
    return oracle::harmonic_sum(k) * binomial_rat(alpha + Rat(k), k);
  });
  Series rhs = series_binom_pow(Rat(-1), order) * series_compose(inner, inverse_euler_substitution(order));
  EXPECT_EQ(s.lhs, lhs);
  EXPECT_EQ(s.rhs, rhs);

  auto zero = prop4_sides(Rat(1, 2), SequenceSpec("zero"), order);
  EXPECT_TRUE(zero.lhs.is_zero() && zero.rhs.is_zero());

  EXPECT_TRUE(prop4_sides(Rat(1, 2), SequenceSpec("ones"), 12).equal());
  EXPECT_THROW(prop4_sides(Rat(-2), SequenceSpec("ones"), 12), PoleError);
}

TEST(TransformSides, HoldForAllBuiltinsAtOrder32) {
  for (const auto& seq : all_builtins()) {
    EXPECT_TRUE(euler_transform_sides(seq, 32).equal()) << seq.label();
    EXPECT_TRUE(exponential_euler_sides(seq, 32).equal()) << seq.label();
    EXPECT_TRUE(log_euler_sides(seq, 32).equal()) << seq.label();
    for (Rat p : {Rat(0), Rat(1), Rat(1, 2), Rat(-1, 2), Rat(3, 7), Rat(7, 3)})
      EXPECT_TRUE(prop4_sides(p, seq, 32).equal()) << seq.label() << " p=" << p;
  }
}

TEST(PolynomialWeightedSides, Examples) {
  Rat t(2, 9);
  auto sq = prop5_sides(Poly{Rat(0), Rat(0), Rat(1)}, SequenceSpec("ones"), t, 2);
  EXPECT_EQ(sq.lhs, t * t);
  EXPECT_EQ(sq.rhs, t * t);
  EXPECT_EQ(sq.rhs_variant, t * t);

  auto constant = prop5_sides(Poly{Rat(5)}, SequenceSpec::values({Rat(3, 4)}), t, 0);
  EXPECT_EQ(constant.lhs, Rat(15, 4));
  EXPECT_TRUE(constant.equal());

  Rat a0(-2, 3), a1(7, 5);
  auto lin = prop5_sides(Poly::x(), SequenceSpec::values({a0, a1}), t, 1);
  EXPECT_EQ(lin.lhs, a1 * t);
  // n=0: g(-t) c_0 = -t a0; n=1: g'(-t) t c_1 = t (a0 + a1)
  EXPECT_EQ(lin.rhs, -t * a0 + t * (a0 + a1));
  EXPECT_TRUE(lin.equal());

  EXPECT_THROW(prop5_sides(Poly{Rat(1), Rat(1), Rat(1)}, SequenceSpec("ones"), t, 1), std::invalid_argument);
}

TEST(PolynomialWeightedSides, HoldsForRandomPolynomials) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t deg = rng() % 9;
    auto b = oracle::random_vector(rng, deg + 1);
    auto a = oracle::random_vector(rng, deg + 1);
    Rat t = oracle::random_rat(rng);
    Rat direct(0);
    for (std::size_t n = 0; n <= deg; ++n) direct += a[n] * b[n] * t.pow(static_cast<long>(n));
    auto s = prop5_sides(Poly(b), SequenceSpec::values(a), t, deg);
    ASSERT_EQ(s.lhs, direct);
    ASSERT_TRUE(s.equal()) << "trial " << trial;
  }
}

TEST(Acceleration, Examples) {
  auto rows = accelerate_alternating(2);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].transformed, Rat(1, 4));
  EXPECT_EQ(rows[1].transformed, Rat(7, 16));
  EXPECT_EQ(rows[1].raw, Rat(1, 2));
  EXPECT_THROW(accelerate_alternating(0), std::invalid_argument);
}

TEST(Acceleration, TransformedBeatsRaw) {
  const Rat ln2 = ln2_reference();
  auto rows = accelerate_alternating(60);
  // the harmonic-weighted sums start slower; raw is still ahead at n = 3
  EXPECT_GT((rows[2].transformed - ln2).abs(), (rows[2].raw - ln2).abs());
  for (const auto& r : rows)
    if (r.n >= 4) ASSERT_LT((r.transformed - ln2).abs(), (r.raw - ln2).abs()) << r.n;
}

TEST(Acceleration, Ln2ReferenceAgreesWithHalvingSeries) {
  std::string digits(kLn2Digits);
  ASSERT_EQ(digits.size(), 66u);  // "0." + 64 decimals
  const long terms = 240;
  Rat approx = oracle::ln2_halving_series(terms);
  // tail < 1/((terms+1) 2^terms); reference is truncated, so off by < 10^-64
  Rat tol = Rat(1, 1) / Rat(BigInt(10)).pow(64) + Rat(1) / (Rat(terms + 1) * Rat(2).pow(terms));
  EXPECT_LT((ln2_reference() - approx).abs(), tol);
}

}  // namespace
}  // namespace eulerx
