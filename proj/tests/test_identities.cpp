#include <gtest/gtest.h>

#include <set>
#include <string>

#include "eulerx/identities.hpp"
#include "eulerx/json.hpp"
#include "oracles.hpp"

namespace eulerx {
namespace {

Bounds small_bounds(long n = 16) {
  Bounds b;
  b.n_max = n;
  b.order = n;
  return b;
}

const Rat* find_rat(const IdentityCase& c, const std::string& key) {
  for (const auto& [k, v] : c.params)
    if (k == key) return std::get_if<Rat>(&v);
  return nullptr;
}

TEST(Registry, CoversEveryIdentity) {
  std::set<std::string> ids;
  for (const auto& info : registered_identities()) {
    EXPECT_TRUE(ids.insert(info.id).second) << "duplicate " << info.id;
    EXPECT_FALSE(info.anchor.empty());
  }
  for (const char* id : {"euler-1.2", "prop1-2.4", "prop2-2.9", "prop3-2.11", "eq-2.15", "prop4-2.17", "cor1-2.23",
                         "eq-2.25", "eq-2.27", "cor2-2.28", "eq-2.29", "prop5-2.31", "laguerre-3.1", "eq-3.10",
                         "cor4-4.1", "vandermonde-4.4", "cor5-4.7", "eq-5.1", "eq-5.2", "eq-5.3", "eq-5.4", "eq-5.8",
                         "lemma2-5.5", "lemma2-5.6"})
    EXPECT_TRUE(ids.contains(id)) << id;
}

TEST(Verify, UnknownIdentity) {
  EXPECT_THROW(verify("nope"), UnknownIdentityError);
  try {
    verify("nope");
  } catch (const UnknownIdentityError& e) {
    EXPECT_NE(std::string(e.what()).find("cor5-4.7"), std::string::npos);
  }
}

TEST(Verify, SymmetricIdentityForSingleAlpha) {
  Bounds b = small_bounds(20);
  b.alpha_grid = {Rat(3, 7)};
  auto r = verify("cor5-4.7", b);
  ASSERT_EQ(r.cases.size(), 1u);
  EXPECT_EQ(r.cases[0].status, CaseStatus::verified);
  EXPECT_EQ(r.anchor, "Eq. (4.7)");
}

TEST(Verify, CentralAlternatingSumSmallCase) {
  // n = 2: 0 - 6 + 9 = 3 = 2 H_2
  Rat s(0);
  for (long k = 0; k <= 2; ++k)
    s += binomial_int(2, 2 - k) * binomial_int(2 + k, k) * sign_power(2 - k) * oracle::harmonic_sum(k);
  EXPECT_EQ(s, Rat(3));
  EXPECT_TRUE(verify("eq-5.4", small_bounds(20)).ok());
}

TEST(Verify, ShiftedAlternatingSumParity) {
  for (long n = 1; n <= 20; ++n) {
    Rat s(0);
    for (long k = 0; k <= n; ++k)
      s += binomial_int(n + 1, n - k) * binomial_int(n + k, k) * sign_power(n - k) * oracle::harmonic_sum(k);
    EXPECT_EQ(s, n % 2 == 0 ? Rat(0) : Rat(2, n)) << n;
  }
  EXPECT_TRUE(verify("eq-5.3", small_bounds(20)).ok());
}

TEST(Verify, ReciprocalHarmonicSumFirstCase) {
  for (Rat alpha : {Rat(3, 7), Rat(-3), Rat(5, 2)}) {
    // n = 1: lhs = C(alpha+1, 0) C(alpha+1, 1) H_1 = alpha + 1
    Rat lhs = binomial_rat(alpha + Rat(1), 0) * binomial_rat(alpha + Rat(1), 1);
    EXPECT_EQ(lhs, alpha + Rat(1));
    EXPECT_EQ(Rat(1) + binomial_rat(alpha, 1), Rat(1) + alpha);
  }
}

TEST(Verify, LaguerreIdentity) {
  auto r = verify("laguerre-3.1", small_bounds(12));
  EXPECT_EQ(r.cases.size(), 12u);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.summary().verified, 12u);
}

TEST(VerifyAll, DefaultBounds) {
  auto reports = verify_all();
  EXPECT_TRUE(all_verified(reports));
  for (const auto& r : reports) {
    auto s = r.summary();
    EXPECT_EQ(s.failed, 0u) << r.identity;
    EXPECT_EQ(s.verified + s.failed + s.skipped, r.cases.size());
  }
}

TEST(VerifyAll, EmptyBoundsAreTrivial) {
  Bounds b = small_bounds(0);
  auto reports = verify_all(b);
  EXPECT_TRUE(all_verified(reports));
  auto lag = verify("laguerre-3.1", b);
  EXPECT_TRUE(lag.cases.empty());
}

TEST(VerifyAll, PolesAreSkippedNotFailed) {
  Bounds b = small_bounds(8);
  b.p_grid = {Rat(-2), Rat(1, 2)};
  b.alpha_grid = {Rat(-3), Rat(3, 7)};
  for (const char* id : {"eq-2.15", "prop4-2.17", "cor2-2.28", "cor5-4.7"}) {
    auto r = verify(id, b);
    EXPECT_TRUE(r.ok()) << id;
    EXPECT_GT(r.summary().skipped, 0u) << id;
    for (const auto& c : r.cases) {
      if (c.status == CaseStatus::skipped_pole) {
        EXPECT_FALSE(c.witness.has_value());
        EXPECT_NE(c.note.find("pole"), std::string::npos);
        const Rat* v = find_rat(c, "p");
        if (!v) v = find_rat(c, "alpha");
        ASSERT_NE(v, nullptr);
        EXPECT_TRUE(v->is_integer() && v->sign() < 0);
      }
    }
  }
}

TEST(Engine, FailedCaseCarriesWitness) {
  detail::CaseTask task{{{"n", Rat(3)}}, [] {
                          return detail::sweep(
                              0, 5, [](long n) { return Rat(n); }, [](long n) { return n == 3 ? Rat(4) : Rat(n); });
                        }};
  auto c = detail::run_case(task);
  EXPECT_EQ(c.status, CaseStatus::failed);
  ASSERT_TRUE(c.witness.has_value());
  EXPECT_EQ(c.witness->kind, "n");
  EXPECT_EQ(c.witness->index, 3);
  EXPECT_EQ(c.witness->lhs, Rat(3));
  EXPECT_EQ(c.witness->rhs, Rat(4));

  auto series_witness = detail::compare(Series{Rat(1), Rat(2), Rat(3)}, Series{Rat(1), Rat(2), Rat(5)});
  ASSERT_TRUE(series_witness.has_value());
  EXPECT_EQ(series_witness->kind, "degree");
  EXPECT_EQ(series_witness->index, 2);
}

TEST(Engine, CasesAreSortedByParameters) {
  Bounds b = small_bounds(6);
  auto r = verify("vandermonde-4.4", b);
  for (std::size_t i = 1; i < r.cases.size(); ++i)
    EXPECT_LT(*find_rat(r.cases[i - 1], "alpha"), *find_rat(r.cases[i], "alpha"));
}

TEST(Reports, DeterministicAcrossSchedules) {
  Bounds parallel = small_bounds(10);
  Bounds serial = parallel;
  serial.parallel = false;
  EXPECT_EQ(to_json(verify_all(parallel)).dump(), to_json(verify_all(serial)).dump());
}

TEST(Reports, FuzzModeIsSeededAndVerifies) {
  Bounds b = small_bounds(10);
  b.fuzz = 6;
  b.seed = 99;
  auto first = verify("prop1-2.4", b);
  auto second = verify("prop1-2.4", b);
  EXPECT_TRUE(first.ok());
  EXPECT_GT(first.cases.size(), verify("prop1-2.4", small_bounds(10)).cases.size());
  EXPECT_EQ(to_json(first).dump(), to_json(second).dump());
  for (const char* id : {"cor5-4.7", "eq-5.1", "eq-5.2", "cor4-4.1", "cor2-2.28"}) EXPECT_TRUE(verify(id, b).ok()) << id;
}

TEST(Reports, JsonSchema) {
  Bounds b = small_bounds(6);
  b.alpha_grid = {Rat(-2), Rat(1, 2)};
  Json j = to_json(verify("cor5-4.7", b));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"identity", "anchor", "cases", "summary"}));
  EXPECT_EQ(j["identity"], "cor5-4.7");
  ASSERT_EQ(j["cases"].size(), 2u);
  EXPECT_EQ(j["cases"][0]["params"]["alpha"], "-2");
  EXPECT_EQ(j["cases"][0]["status"], "skipped-pole");
  EXPECT_TRUE(j["cases"][0]["witness"].is_null());
  EXPECT_EQ(j["cases"][1]["params"]["alpha"], "1/2");
  EXPECT_EQ(j["cases"][1]["status"], "verified");
  EXPECT_EQ(j["summary"], (Json{{"verified", 1}, {"failed", 0}, {"skipped", 1}}));

  IdentityCase failed{{{"n", Rat(2)}}, CaseStatus::failed, Witness{"n", 2, Rat(1, 2), Rat(3)}, {}};
  Json fj = to_json(failed);
  EXPECT_EQ(fj["status"], "failed");
  EXPECT_EQ(fj["witness"]["lhs"], "1/2");
  EXPECT_EQ(fj["witness"]["index"], 2);
}

TEST(Json, RatArrays) {
  EXPECT_EQ(to_json(Series{Rat(0), Rat(-1, 2)}).dump(), R"(["0","-1/2"])");
  EXPECT_EQ(to_json(Poly{Rat(1), Rat(0), Rat(0)}).dump(), R"(["1"])");
  EXPECT_EQ(rats_from_json(Json::parse(R"(["1","-3/7",4])")), (std::vector<Rat>{Rat(1), Rat(-3, 7), Rat(4)}));
  try {
    rats_from_json(Json::parse(R"(["1","2","x/3"])"));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("index 2"), std::string::npos);
  }
  EXPECT_THROW(rats_from_json(Json::parse(R"({"a":1})")), ParseError);
}

}  // namespace
}  // namespace eulerx
