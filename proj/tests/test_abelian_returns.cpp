#include <catch_amalgamated.hpp>

#include <random>

#include "sturmian/abelian_returns.hpp"
#include "sturmian/induction.hpp"
#include "sturmian/sampling.hpp"

using namespace sturmian;

namespace {

const ContinuedFraction fib({}, {1});
const FieldElement inv_tau = FieldElement::quadratic(-1, 1, 5, 2);
const FieldElement inv_tau2 = FieldElement::quadratic(3, -1, 5, 2);

std::set<BinaryWord> words(std::initializer_list<const char*> ws) {
  std::set<BinaryWord> out;
  for (const char* w : ws) out.insert(BinaryWord(w));
  return out;
}

}  // namespace

TEST_CASE("golden ratio trace table") {
  const auto rows = algorithm_trace(fib, 5);
  REQUIRE(rows.size() == 5);
  const char* expected[5][3] = {
      {"0", "1", "01"},
      {"0", "01", "001"},
      {"001", "01", "00101"},
      {"001", "00101", "00100101"},
      {"00100101", "00101", "0010010100101"},
  };
  FieldElement delta(1);
  for (int i = 0; i < 5; ++i) {
    CHECK(rows[i].r.str() == expected[i][0]);
    CHECK(rows[i].r_prime.str() == expected[i][1]);
    CHECK(rows[i].concatenation.str() == expected[i][2]);
    CHECK(rows[i].delta.value == delta);
    delta *= inv_tau;
  }
  CHECK(rows[0].epsilon == fib);
  CHECK(rows[1].epsilon == ContinuedFraction({2}, {1}));
  CHECK(rows[2].epsilon == fib);

  // the corrupted comparison swaps the pair from the third row on
  const auto bad = algorithm_trace(fib, 3, StepOptions{true});
  CHECK(bad[2].r.str() == "01");
  CHECK(bad[2].r_prime.str() == "001");
}

TEST_CASE("trace rows match prefix-interval itineraries") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const ContinuedFraction cf = random_slope(rng, 3, 1, 2);
    const FieldElement alpha = cf_to_field(cf);
    const auto rows = algorithm_trace(cf, 7);
    for (std::size_t j = 0; j + 1 < rows.size(); ++j) {
      CHECK(itineraries_zero_beta(alpha, rows[j].delta.value) ==
            std::set<BinaryWord>{rows[j].r, rows[j].r_prime});
      const FieldElement mid =
          (rows[j].delta.value + rows[j + 1].delta.value) / FieldElement(2);
      CHECK(itineraries_zero_beta(alpha, mid) ==
            std::set<BinaryWord>{rows[j].r, rows[j].r_prime,
                                 rows[j].concatenation});
    }
  }
}

TEST_CASE("golden ratio return sets at the characteristic intercept") {
  const ReturnSetResult res = apr_set(fib, inv_tau2);
  CHECK(res.r_set == words({"0", "1", "01", "001"}));
  CHECK(res.r_prime_set == words({"0", "1", "10"}));
  CHECK(res.apr == words({"0", "1", "01", "001", "10"}));
  CHECK(res.n_r == 4);
  CHECK(res.n_rprime == 3);
  CHECK(res.n_apr == 5);
  CHECK(res.k0 == 2);
  CHECK(res.s0 == 1);

  CHECK(r_set(fib, inv_tau2) == res.r_set);
  CHECK(r_prime_set(fib, inv_tau2) == res.r_prime_set);
}

TEST_CASE("structural invariants on random intercepts") {
  std::mt19937 rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    const ContinuedFraction cf = random_slope(rng);
    const FieldElement alpha = cf_to_field(cf);
    const FieldElement rho = random_intercept(rng, alpha);
    const ReturnSetResult res = apr_set(cf, rho);

    std::set<BinaryWord> shared;
    std::set_intersection(res.r_set.begin(), res.r_set.end(),
                          res.r_prime_set.begin(), res.r_prime_set.end(),
                          std::inserter(shared, shared.end()));
    CHECK(shared == words({"0", "1"}));
    for (const char* w : {"0", "1", "01", "10"})
      CHECK(res.apr.contains(BinaryWord(w)));

    long long expected = 1 + res.s0;
    for (long long i = 1; i <= res.k0; ++i) expected += cf.digit(i);
    CHECK(res.n_r == expected);
    CHECK(res.n_apr == res.n_r + res.n_rprime - 2);
  }
}

TEST_CASE("characteristic word closed form") {
  CHECK(characteristic_apr(ContinuedFraction({3}, {1})) ==
        words({"0", "1", "01", "10", "110", "1110"}));
  CHECK(characteristic_apr(fib) == words({"0", "1", "01", "001", "10"}));

  std::mt19937 rng(33);
  std::vector<ContinuedFraction> slopes{fib, ContinuedFraction({2}, {1}),
                                        ContinuedFraction({1, 3}, {2, 1})};
  for (int trial = 0; trial < 7; ++trial) slopes.push_back(random_slope(rng));
  bool saw_steep = false, saw_shallow = false;
  for (const auto& cf : slopes) {
    (cf.digit(1) == 1 ? saw_steep : saw_shallow) = true;
    const FieldElement alpha = cf_to_field(cf);
    CHECK(characteristic_apr(cf) == apr_set(cf, FieldElement(1) - alpha).apr);
  }
  CHECK(saw_steep);
  CHECK(saw_shallow);
}

TEST_CASE("counting without enumeration") {
  const CardinalityResult half = apr_cardinality(ContinuedFraction({2}, {1}),
                                                FieldElement::rational(1, 2));
  CHECK(half.count == 6);
  CHECK(half.tag == CardinalityCase::i_a);

  std::mt19937 rng(34);
  for (int trial = 0; trial < 40; ++trial) {
    const ContinuedFraction cf = random_slope(rng);
    const FieldElement alpha = cf_to_field(cf);
    const FieldElement rho = trial % 3 == 0 ? middle_band_intercept(rng, alpha)
                                            : random_intercept(rng, alpha);
    const CardinalityResult counted = apr_cardinality(cf, rho);
    CHECK(counted.count ==
          static_cast<long long>(apr_set(cf, rho).apr.size()));
  }
}

TEST_CASE("bad intercepts raise typed errors") {
  CHECK_THROWS_AS(apr_set(fib, FieldElement(0)), InfiniteAprError);
  CHECK_THROWS_AS(r_set(fib, FieldElement(0)), InfiniteAprError);
  CHECK_THROWS_AS(r_prime_set(fib, FieldElement(0)), InfiniteAprError);
  CHECK_THROWS_AS(apr_cardinality(fib, FieldElement(0)), InfiniteAprError);
  CHECK_THROWS_AS(apr_set(fib, FieldElement(-1)), std::invalid_argument);
  CHECK_THROWS_AS(apr_set(fib, FieldElement(1)), std::invalid_argument);
  CHECK_THROWS_AS(apr_cardinality(fib, FieldElement(2)), std::invalid_argument);
}
