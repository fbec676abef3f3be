#include <catch_amalgamated.hpp>

#include <random>

#include "sturmian/delta_sequence.hpp"
#include "sturmian/sampling.hpp"

using namespace sturmian;

namespace {

const ContinuedFraction fib({}, {1});
const FieldElement inv_tau = FieldElement::quadratic(-1, 1, 5, 2);

std::vector<FieldElement> first_deltas(const ContinuedFraction& cf, int n) {
  DeltaStream stream(cf);
  std::vector<FieldElement> out;
  for (int i = 0; i < n; ++i) out.push_back(stream.next().value);
  return out;
}

}  // namespace

TEST_CASE("delta goldens") {
  // golden slope: powers of 1/tau
  FieldElement power(1);
  DeltaStream stream(fib);
  for (int i = 0; i < 8; ++i) {
    CHECK(stream.next().value == power);
    power *= inv_tau;
  }

  // a1 = 2: the sequence opens 1, 1-alpha, alpha
  const ContinuedFraction two({2}, {1});
  const FieldElement alpha2 = cf_to_field(two);
  const auto head = first_deltas(two, 3);
  CHECK(head[0] == FieldElement(1));
  CHECK(head[1] == FieldElement(1) - alpha2);
  CHECK(head[2] == alpha2);
  CHECK(delta(two, 0, 2).value == FieldElement(1) - alpha2);

  // a1 = 1, a2 >= 2: delta_{1,2} = 2*alpha - 1
  const ContinuedFraction steep({1, 2}, {3});
  const FieldElement alpha3 = cf_to_field(steep);
  CHECK(delta(steep, 1, 2).value ==
        FieldElement(2) * alpha3 - FieldElement(1));

  CHECK_THROWS_AS(delta(fib, 0, 2), std::out_of_range);  // s > a_1
  CHECK_THROWS_AS(delta(fib, 1, 0), std::out_of_range);
  CHECK_THROWS_AS(delta(fib, -1, 1), std::out_of_range);
  CHECK_THROWS_AS(delta(ContinuedFraction({2, 3}, {}), 0, 1),
                  std::invalid_argument);
}

TEST_CASE("flat enumeration is strictly decreasing and consistent") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const ContinuedFraction cf = random_slope(rng);
    const FieldElement alpha = cf_to_field(cf);
    DeltaStream stream(cf);
    DeltaValue prev = stream.next();
    REQUIRE(prev.value == FieldElement(1));
    REQUIRE(prev.flat_index == 0);
    long long digit_sum = 0;
    long long last_k = 0;
    for (int i = 1; i < 50; ++i) {
      const DeltaValue cur = stream.next();
      CHECK(cur.value < prev.value);
      CHECK(cur.value.sign() > 0);
      CHECK(cur.flat_index == i);
      // random access agrees with the stream
      CHECK(delta(cf, cur.k, cur.s).value == cur.value);
      while (last_k < cur.k) digit_sum += cf.digit(++last_k);
      CHECK(cur.flat_index == (cur.k == 0 ? 0 : digit_sum) + cur.s - 1);
      if (i == 1) {
        const FieldElement other = FieldElement(1) - alpha;
        CHECK(cur.value == (alpha < other ? other : alpha));
      }
      prev = cur;
    }
  }
}

TEST_CASE("minimal indices find the first delta at or below the intercept") {
  const MinimalIndices deep = minimal_indices(fib, inv_tau * inv_tau);
  CHECK(deep.k == 2);
  CHECK(deep.s == 1);
  CHECK(deep.flat_index == 2);
  CHECK(deep.delta_value == inv_tau * inv_tau);

  const MinimalIndices shallow = minimal_indices(fib, FieldElement::rational(99, 100));
  CHECK(shallow.k == 1);
  CHECK(shallow.flat_index == 1);

  // a tie with the delta value itself counts
  const MinimalIndices tie = minimal_indices(fib, inv_tau);
  CHECK(tie.flat_index == 1);
  CHECK(tie.delta_value == inv_tau);

  CHECK_THROWS_AS(minimal_indices(fib, FieldElement(0)), InfiniteAprError);
  CHECK_THROWS_AS(minimal_indices(fib, -inv_tau), InfiniteAprError);
  CHECK_THROWS_AS(minimal_indices(fib, FieldElement(1)), std::invalid_argument);
}

TEST_CASE("renormalization divides the delta sequence by its second term") {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 10; ++trial) {
    const ContinuedFraction cf = random_slope(rng);
    const auto base = first_deltas(cf, 3);
    const auto renorm = first_deltas(renormalized_slope(cf), 2);
    CHECK(renorm[1] == base[2] / base[1]);
  }
}

TEST_CASE("complementary slopes share their delta values") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 6; ++trial) {
    const ContinuedFraction cf = random_slope(rng);
    CHECK(first_deltas(cf, 30) == first_deltas(one_minus(cf), 30));
  }
}
