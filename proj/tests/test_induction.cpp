#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "sturmian/induction.hpp"
#include "sturmian/delta_sequence.hpp"
#include "sturmian/sampling.hpp"

using namespace sturmian;

namespace {

const FieldElement inv_tau = FieldElement::quadratic(-1, 1, 5, 2);
const FieldElement inv_tau2 = FieldElement::quadratic(3, -1, 5, 2);
const FieldElement inv_tau3 = FieldElement::quadratic(-2, 1, 5, 1);

FieldElement kac_sum(const InductionResult& res) {
  FieldElement total(0);
  for (const auto& p : res.pieces)
    total += (p.right - p.left) * FieldElement(p.return_time);
  return total;
}

std::set<BinaryWord> itinerary_set(const InductionResult& res) {
  std::set<BinaryWord> out;
  for (const auto& p : res.pieces) out.insert(p.itinerary);
  return out;
}

}  // namespace

TEST_CASE("golden ratio four-piece induction") {
  const IntervalExchange t = make_two_iet(inv_tau);
  // I = [1/tau^3, 1/tau + 1/tau^4)
  const FieldElement right = FieldElement::quadratic(3, -1, 5, 1);  // 3-sqrt(5)
  const InductionResult res = induce(t, inv_tau3, right);
  REQUIRE(res.pieces.size() == 4);

  const FieldElement split2 = FieldElement::quadratic(-4, 2, 5, 1);  // 1/t^2+1/t^5
  CHECK(res.pieces[0].left == inv_tau3);
  CHECK(res.pieces[0].right == inv_tau2);
  CHECK(res.pieces[0].return_time == 1);
  CHECK(res.pieces[0].itinerary.str() == "0");

  CHECK(res.pieces[1].left == inv_tau2);
  CHECK(res.pieces[1].right == split2);
  CHECK(res.pieces[1].return_time == 3);
  CHECK(res.pieces[1].itinerary.str() == "010");

  CHECK(res.pieces[2].left == split2);
  CHECK(res.pieces[2].right == inv_tau);
  CHECK(res.pieces[2].return_time == 2);
  CHECK(res.pieces[2].itinerary.str() == "01");

  CHECK(res.pieces[3].left == inv_tau);
  CHECK(res.pieces[3].right == right);
  CHECK(res.pieces[3].return_time == 2);
  CHECK(res.pieces[3].itinerary.str() == "10");

  CHECK(res.induced.interval_count() == 3);
  CHECK(res.induced.permutation() == Permutation::perm321);
}

TEST_CASE("inducing on the whole interval is the identity decomposition") {
  const IntervalExchange t = make_two_iet(inv_tau);
  const InductionResult res = induce(t, FieldElement(0), FieldElement(1));
  REQUIRE(res.pieces.size() == 2);
  CHECK(res.pieces[0].right == inv_tau);
  CHECK(res.pieces[0].return_time == 1);
  CHECK(res.pieces[0].itinerary.str() == "0");
  CHECK(res.pieces[1].return_time == 1);
  CHECK(res.pieces[1].itinerary.str() == "1");
  CHECK(res.induced.permutation() == Permutation::swap2);
}

TEST_CASE("closed form for [0,beta) with large beta and slope above one half") {
  // for beta above max{alpha, 1-alpha} the three pieces are
  // [0, beta+alpha-1) "0" / [beta+alpha-1, alpha) "01" / [alpha, beta) "1"
  std::mt19937 rng(13);
  const IntervalExchange t = make_two_iet(inv_tau);
  for (int i = 0; i < 10; ++i) {
    const long long den = std::uniform_int_distribution<long long>(50, 500)(rng);
    const FieldElement beta =
        inv_tau + (FieldElement(1) - inv_tau) * FieldElement::rational(
                      std::uniform_int_distribution<long long>(1, den - 1)(rng), den);
    const InductionResult res = induce(t, FieldElement(0), beta);
    REQUIRE(res.pieces.size() == 3);
    CHECK(res.pieces[0].right == beta + inv_tau - FieldElement(1));
    CHECK(res.pieces[0].itinerary.str() == "0");
    CHECK(res.pieces[0].return_time == 1);
    CHECK(res.pieces[1].right == inv_tau);
    CHECK(res.pieces[1].itinerary.str() == "01");
    CHECK(res.pieces[1].return_time == 2);
    CHECK(res.pieces[2].right == beta);
    CHECK(res.pieces[2].itinerary.str() == "1");
    CHECK(res.pieces[2].return_time == 1);
  }
}

TEST_CASE("Kac identity and coding consistency on random intervals") {
  std::mt19937 rng(14);
  for (int i = 0; i < 5; ++i) {
    const ContinuedFraction cf = random_slope(rng, 3, 1, 2);
    const FieldElement alpha = cf_to_field(cf);
    const IntervalExchange t = make_two_iet(alpha);
    for (int j = 0; j < 4; ++j) {
      std::uniform_int_distribution<long long> num(0, 30);
      const FieldElement a = FieldElement::rational(num(rng), 31);
      const FieldElement b = a + FieldElement::rational(num(rng) + 1, 100);
      if (b > FieldElement(1)) continue;
      if (!(a < b)) continue;
      const InductionResult res = induce(t, a, b);
      CHECK(kac_sum(res) == FieldElement(1));
      for (const auto& p : res.pieces) {
        CHECK(p.itinerary ==
              code_orbit(alpha, p.left, p.return_time));
        // the translation realizes the first return on the piece
        FieldElement x = p.left;
        for (long long k = 0; k < p.return_time; ++k) x = t.apply(x);
        CHECK(x == p.left + p.translation);
      }
    }
  }
}

TEST_CASE("two-or-three itinerary dichotomy at delta values and between them") {
  std::mt19937 rng(15);
  for (int s = 0; s < 3; ++s) {
    const ContinuedFraction cf = random_slope(rng, 3, 1, 2);
    const FieldElement alpha = cf_to_field(cf);
    const IntervalExchange t = make_two_iet(alpha);
    DeltaStream stream(cf);
    FieldElement prev = stream.next().value;  // delta_0 = 1
    for (int j = 0; j < 6; ++j) {
      const FieldElement cur = stream.next().value;
      CHECK(itinerary_set(induce(t, FieldElement(0), cur)).size() == 2);
      const FieldElement mid = (prev + cur) / FieldElement(2);
      const auto three = itinerary_set(induce(t, FieldElement(0), mid));
      REQUIRE(three.size() == 3);
      // the longest is the lex-smaller followed by the lex-larger of the rest
      std::vector<BinaryWord> words(three.begin(), three.end());
      std::sort(words.begin(), words.end(),
                [](const BinaryWord& x, const BinaryWord& y) {
                  return x.size() < y.size();
                });
      CHECK(std::min(words[0], words[1]) + std::max(words[0], words[1]) ==
            words[2]);
      prev = cur;
    }
  }
}

TEST_CASE("itineraries of [0,beta) with golden data") {
  CHECK(itineraries_zero_beta(inv_tau, FieldElement(1)) ==
        std::set<BinaryWord>{BinaryWord("0"), BinaryWord("1")});
  CHECK(itineraries_zero_beta(inv_tau, inv_tau) ==
        std::set<BinaryWord>{BinaryWord("0"), BinaryWord("01")});
  CHECK(itineraries_zero_beta(inv_tau2, FieldElement::rational(1, 2)) ==
        std::set<BinaryWord>{BinaryWord("1"), BinaryWord("01"),
                             BinaryWord("011")});
}

TEST_CASE("degenerate or capped inductions are rejected") {
  const IntervalExchange t = make_two_iet(inv_tau);
  CHECK_THROWS_AS(induce(t, FieldElement::rational(1, 2),
                         FieldElement::rational(1, 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(induce(t, FieldElement::rational(3, 4),
                         FieldElement::rational(1, 4)),
                  std::invalid_argument);
  CHECK_THROWS_AS(induce(t, FieldElement(0), FieldElement::rational(1, 1000), 3),
                  IterationCapError);
}
