#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sturmian/binary_word.hpp"
#include "sturmian/continued_fraction.hpp"
#include "sturmian/delta_sequence.hpp"
#include "sturmian/errors.hpp"
#include "sturmian/field_element.hpp"
#include "sturmian/interval_exchange.hpp"

namespace sturmian {

enum class Weight { light, heavy };

// A length-n prefix is light when the intercept falls before the n-th
// inverse-orbit point of the breakpoint, heavy otherwise.
inline Weight light_or_heavy(const FieldElement& alpha, const FieldElement& rho,
                             long long n) {
  if (rho.sign() < 0 || rho >= 1)
    throw std::invalid_argument("intercept must lie in [0,1)");
  const IntervalExchange map = make_two_iet(alpha);
  return rho < inverse_iterate_alpha(map, n) ? Weight::light : Weight::heavy;
}

// State of the renormalization walk that grows the light-prefix return set.
// (r, r_prime) are the two itineraries of the current prefix interval,
// epsilon the renormalized slope; collected lists every word found so far in
// discovery order.
struct AlgorithmState {
  ContinuedFraction epsilon;
  BinaryWord r, r_prime;
  std::vector<BinaryWord> collected;
};

// Negative-control hook for the verification harness: flipping the lex
// comparison corrupts the pair ordering and must be caught downstream.
struct StepOptions {
  bool flip_lex = false;
};

inline AlgorithmState algorithm_init(const ContinuedFraction& slope) {
  if (slope.is_rational())
    throw std::invalid_argument("slope must be irrational");
  AlgorithmState st{slope, BinaryWord("0"), BinaryWord("1"), {}};
  st.collected = {st.r, st.r_prime};
  return st;
}

// One rung down the delta ladder. The concatenation joins the set; then
// epsilon > 1/2 (first digit 1) keeps r and replaces r_prime by the
// concatenation, while epsilon < 1/2 promotes {r_prime, concatenation} as the
// new lex-ordered pair. Either way epsilon renormalizes by one step.
inline void algorithm_step(AlgorithmState& st, const StepOptions& opt = {}) {
  const BinaryWord joined = st.r + st.r_prime;
  st.collected.push_back(joined);
  if (st.epsilon.digit(1) == 1) {
    st.r_prime = joined;
  } else {
    const bool joined_first = opt.flip_lex ? (st.r_prime < joined) : (joined < st.r_prime);
    if (joined_first) {
      st.r = joined;
    } else {
      st.r = st.r_prime;
      st.r_prime = joined;
    }
  }
  st.epsilon = renormalized_slope(st.epsilon);
}

// One row per delta value: the pair before stepping past it, their
// concatenation, and the renormalized slope of the induced system.
struct AlgorithmRow {
  DeltaValue delta;
  BinaryWord r, r_prime, concatenation;
  ContinuedFraction epsilon;
};

inline std::vector<AlgorithmRow> algorithm_trace(const ContinuedFraction& slope,
                                                 long long rows,
                                                 const StepOptions& opt = {}) {
  DeltaStream deltas(slope);
  AlgorithmState st = algorithm_init(slope);
  std::vector<AlgorithmRow> out;
  for (long long i = 0; i < rows; ++i) {
    out.push_back({deltas.next(), st.r, st.r_prime, st.r + st.r_prime, st.epsilon});
    algorithm_step(st, opt);
  }
  return out;
}

namespace detail {

inline void check_intercept(const FieldElement& rho) {
  if (rho.sign() == 0)
    throw InfiniteAprError("zero intercept: the abelian return set is infinite");
  if (rho.sign() < 0 || rho >= 1)
    throw std::invalid_argument("intercept must lie in [0,1)");
}

struct CountedSet {
  std::set<BinaryWord> words;
  MinimalIndices indices;
};

inline CountedSet r_set_counted(const ContinuedFraction& slope, const FieldElement& rho,
                                const StepOptions& opt) {
  check_intercept(rho);
  const MinimalIndices mi = minimal_indices(slope, rho);
  AlgorithmState st = algorithm_init(slope);
  for (long long i = 0; i < mi.flat_index; ++i) algorithm_step(st, opt);
  return CountedSet{{st.collected.begin(), st.collected.end()}, mi};
}

}  // namespace detail

// Abelian returns to light prefixes.
inline std::set<BinaryWord> r_set(const ContinuedFraction& slope, const FieldElement& rho,
                                  const StepOptions& opt = {}) {
  return detail::r_set_counted(slope, rho, opt).words;
}

// Abelian returns to heavy prefixes: the letter-exchange image of the light
// set for the complementary slope and intercept.
inline std::set<BinaryWord> r_prime_set(const ContinuedFraction& slope,
                                        const FieldElement& rho,
                                        const StepOptions& opt = {}) {
  detail::check_intercept(rho);
  std::set<BinaryWord> out;
  for (const auto& w : r_set(one_minus(slope), FieldElement(1) - rho, opt))
    out.insert(w.complemented());
  return out;
}

struct ReturnSetResult {
  std::set<BinaryWord> r_set, r_prime_set, apr;
  long long n_r = 0, n_rprime = 0, n_apr = 0;
  long long k0 = 0, s0 = 0;  // minimal indices used for the light set
};

// Full picture for one (slope, intercept): both half sets, their union, the
// counts, and the minimal delta indices. Internal cross-checks enforce the
// structural facts: the halves share exactly {0, 1}, the union contains
// {0, 1, 01, 10}, and |r_set| = 1 + a_1 + ... + a_{k0} + s0.
inline ReturnSetResult apr_set(const ContinuedFraction& slope, const FieldElement& rho,
                               const StepOptions& opt = {}) {
  detail::CountedSet light = detail::r_set_counted(slope, rho, opt);
  ReturnSetResult res;
  res.r_set = std::move(light.words);
  res.r_prime_set = r_prime_set(slope, rho, opt);
  res.apr = res.r_set;
  res.apr.insert(res.r_prime_set.begin(), res.r_prime_set.end());
  res.n_r = static_cast<long long>(res.r_set.size());
  res.n_rprime = static_cast<long long>(res.r_prime_set.size());
  res.n_apr = static_cast<long long>(res.apr.size());
  res.k0 = light.indices.k;
  res.s0 = light.indices.s;

  if (!opt.flip_lex) {
    long long expected = 1 + light.indices.s;
    for (long long i = 1; i <= light.indices.k; ++i) expected += slope.digit(i);
    if (res.n_r != expected)
      throw std::logic_error("light return count disagrees with the digit formula");
    std::set<BinaryWord> both;
    std::set_intersection(res.r_set.begin(), res.r_set.end(), res.r_prime_set.begin(),
                          res.r_prime_set.end(), std::inserter(both, both.end()));
    const std::set<BinaryWord> letters{BinaryWord("0"), BinaryWord("1")};
    if (both != letters)
      throw std::logic_error("the half sets must share exactly the two letters");
    for (const char* w : {"0", "1", "01", "10"})
      if (!res.apr.contains(BinaryWord(w)))
        throw std::logic_error("abelian return set misses a guaranteed member");
  }
  return res;
}

enum class CardinalityCase { i_a, i_b, ii };

struct CardinalityResult {
  long long count = 0;
  CardinalityCase tag = CardinalityCase::ii;
};

// Cardinality by case analysis, without building the sets. Slopes above 1/2
// reduce through the letter exchange first, so the analysis always sees
// a_1 >= 2. Intercepts strictly between alpha and 1-alpha sit in the middle
// band: with (l-1)alpha < rho <= l*alpha, the strict middle of the band gives
// a_1 + 4 and the closed remainder a_1 + 3. Everything else follows the
// minimal indices of min(rho, 1-rho): 2 + a_1 + ... + a_k + s.
inline CardinalityResult apr_cardinality(const ContinuedFraction& slope,
                                         const FieldElement& rho) {
  detail::check_intercept(rho);
  if (slope.digit(1) == 1)
    return apr_cardinality(one_minus(slope), FieldElement(1) - rho);

  const long long a1 = slope.digit(1);
  const FieldElement alpha = cf_to_field(slope);
  const FieldElement complement = FieldElement(1) - alpha;
  if (alpha < rho && rho < complement) {
    long long l = 1;
    while (FieldElement(l) * alpha < rho) ++l;
    if (l < 2 || l > a1)
      throw std::logic_error("middle-band index out of range");
    const FieldElement upper = FieldElement(1) - FieldElement(a1 - l + 1) * alpha;
    if (rho < upper) return {a1 + 4, CardinalityCase::i_a};
    return {a1 + 3, CardinalityCase::i_b};
  }
  const FieldElement mirrored = FieldElement(1) - rho;
  const FieldElement margin = rho < mirrored ? rho : mirrored;
  const MinimalIndices mi = minimal_indices(slope, margin);
  long long count = 2 + mi.s;
  for (long long i = 1; i <= mi.k; ++i) count += slope.digit(i);
  return {count, CardinalityCase::ii};
}

// Abelian returns to prefixes of the characteristic word (intercept 1-alpha),
// in closed form.
inline std::set<BinaryWord> characteristic_apr(const ContinuedFraction& slope) {
  if (slope.is_rational())
    throw std::invalid_argument("slope must be irrational");
  std::set<BinaryWord> out;
  if (slope.digit(1) >= 2) {  // alpha < 1/2
    out.insert(BinaryWord("0"));
    out.insert(BinaryWord("01"));
    out.insert(BinaryWord("1"));
    std::string run;
    for (long long j = 1; j <= slope.digit(1); ++j) {
      run.assign(static_cast<std::size_t>(j), '1');
      out.insert(BinaryWord(run + "0"));
    }
  } else {  // alpha > 1/2
    out.insert(BinaryWord("1"));
    out.insert(BinaryWord("10"));
    out.insert(BinaryWord("0"));
    std::string run;
    for (long long j = 1; j <= slope.digit(2) + 1; ++j) {
      run.assign(static_cast<std::size_t>(j), '0');
      out.insert(BinaryWord(run + "1"));
    }
  }
  return out;
}

}  // namespace sturmian
