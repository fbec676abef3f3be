#pragma once

#include <random>
#include <vector>

#include "sturmian/abelian_returns.hpp"
#include "sturmian/continued_fraction.hpp"
#include "sturmian/delta_sequence.hpp"
#include "sturmian/field_element.hpp"
#include "sturmian/oracle.hpp"

// Seeded input generators for the property suites. Everything stays exact:
// slopes are periodic continued fractions, intercepts live in the slope's
// quadratic field.

namespace sturmian {

inline ContinuedFraction random_slope(std::mt19937& rng, long long max_digit = 4,
                                      long long max_preperiod = 2,
                                      long long max_period = 3) {
  std::uniform_int_distribution<long long> digit(1, max_digit);
  std::uniform_int_distribution<long long> pre_len(0, max_preperiod);
  std::uniform_int_distribution<long long> per_len(1, max_period);
  std::vector<long long> pre(static_cast<std::size_t>(pre_len(rng)));
  std::vector<long long> per(static_cast<std::size_t>(per_len(rng)));
  for (auto& d : pre) d = digit(rng);
  for (auto& d : per) d = digit(rng);
  return ContinuedFraction(std::move(pre), std::move(per));
}

// A nonzero point of [0,1) of the form frac(u + v*alpha) with small rational
// u and integer v; v = 0 keeps plain rationals in the mix.
inline FieldElement random_intercept(std::mt19937& rng, const FieldElement& alpha) {
  std::uniform_int_distribution<long long> num(-6, 6);
  std::uniform_int_distribution<long long> den(1, 7);
  std::uniform_int_distribution<long long> coeff(-2, 2);
  for (;;) {
    FieldElement x = FieldElement::rational(num(rng), den(rng)) +
                     FieldElement(coeff(rng)) * alpha;
    x -= FieldElement(x.floor());
    if (x.sign() > 0) return x;
  }
}

// A point strictly between min{alpha,1-alpha} and max{alpha,1-alpha}; this is
// the band where the cardinality analysis splits into its two sub-cases.
inline FieldElement middle_band_intercept(std::mt19937& rng,
                                          const FieldElement& alpha) {
  const FieldElement mirrored = FieldElement(1) - alpha;
  const FieldElement lo = alpha < mirrored ? alpha : mirrored;
  const FieldElement hi = alpha < mirrored ? mirrored : alpha;
  std::uniform_int_distribution<long long> den(2, 9);
  const long long q = den(rng);
  std::uniform_int_distribution<long long> num(1, q - 1);
  return lo + FieldElement::rational(num(rng), q) * (hi - lo);
}

struct ScanPair {
  ContinuedFraction slope;
  FieldElement rho;
  OracleReport report;
};

// A pair whose brute-force scan is provably complete within the given prefix
// budget. Deep minimal indices or fast-growing convergents push the last
// band entry past any fixed budget, so candidates are filtered structurally
// (small digits, shallow minimal index on both the direct and the
// letter-exchanged route), certified with scan_horizon, and finally gated on
// the scan's own growth window.
inline ScanPair random_scan_pair(std::mt19937& rng, long long max_prefix,
                                 long long word_length) {
  for (;;) {
    const ContinuedFraction slope = random_slope(rng, 3, 1, 2);
    const FieldElement alpha = cf_to_field(slope);
    const FieldElement rho = random_intercept(rng, alpha);
    const MinimalIndices light = minimal_indices(slope, rho);
    if (light.flat_index > 3) continue;
    const MinimalIndices heavy =
        minimal_indices(one_minus(slope), FieldElement(1) - rho);
    if (heavy.flat_index > 3) continue;
    try {
      if (scan_horizon(slope, rho, 4 * max_prefix) > max_prefix) continue;
    } catch (const IterationCapError&) {
      continue;
    }
    OracleReport report =
        apr_bruteforce(slope, rho, max_prefix, word_length, word_length);
    if (!report.stabilized) continue;
    return {slope, rho, std::move(report)};
  }
}

}  // namespace sturmian
