#pragma once

#include <stdexcept>

#include "sturmian/continued_fraction.hpp"
#include "sturmian/errors.hpp"
#include "sturmian/field_element.hpp"

namespace sturmian {

// delta_{k,s} = |(s-1)(p_k - alpha q_k) + p_{k-1} - alpha q_{k-1}| for k >= 0
// and 1 <= s <= a_{k+1}. Read in lexicographic (k,s) order the sequence is
// strictly decreasing from delta_{0,1} = 1; flat_index counts along that
// order starting at 0.
struct DeltaValue {
  long long k = 0, s = 1, flat_index = 0;
  FieldElement value;
};

// Lazily walks delta_{0,1}, delta_{0,2}, ..., delta_{1,1}, ... extending the
// convergent error terms e_k = p_k - alpha q_k on demand.
class DeltaStream {
 public:
  explicit DeltaStream(const ContinuedFraction& cf)
      : cf_(cf), alpha_(cf_to_field(cf)), err_prev_(1), err_cur_(-alpha_) {
    if (cf_.is_rational())
      throw std::invalid_argument("delta sequence requires an irrational slope");
  }

  const FieldElement& alpha() const { return alpha_; }

  DeltaValue next() {
    if (s_ > cf_.digit(k_ + 1)) {
      const FieldElement err_next =
          FieldElement(cf_.digit(k_ + 1)) * err_cur_ + err_prev_;
      err_prev_ = err_cur_;
      err_cur_ = err_next;
      ++k_;
      s_ = 1;
    }
    DeltaValue out{k_, s_, flat_,
                   (FieldElement(s_ - 1) * err_cur_ + err_prev_).abs()};
    ++s_;
    ++flat_;
    return out;
  }

 private:
  ContinuedFraction cf_;
  FieldElement alpha_, err_prev_, err_cur_;  // e_{k-1}, e_k
  long long k_ = 0, s_ = 1, flat_ = 0;
};

inline DeltaValue delta(const ContinuedFraction& cf, long long k, long long s) {
  if (cf.is_rational())
    throw std::invalid_argument("delta sequence requires an irrational slope");
  if (k < 0) throw std::out_of_range("delta index k must be >= 0");
  if (s < 1 || s > cf.digit(k + 1))
    throw std::out_of_range("delta index s must lie in [1, a_{k+1}]");
  const FieldElement alpha = cf_to_field(cf);
  const Convergents cv = convergents(cf, k);
  const FieldElement err_k = FieldElement(cv.p(k)) - alpha * FieldElement(cv.q(k));
  const FieldElement err_prev =
      FieldElement(cv.p(k - 1)) - alpha * FieldElement(cv.q(k - 1));
  long long flat = s - 1;
  for (long long i = 1; i <= k; ++i) flat += cf.digit(i);
  return DeltaValue{k, s, flat, (FieldElement(s - 1) * err_k + err_prev).abs()};
}

struct MinimalIndices {
  long long k = 0, s = 1, flat_index = 0;
  FieldElement delta_value;
};

// First (k,s) in lexicographic order with delta_{k,s} <= rho; an exact tie
// counts. The answer always has flat index >= 1 because delta_{0,1} = 1.
inline MinimalIndices minimal_indices(const ContinuedFraction& cf,
                                      const FieldElement& rho,
                                      long long flat_cap = 1'000'000) {
  if (rho.sign() == 0) throw InfiniteAprError("zero intercept: every delta exceeds it");
  if (rho.sign() < 0) throw InfiniteAprError("negative threshold never dominates a delta");
  if (rho >= 1) throw std::invalid_argument("threshold must be below 1");
  DeltaStream stream(cf);
  for (long long i = 0; i < flat_cap; ++i) {
    const DeltaValue dv = stream.next();
    if (dv.value <= rho)
      return MinimalIndices{dv.k, dv.s, dv.flat_index, dv.value};
  }
  throw IterationCapError("no delta at or below the threshold within the budget");
}

}  // namespace sturmian
