#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sturmian/binary_word.hpp"
#include "sturmian/errors.hpp"
#include "sturmian/field_element.hpp"

namespace sturmian {

// How the images of the subintervals are arranged, left to right. A
// two-interval exchange swaps its pieces; the induced three-interval
// exchanges that appear here always reverse theirs.
enum class Permutation { swap2, perm321 };

// Exchange of two or three subintervals of [0,1), each translated rigidly;
// subintervals are closed on the left and open on the right. The canonical
// Sturmian map for slope alpha is the two-interval case with breakpoint
// alpha and translations (1-alpha, -alpha). Construction verifies exactly
// that the translated images tile [0,1) in the order the permutation claims.
class IntervalExchange {
 public:
  IntervalExchange(std::vector<FieldElement> breakpoints,
                   std::vector<FieldElement> translations, Permutation permutation)
      : breakpoints_(std::move(breakpoints)),
        translations_(std::move(translations)),
        permutation_(permutation) {
    validate();
  }

  std::size_t interval_count() const { return translations_.size(); }
  Permutation permutation() const { return permutation_; }

  const FieldElement& breakpoint(std::size_t i) const { return breakpoints_.at(i); }
  const FieldElement& translation(std::size_t i) const { return translations_.at(i); }

  FieldElement left_endpoint(std::size_t i) const {
    return i == 0 ? FieldElement(0) : breakpoints_.at(i - 1);
  }

  FieldElement right_endpoint(std::size_t i) const {
    return i == interval_count() - 1 ? FieldElement(1) : breakpoints_.at(i);
  }

  std::size_t interval_index(const FieldElement& x) const {
    if (x.sign() < 0 || x >= 1)
      throw std::invalid_argument("point outside the unit interval");
    for (std::size_t i = 0; i + 1 < interval_count(); ++i)
      if (x < breakpoints_[i]) return i;
    return interval_count() - 1;
  }

  FieldElement apply(const FieldElement& x) const {
    return x + translations_[interval_index(x)];
  }

  FieldElement apply_inverse(const FieldElement& y) const {
    if (y.sign() < 0 || y >= 1)
      throw std::invalid_argument("point outside the unit interval");
    for (std::size_t i = 0; i < interval_count(); ++i) {
      if (y >= left_endpoint(i) + translations_[i] &&
          y < right_endpoint(i) + translations_[i])
        return y - translations_[i];
    }
    throw std::logic_error("inverse image not found");  // unreachable for valid maps
  }

 private:
  void validate() const {
    const std::size_t n = translations_.size();
    if (n < 2 || n > 3 || breakpoints_.size() != n - 1)
      throw std::invalid_argument("interval exchange needs 2 or 3 intervals");
    if ((n == 2) != (permutation_ == Permutation::swap2))
      throw std::invalid_argument("permutation tag does not match the interval count");
    FieldElement prev(0);
    for (const auto& b : breakpoints_) {
      if (b <= prev || b >= 1)
        throw std::invalid_argument("breakpoints must increase strictly inside (0,1)");
      prev = b;
    }
    // The images, read for domain pieces right to left, must tile [0,1).
    FieldElement cursor(0);
    for (std::size_t j = n; j-- > 0;) {
      if (left_endpoint(j) + translations_[j] != cursor)
        throw std::invalid_argument("translated images do not tile [0,1) in reversed order");
      cursor = right_endpoint(j) + translations_[j];
    }
    if (cursor != 1)
      throw std::invalid_argument("translated images do not cover [0,1)");
  }

  std::vector<FieldElement> breakpoints_;
  std::vector<FieldElement> translations_;
  Permutation permutation_;
};

// The canonical Sturmian two-interval exchange: x + 1 - alpha on [0, alpha),
// x - alpha on [alpha, 1). Requires an irrational alpha in (0,1).
inline IntervalExchange make_two_iet(const FieldElement& alpha) {
  if (alpha.is_rational())
    throw std::invalid_argument("slope must be irrational");
  if (alpha.sign() <= 0 || alpha >= 1)
    throw std::invalid_argument("slope must lie in (0,1)");
  return IntervalExchange({alpha}, {FieldElement(1) - alpha, -alpha},
                          Permutation::swap2);
}

// T^{-n+1}(alpha) for the canonical map: the point separating light from
// heavy length-n prefixes. n = 1 gives alpha itself.
inline FieldElement inverse_iterate_alpha(const IntervalExchange& map, long long n) {
  if (map.interval_count() != 2)
    throw std::invalid_argument("inverse alpha orbit requires a two-interval exchange");
  if (n < 1) throw std::invalid_argument("prefix length must be >= 1");
  FieldElement x = map.breakpoint(0);
  for (long long i = 1; i < n; ++i) x = map.apply_inverse(x);
  return x;
}

// First n letters of the Sturmian word with slope alpha and intercept rho:
// letter i is 0 exactly when T^i(rho) lies in [0, alpha).
inline BinaryWord code_orbit(const FieldElement& alpha, const FieldElement& rho,
                             long long n) {
  if (rho.sign() < 0 || rho >= 1)
    throw std::invalid_argument("intercept must lie in [0,1)");
  if (alpha.is_rational() || alpha.sign() <= 0 || alpha >= 1)
    throw std::invalid_argument("slope must be irrational in (0,1)");
  const FieldElement step_zero = FieldElement(1) - alpha;
  BinaryWord word;
  FieldElement x = rho;
  for (long long i = 0; i < n; ++i) {
    if (x < alpha) {
      word.push_back(0);
      x += step_zero;
    } else {
      word.push_back(1);
      x -= alpha;
    }
  }
  return word;
}

}  // namespace sturmian
