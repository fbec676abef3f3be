#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sturmian/errors.hpp"
#include "sturmian/field_element.hpp"
#include "sturmian/integers.hpp"

namespace sturmian {

// Eventually periodic continued fraction [0; a1, a2, ..., (b1, ..., bk)] of a
// value in (0,1); all partial quotients are >= 1. An empty period encodes a
// rational value; irrational slopes need a non-empty period. Canonical form:
// the period is primitive (not a power of a shorter word), the preperiod is
// shortest (trailing digits matching the rotating period are absorbed), and
// rational expansions never end in 1. Canonical representations are unique,
// so operator== is semantic equality.
class ContinuedFraction {
 public:
  ContinuedFraction(std::vector<long long> preperiod, std::vector<long long> period)
      : preperiod_(std::move(preperiod)), period_(std::move(period)) {
    for (long long digit : preperiod_)
      if (digit < 1) throw std::invalid_argument("continued fraction digit < 1");
    for (long long digit : period_)
      if (digit < 1) throw std::invalid_argument("continued fraction digit < 1");
    if (preperiod_.empty() && period_.empty())
      throw std::invalid_argument("empty continued fraction");
    canonicalize();
  }

  const std::vector<long long>& preperiod() const { return preperiod_; }
  const std::vector<long long>& period() const { return period_; }
  bool is_rational() const { return period_.empty(); }

  // Partial quotient a_k, 1-based.
  long long digit(long long k) const {
    if (k < 1) throw std::out_of_range("continued fraction digit index < 1");
    const auto pre = static_cast<long long>(preperiod_.size());
    if (k <= pre) return preperiod_[static_cast<std::size_t>(k - 1)];
    if (period_.empty())
      throw std::out_of_range("digit index beyond a finite expansion");
    return period_[static_cast<std::size_t>((k - 1 - pre) % static_cast<long long>(period_.size()))];
  }

  // Number of digits of a rational expansion.
  long long length() const {
    if (!is_rational()) throw std::logic_error("length() on an infinite expansion");
    return static_cast<long long>(preperiod_.size());
  }

  std::vector<long long> first_digits(long long n) const {
    std::vector<long long> out;
    out.reserve(static_cast<std::size_t>(n));
    for (long long k = 1; k <= n; ++k) out.push_back(digit(k));
    return out;
  }

  bool operator==(const ContinuedFraction&) const = default;

 private:
  void canonicalize() {
    if (period_.empty()) {
      // [.., m, 1] and [.., m+1] denote the same rational; keep the latter.
      if (preperiod_.size() >= 2 && preperiod_.back() == 1) {
        preperiod_.pop_back();
        preperiod_.back() += 1;
      }
      if (preperiod_.size() == 1 && preperiod_[0] == 1)
        throw std::invalid_argument("continued fraction value must lie in (0,1)");
      return;
    }
    // Reduce the period to its primitive root.
    const std::size_t len = period_.size();
    for (std::size_t cand = 1; cand < len; ++cand) {
      if (len % cand != 0) continue;
      bool repeats = true;
      for (std::size_t i = cand; i < len && repeats; ++i)
        repeats = period_[i] == period_[i % cand];
      if (repeats) {
        period_.resize(cand);
        break;
      }
    }
    // Absorb preperiod digits that duplicate the rotating period tail.
    while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
      preperiod_.pop_back();
      std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
    }
  }

  std::vector<long long> preperiod_, period_;
};

// Convergents p_k/q_k for k = -1..max_index with p_{-1} = 1, q_{-1} = 0,
// p_0 = 0, q_0 = 1 and p_k = a_k p_{k-1} + p_{k-2} (same for q).
class Convergents {
 public:
  Convergents(const ContinuedFraction& cf, long long max_index) {
    if (max_index < -1) throw std::out_of_range("convergent index < -1");
    p_ = {1, 0};
    q_ = {0, 1};
    for (long long k = 1; k <= max_index; ++k) {
      const Int a = cf.digit(k);
      p_.push_back(a * p_[p_.size() - 1] + p_[p_.size() - 2]);
      q_.push_back(a * q_[q_.size() - 1] + q_[q_.size() - 2]);
    }
  }

  long long max_index() const { return static_cast<long long>(p_.size()) - 2; }

  const Int& p(long long k) const { return p_.at(static_cast<std::size_t>(k + 1)); }
  const Int& q(long long k) const { return q_.at(static_cast<std::size_t>(k + 1)); }

 private:
  std::vector<Int> p_, q_;
};

inline Convergents convergents(const ContinuedFraction& cf, long long max_index) {
  return Convergents(cf, max_index);
}

// Exact value of an eventually periodic expansion. The purely periodic tail
// y = [0; (b1..bk)] solves q_{k-1} y^2 + (q_k - p_{k-1}) y - p_k = 0 over the
// period's own convergents; preperiod digits fold in right to left.
inline FieldElement cf_to_field(const ContinuedFraction& cf) {
  if (cf.is_rational()) {
    const Convergents cv(cf, cf.length());
    return FieldElement::rational(cv.p(cf.length()), cv.q(cf.length()));
  }
  const ContinuedFraction tail({}, cf.period());
  const auto k = static_cast<long long>(tail.period().size());
  const Convergents cv(tail, k);
  const Int lin = cv.q(k) - cv.p(k - 1);
  const Int disc = lin * lin + 4 * cv.p(k) * cv.q(k - 1);
  FieldElement value = FieldElement::quadratic(-lin, 1, disc, 2 * cv.q(k - 1));
  if (value.is_rational() || value.sign() <= 0 || value >= 1)
    throw std::logic_error("periodic tail must be a quadratic value in (0,1)");
  const auto& pre = cf.preperiod();
  for (auto it = pre.rbegin(); it != pre.rend(); ++it)
    value = FieldElement(1) / (FieldElement(*it) + value);
  return value;
}

struct CfDigits {
  std::vector<long long> digits;
  bool terminated = false;  // expansion ended (rational input)
};

// First n partial quotients of x in (0,1) by the exact Gauss map.
inline CfDigits field_to_cf(const FieldElement& x, long long n) {
  if (x.sign() <= 0 || x >= 1)
    throw std::invalid_argument("field_to_cf expects a value in (0,1)");
  CfDigits out;
  FieldElement rest = x;
  for (long long i = 0; i < n; ++i) {
    if (rest.is_zero()) {
      out.terminated = true;
      return out;
    }
    const FieldElement inv = FieldElement(1) / rest;
    const Int a = inv.floor();
    out.digits.push_back(a.convert_to<long long>());
    rest = inv - FieldElement(a);
  }
  if (rest.is_zero()) out.terminated = true;
  return out;
}

// Full eventually periodic expansion of x in (0,1), detected by the first
// repeated Gauss-map state. Quadratic irrationals always repeat.
inline ContinuedFraction continued_fraction_of(const FieldElement& x,
                                               long long max_states = 100000) {
  if (x.sign() <= 0 || x >= 1)
    throw std::invalid_argument("continued fraction expects a value in (0,1)");
  if (x.is_rational()) {
    CfDigits d = field_to_cf(x, max_states);
    if (!d.terminated) throw std::runtime_error("rational expansion too long");
    return ContinuedFraction(d.digits, {});
  }
  std::vector<long long> digits;
  std::map<FieldElement, std::size_t> seen;
  FieldElement rest = x;
  while (static_cast<long long>(digits.size()) < max_states) {
    const auto [it, fresh] = seen.emplace(rest, digits.size());
    if (!fresh) {
      const std::size_t start = it->second;
      return ContinuedFraction(
          {digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(start)},
          {digits.begin() + static_cast<std::ptrdiff_t>(start), digits.end()});
    }
    const FieldElement inv = FieldElement(1) / rest;
    const Int a = inv.floor();
    digits.push_back(a.convert_to<long long>());
    rest = inv - FieldElement(a);
  }
  throw std::runtime_error("no period found within the state budget");
}

namespace detail {

// Drop the first n digits of an infinite expansion.
inline ContinuedFraction cf_shifted(const ContinuedFraction& cf, long long n) {
  std::vector<long long> pre = cf.preperiod();
  std::vector<long long> per = cf.period();
  for (long long i = 0; i < n; ++i) {
    if (!pre.empty()) {
      pre.erase(pre.begin());
    } else {
      std::rotate(per.begin(), per.begin() + 1, per.end());
    }
  }
  return ContinuedFraction(std::move(pre), std::move(per));
}

// Add delta to the first digit only; the tail keeps its periodic structure.
inline ContinuedFraction cf_bump_first(const ContinuedFraction& cf, long long delta) {
  std::vector<long long> pre = cf.preperiod();
  std::vector<long long> per = cf.period();
  if (pre.empty()) {
    pre.push_back(per.front());
    std::rotate(per.begin(), per.begin() + 1, per.end());
  }
  pre.front() += delta;
  return ContinuedFraction(std::move(pre), std::move(per));
}

inline ContinuedFraction cf_prepended(const ContinuedFraction& cf, long long digit) {
  std::vector<long long> pre = cf.preperiod();
  pre.insert(pre.begin(), digit);
  return ContinuedFraction(std::move(pre), cf.period());
}

}  // namespace detail

// Expansion of 1 - alpha:
//   a1 >= 2:  [0; 1, a1-1, a2, ...]
//   a1 == 1:  [0; a2+1, a3, ...]
inline ContinuedFraction one_minus(const ContinuedFraction& cf) {
  if (cf.is_rational())
    throw std::invalid_argument("one_minus expects an infinite expansion");
  if (cf.digit(1) >= 2)
    return detail::cf_prepended(detail::cf_bump_first(cf, -1), 1);
  return detail::cf_bump_first(detail::cf_shifted(cf, 1), +1);
}

// Slope of the system induced on [0, delta_1), one renormalization step:
//   a1 >= 2:            alpha/(1-alpha)   = [0; a1-1, a2, ...]
//   a1 == 1, a2 >= 2:   (2*alpha-1)/alpha = [0; 1, a2-1, a3, ...]
//   a1 == 1, a2 == 1:   (2*alpha-1)/alpha = [0; a3+1, a4, ...]
inline ContinuedFraction renormalized_slope(const ContinuedFraction& cf) {
  if (cf.is_rational())
    throw std::invalid_argument("renormalization expects an infinite expansion");
  if (cf.digit(1) >= 2) return detail::cf_bump_first(cf, -1);
  if (cf.digit(2) >= 2)
    return detail::cf_prepended(detail::cf_bump_first(detail::cf_shifted(cf, 1), -1), 1);
  return detail::cf_bump_first(detail::cf_shifted(cf, 2), +1);
}

}  // namespace sturmian
