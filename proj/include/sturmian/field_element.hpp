#pragma once

#include <compare>
#include <utility>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "sturmian/errors.hpp"
#include "sturmian/integers.hpp"

namespace sturmian {

// Exact element (a + b*sqrt(d)) / c of a real quadratic field Q(sqrt(d)), or
// of Q itself when d == 0. Normal form: c > 0, gcd(a, b, c) == 1, d
// square-free, and d == 0 whenever b == 0, so equal values have identical
// representations. Every comparison reduces to integer arithmetic; floating
// point never participates in a decision.
class FieldElement {
 public:
  FieldElement() : a_(0), b_(0), c_(1), d_(0) {}
  FieldElement(int n) : a_(n), b_(0), c_(1), d_(0) {}
  FieldElement(long long n) : a_(n), b_(0), c_(1), d_(0) {}
  FieldElement(Int n) : a_(std::move(n)), b_(0), c_(1), d_(0) {}

  static FieldElement rational(Int num, Int den) {
    return FieldElement(std::move(num), 0, std::move(den), 0);
  }

  // (a + b*sqrt(d)) / c with arbitrary input; normalized on construction.
  static FieldElement quadratic(Int a, Int b, Int d, Int c) {
    return FieldElement(std::move(a), std::move(b), std::move(c), std::move(d));
  }

  static FieldElement sqrt_of(Int d) { return FieldElement(0, 1, 1, std::move(d)); }

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const Int& c() const { return c_; }
  const Int& d() const { return d_; }

  bool is_rational() const { return d_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  // Exact sign. With a and b of opposite signs, sign(a + b*sqrt(d)) follows
  // from comparing a^2 against b^2*d.
  int sign() const {
    if (b_ == 0) return sign_of(a_);
    if (a_ == 0) return sign_of(b_);
    if (sign_of(a_) == sign_of(b_)) return sign_of(a_);
    const Int lhs = a_ * a_;
    const Int rhs = b_ * b_ * d_;
    return sign_of(a_) * lhs.compare(rhs);
  }

  FieldElement operator-() const {
    FieldElement r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
  }

  FieldElement abs() const { return sign() < 0 ? -*this : *this; }

  friend FieldElement operator+(const FieldElement& x, const FieldElement& y) {
    const Int d = merged_radicand(x, y);
    return FieldElement(x.a_ * y.c_ + y.a_ * x.c_, x.b_ * y.c_ + y.b_ * x.c_,
                        x.c_ * y.c_, d);
  }

  friend FieldElement operator-(const FieldElement& x, const FieldElement& y) {
    return x + (-y);
  }

  friend FieldElement operator*(const FieldElement& x, const FieldElement& y) {
    const Int d = merged_radicand(x, y);
    return FieldElement(x.a_ * y.a_ + x.b_ * y.b_ * d,
                        x.a_ * y.b_ + x.b_ * y.a_, x.c_ * y.c_, d);
  }

  friend FieldElement operator/(const FieldElement& x, const FieldElement& y) {
    if (y.is_zero()) throw DivisionByZeroError("field element division by zero");
    const Int d = merged_radicand(x, y);
    // 1/((a + b*sqrt(d))/c) = c*(a - b*sqrt(d)) / (a^2 - b^2*d)
    const Int norm = y.a_ * y.a_ - y.b_ * y.b_ * d;
    const FieldElement inv(y.c_ * y.a_, -(y.c_ * y.b_), norm, d);
    return x * inv;
  }

  FieldElement& operator+=(const FieldElement& y) { return *this = *this + y; }
  FieldElement& operator-=(const FieldElement& y) { return *this = *this - y; }
  FieldElement& operator*=(const FieldElement& y) { return *this = *this * y; }
  FieldElement& operator/=(const FieldElement& y) { return *this = *this / y; }

  bool operator==(const FieldElement& o) const {
    return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
  }

  std::strong_ordering operator<=>(const FieldElement& o) const {
    const int s = (*this - o).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // Largest integer n with n <= value. sqrt(b^2*d) is bracketed between
  // consecutive integers by an integer square root, which pins floor() down
  // to two candidates; one exact sign test picks the right one.
  Int floor() const {
    if (b_ == 0) return floor_div(a_, c_);
    const Int sq = isqrt(b_ * b_ * d_);
    const Int lo = (b_ > 0) ? sq : -sq - 1;
    Int n = floor_div(a_ + lo, c_);
    const FieldElement shifted = *this - FieldElement(n + 1);
    if (shifted.sign() >= 0) ++n;
    return n;
  }

  // Decimal approximation for display only; computed at 50 digits first so
  // large a, b with a tiny sum do not cancel.
  double approx() const {
    namespace mp = boost::multiprecision;
    using Wide = mp::cpp_bin_float_50;
    Wide x(a_);
    if (b_ != 0) x += Wide(b_) * sqrt(Wide(d_));
    x /= Wide(c_);
    return x.convert_to<double>();
  }

 private:
  FieldElement(Int a, Int b, Int c, Int d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    normalize();
  }

  static Int merged_radicand(const FieldElement& x, const FieldElement& y) {
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
    throw MixedRadicandError("mixed radicands in one operation");
  }

  void normalize() {
    if (c_ == 0) throw DivisionByZeroError("field element with zero denominator");
    if (d_ < 0) throw std::invalid_argument("field element with negative radicand");
    if (c_ < 0) {
      a_ = -a_;
      b_ = -b_;
      c_ = -c_;
    }
    if (d_ == 0) {
      b_ = 0;
    } else if (b_ == 0) {
      d_ = 0;
    } else {
      auto [root, squarefree] = split_square_factor(d_);
      if (root != 1) {
        b_ *= root;
        d_ = squarefree;
      }
      if (d_ == 1) {  // sqrt(1) folds into the rational part
        a_ += b_;
        b_ = 0;
        d_ = 0;
      }
    }
    using boost::multiprecision::gcd;
    const Int g = gcd(gcd(boost::multiprecision::abs(a_), boost::multiprecision::abs(b_)), c_);
    if (g > 1) {
      a_ /= g;
      b_ /= g;
      c_ /= g;
    }
  }

  Int a_, b_, c_, d_;
};

inline int compare(const FieldElement& x, const FieldElement& y) {
  return (x - y).sign();
}

}  // namespace sturmian
