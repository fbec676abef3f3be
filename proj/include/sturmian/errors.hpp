#pragma once

#include <stdexcept>

namespace sturmian {

// Two genuinely quadratic values from different fields Q(sqrt(d)) met in one
// operation. A computation context uses a single radicand; rationals (d = 0)
// mix freely with anything.
class MixedRadicandError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class DivisionByZeroError : public std::domain_error {
  using std::domain_error::domain_error;
};

// The set of abelian returns to prefixes is infinite exactly when the
// intercept is zero; operations that would enumerate it raise this instead of
// looping.
class InfiniteAprError : public std::domain_error {
  using std::domain_error::domain_error;
};

// An interval-induction run exceeded its step budget.
class IterationCapError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An oracle scan found too few occurrences of the target abelian class.
class InsufficientDataError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class ParseError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace sturmian
