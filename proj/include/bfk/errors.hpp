#pragma once

#include <stdexcept>
#include <string>

namespace bfk {

// Argument outside the mathematical domain of an operation (non-finite input,
// non-integrable singularity, nonpositive parameter where positivity is needed).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Index or parameter outside the range an object was built for (zero table too
// short, asymptotic split requested below r = 1, ...).
class RangeError : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

// An iterative numerical method lost its guarantees, e.g. Newton on a zero of
// J0 whose sign bracket disappeared. Carries the offending index.
class ComputationError : public std::runtime_error {
public:
  ComputationError(const std::string& what, long index)
      : std::runtime_error(what), index_(index) {}
  long index() const noexcept { return index_; }

private:
  long index_;
};

// Quadrature tolerance not reached within the panel budget.
class AccuracyError : public std::runtime_error {
public:
  AccuracyError(const std::string& what, double estimate)
      : std::runtime_error(what), estimate_(estimate) {}
  double estimate() const noexcept { return estimate_; }

private:
  double estimate_;
};

}  // namespace bfk
