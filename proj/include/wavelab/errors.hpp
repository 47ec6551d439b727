#pragma once

#include <stdexcept>
#include <string>

namespace wavelab {

// Inadmissible physical input (non-positive volume or temperature, wrong
// side of a wave curve, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Caller passed arguments outside an operation's contract.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Configuration file or experiment description is invalid.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical run had to stop (positivity loss, dt underflow).
class NumericalAbort : public std::runtime_error {
 public:
  NumericalAbort(const std::string& what, double time, long cell)
      : std::runtime_error(what), time_(time), cell_(cell) {}
  double time() const noexcept { return time_; }
  long cell() const noexcept { return cell_; }

 private:
  double time_;
  long cell_;
};

// Indicates a bug rather than a bad input, e.g. a root that should be
// bracketed by construction was not.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// End states cannot be joined by rarefaction / contact / rarefaction; the
// named family would have to be a shock.
class NotR1CDR3Error : public DomainError {
 public:
  NotR1CDR3Error(const std::string& what, int family)
      : DomainError(what), family_(family) {}
  int family() const noexcept { return family_; }

 private:
  int family_;
};

}  // namespace wavelab
