#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wagner {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two objects built over free groups of different ranks were combined.
class RankMismatchError : public Error {
 public:
  using Error::Error;
};

/// An argument is outside the mathematical domain of the operation
/// (e.g. a formula that requires rank >= 2 evaluated at rank 1).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed endomorphism text; `position()` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_ = 0;
};

/// An image of an iterate grew past the configured length cap.  The work is
/// abandoned; `reached_power()` is the last power that was fully computed.
class CapExceededError : public Error {
 public:
  CapExceededError(const std::string& what, int reached_power, std::size_t cap)
      : Error(what), reached_power_(reached_power), cap_(cap) {}
  int reached_power() const { return reached_power_; }
  std::size_t length_cap() const { return cap_; }

 private:
  int reached_power_ = 0;
  std::size_t cap_ = 0;
};

/// An enumeration would emit more items than the caller's budget allows.
/// The exact required count is reported in the message.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

/// A bound that is only certified on S_l was requested for a map outside S_l.
class NotInSlError : public Error {
 public:
  NotInSlError(const std::string& what, int level) : Error(what), level_(level) {}
  int level() const { return level_; }

 private:
  int level_ = 1;
};

/// Power iteration ran out of budget; the Collatz-Wielandt bracket that was
/// reached is attached so callers can still use the partial answer.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double lower, double upper)
      : Error(what), lower_(lower), upper_(upper) {}
  double lower() const { return lower_; }
  double upper() const { return upper_; }

 private:
  double lower_ = 0.0;
  double upper_ = 0.0;
};

}  // namespace wagner
