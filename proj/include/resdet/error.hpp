#pragma once

#include <stdexcept>
#include <string>

namespace resdet {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violations on user-supplied values (composite modulus,
// k not dividing p-1, non-palindromic tuple, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A denominator vanished mod p while building a matrix of inverses.
class ZeroDenominator : public Error {
 public:
  using Error::Error;
};

}  // namespace resdet
