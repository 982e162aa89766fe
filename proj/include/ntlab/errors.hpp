#pragma once

#include <stdexcept>
#include <string>

namespace ntlab {

// Base for every diagnostic raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// Raised when a certified float cannot be rounded to a unique integer.
class PrecisionError : public Error {
 public:
  PrecisionError(const std::string& what, int extra_bits)
      : Error(what), extra_bits_(extra_bits) {}
  int extra_bits() const { return extra_bits_; }

 private:
  int extra_bits_;
};

// Raised when a brute-force oracle is asked to run beyond its size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class UnsupportedTwist : public Error {
 public:
  using Error::Error;
};

// Raised by p-adic code when the working precision cannot carry a result.
class PadicPrecisionError : public Error {
 public:
  using Error::Error;
};

}  // namespace ntlab
