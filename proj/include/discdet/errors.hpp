#pragma once

#include <stdexcept>
#include <cstddef>
#include <string>

namespace discdet {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition failure of a caller-supplied argument.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DenominatorVanishes : public Error {
 public:
  using Error::Error;
};

class RecurrenceUnavailable : public Error {
 public:
  using Error::Error;
};

class CharDividesDegree : public Error {
 public:
  using Error::Error;
};

class Singular : public Error {
 public:
  using Error::Error;
};

class NotInB : public Error {
 public:
  using Error::Error;
};

class NotInD : public Error {
 public:
  using Error::Error;
};

class ScaleRefused : public Error {
 public:
  using Error::Error;
};

class IndexTooLarge : public Error {
 public:
  using Error::Error;
};

class NotPermutation : public Error {
 public:
  using Error::Error;
};

class StepViolation : public Error {
 public:
  StepViolation(const std::string& what, std::size_t index) : Error(what), index_(index) {}
  // 1-based position i at which sigma(i+1) - sigma(i) is neither -h nor +k.
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

}  // namespace discdet
