#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace drinfeld {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define DRINFELD_ERROR(Name)                \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

DRINFELD_ERROR(InvalidArgument);
DRINFELD_ERROR(NotInvertible);
DRINFELD_ERROR(NotSquareFree);
DRINFELD_ERROR(NotPrimitive);
DRINFELD_ERROR(ConductorMismatch);
DRINFELD_ERROR(SignMismatch);
DRINFELD_ERROR(InsufficientDegreeBound);
DRINFELD_ERROR(PrecisionTooSmall);
DRINFELD_ERROR(RingMismatch);
DRINFELD_ERROR(LevelPrime);
DRINFELD_ERROR(Unsupported);
DRINFELD_ERROR(MissingMetadata);
DRINFELD_ERROR(InternalError);

#undef DRINFELD_ERROR

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Raised by descend() when the residual is not killed by the triangular solve.
class NotDescendable : public Error {
 public:
  NotDescendable(const std::string& what, std::size_t index)
      : Error(what + " (first nonzero residual at v^" + std::to_string(index) + ")"),
        index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

}  // namespace drinfeld
