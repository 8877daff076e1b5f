#pragma once

#include <stdexcept>
#include <string>

namespace tetra {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define TETRA_DEFINE_ERROR(Name)            \
  class Name : public Error {               \
   public:                                  \
    explicit Name(const std::string& what)  \
        : Error(std::string(#Name ": ") + what) {} \
  }

TETRA_DEFINE_ERROR(LoopRejected);
TETRA_DEFINE_ERROR(IndexOutOfRange);
TETRA_DEFINE_ERROR(InvalidParameter);
TETRA_DEFINE_ERROR(ParseError);
TETRA_DEFINE_ERROR(NotSeparating);
TETRA_DEFINE_ERROR(DomainMismatch);
TETRA_DEFINE_ERROR(NotTransitive);
TETRA_DEFINE_ERROR(NotSubgroup);
TETRA_DEFINE_ERROR(BoundExceeded);
TETRA_DEFINE_ERROR(SearchBudgetExceeded);
TETRA_DEFINE_ERROR(NotSimple);
TETRA_DEFINE_ERROR(BadSplit);
TETRA_DEFINE_ERROR(NotBiTransitive);
TETRA_DEFINE_ERROR(NotABlockSystem);
TETRA_DEFINE_ERROR(TransportInconsistent);
TETRA_DEFINE_ERROR(ComponentsNotIsomorphic);
TETRA_DEFINE_ERROR(NotDartTransitive);
TETRA_DEFINE_ERROR(NotAPairing);

#undef TETRA_DEFINE_ERROR

}  // namespace tetra
