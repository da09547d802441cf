#pragma once

#include <stdexcept>
#include <string>

namespace ringlab {

/// Base class for every error raised by the library. The CLI maps all of
/// these to exit status 2 (bad input), except where noted.
class RingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "RingError"; }
};

#define RINGLAB_DEFINE_ERROR(Name)                                   \
  class Name : public RingError {                                    \
   public:                                                           \
    using RingError::RingError;                                      \
    const char* kind() const noexcept override { return #Name; }     \
  };

RINGLAB_DEFINE_ERROR(SyntaxError)
RINGLAB_DEFINE_ERROR(DomainError)
RINGLAB_DEFINE_ERROR(RingMismatch)
RINGLAB_DEFINE_ERROR(InfiniteEnumeration)
RINGLAB_DEFINE_ERROR(UnsupportedRing)
RINGLAB_DEFINE_ERROR(NotCoprime)
RINGLAB_DEFINE_ERROR(PreconditionError)
RINGLAB_DEFINE_ERROR(ZeroElement)
RINGLAB_DEFINE_ERROR(NotClean)
RINGLAB_DEFINE_ERROR(NoDecomposition)
RINGLAB_DEFINE_ERROR(ConfigError)

// Raised when a certificate produced by the library fails its own
// re-verification. Indicates a bug, never bad input.
RINGLAB_DEFINE_ERROR(CertificateError)

#undef RINGLAB_DEFINE_ERROR

}  // namespace ringlab
