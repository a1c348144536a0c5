#pragma once

#include <stdexcept>
#include <string>

namespace revnf {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define REVNF_DEFINE_ERROR(Name)              \
  class Name : public Error {                 \
   public:                                    \
    using Error::Error;                       \
  }

REVNF_DEFINE_ERROR(ParseError);
REVNF_DEFINE_ERROR(IncompatibleMatrix);
REVNF_DEFINE_ERROR(DimensionError);
REVNF_DEFINE_ERROR(OrderExceeded);
REVNF_DEFINE_ERROR(SignInconsistency);
REVNF_DEFINE_ERROR(ConditionViolated);
REVNF_DEFINE_ERROR(NotAHomomorphism);
REVNF_DEFINE_ERROR(UnsupportedCase);
REVNF_DEFINE_ERROR(ResourceLimit);
REVNF_DEFINE_ERROR(UncertifiedInput);
REVNF_DEFINE_ERROR(ConfigError);
REVNF_DEFINE_ERROR(CertificationFailure);

#undef REVNF_DEFINE_ERROR

}  // namespace revnf
