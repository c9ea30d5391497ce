#pragma once

#include <stdexcept>
#include <string>

namespace loggas {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define LOGGAS_DEFINE_ERROR(Name)                                \
  class Name : public Error {                                    \
   public:                                                       \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

LOGGAS_DEFINE_ERROR(DomainError);
LOGGAS_DEFINE_ERROR(SeriesDiverged);
LOGGAS_DEFINE_ERROR(PoleError);
LOGGAS_DEFINE_ERROR(ConfigTooLarge);
LOGGAS_DEFINE_ERROR(MatrixTooLarge);
LOGGAS_DEFINE_ERROR(Unsupported);
LOGGAS_DEFINE_ERROR(TruncationInsufficient);
LOGGAS_DEFINE_ERROR(RootFindFailure);
LOGGAS_DEFINE_ERROR(BranchError);
LOGGAS_DEFINE_ERROR(CoincidentPoints);
LOGGAS_DEFINE_ERROR(SwallowedPoint);
LOGGAS_DEFINE_ERROR(StoppedDomain);
LOGGAS_DEFINE_ERROR(QuadratureUnstable);
LOGGAS_DEFINE_ERROR(CollisionError);
LOGGAS_DEFINE_ERROR(Unresolved);
LOGGAS_DEFINE_ERROR(UsageError);

#undef LOGGAS_DEFINE_ERROR

}  // namespace loggas
