#pragma once

#include <stdexcept>
#include <string>

namespace bicheck {

struct Error : std::runtime_error {
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind(std::move(kind)) {}
  std::string kind;
};

#define BICHECK_ERROR(Name)                              \
  struct Name : Error {                                  \
    explicit Name(const std::string& msg) : Error(#Name, msg) {} \
  }

BICHECK_ERROR(InvalidValue);
BICHECK_ERROR(BoundaryMismatch);
BICHECK_ERROR(UnknownGenerator);
BICHECK_ERROR(WordMismatch);
BICHECK_ERROR(CodomainMismatch);
BICHECK_ERROR(NotInvertible);
BICHECK_ERROR(MissingComponent);
BICHECK_ERROR(PrerequisiteFailed);
BICHECK_ERROR(ConfigError);
BICHECK_ERROR(IoError);

#undef BICHECK_ERROR

}  // namespace bicheck
