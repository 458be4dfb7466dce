#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ltkg {

// Base for every error thrown by the library. `kind()` carries the stable
// machine-readable name used in reports and CLI diagnostics.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define LTKG_DEFINE_ERROR(Name, Kind)                        \
  class Name : public ::ltkg::Error {                        \
   public:                                                   \
    explicit Name(const std::string& what)                   \
        : ::ltkg::Error(Kind, what) {}                       \
  }

LTKG_DEFINE_ERROR(OutOfRangeError, "OutOfRange");
LTKG_DEFINE_ERROR(TransportError, "Transport");
LTKG_DEFINE_ERROR(CassetteMissError, "CassetteMiss");
LTKG_DEFINE_ERROR(AuthError, "Auth");
LTKG_DEFINE_ERROR(MalformedError, "Malformed");
LTKG_DEFINE_ERROR(NoArticleError, "NoArticle");
LTKG_DEFINE_ERROR(EmptySeriesError, "EmptySeries");
LTKG_DEFINE_ERROR(MalformedResultsError, "MalformedResults");
LTKG_DEFINE_ERROR(NoBlocksError, "NoBlocks");
LTKG_DEFINE_ERROR(RoleOrderViolationError, "RoleOrderViolation");
LTKG_DEFINE_ERROR(ParseError, "ParseError");
LTKG_DEFINE_ERROR(DimensionMismatchError, "DimensionMismatch");
LTKG_DEFINE_ERROR(DegenerateDataError, "DegenerateData");
LTKG_DEFINE_ERROR(EmptyReferenceError, "EmptyReference");
LTKG_DEFINE_ERROR(EmptyGoldError, "EmptyGold");
LTKG_DEFINE_ERROR(ConfigError, "Config");
LTKG_DEFINE_ERROR(IoError, "Io");

#undef LTKG_DEFINE_ERROR

}  // namespace ltkg
