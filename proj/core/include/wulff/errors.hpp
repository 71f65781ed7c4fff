#ifndef WULFF_ERRORS_HPP
#define WULFF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wulff {

enum class ErrorCode {
  kDimensionMismatch,
  kInvalidArgument,
  kDegenerate,
  kPolarEmpty,
  kNotAWulffShape,
  kNotHemispherical,
  kNoSeparator,
  kPrecondition,
  kParse,
};

const char* to_string(ErrorCode code);

// All library failures are reported through this type; code() is stable,
// what() carries a human-readable diagnostic.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wulff

#endif  // WULFF_ERRORS_HPP
