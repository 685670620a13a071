#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wloc {

enum class ErrorCode {
  DegenerateForm,
  NonSymmetric,
  UnsupportedField,
  FieldMismatch,
  ZeroInput,
  NonCanonicalInput,
  Undecided,
  UnknownGenerator,
  PresentationMismatch,
  NonHomogeneousDenominator,
  NonPositiveExponent,
  UnsupportedIrrep,
  NonInvertibleNormalEuler,
  UnsupportedResidueField,
  InconsistentField,
  BadDimension,
  BadParameters,
  SyntaxError,
  Unsupported,
};

std::string_view error_name(ErrorCode code);

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parser failures also report the byte offset into the input text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : Error(ErrorCode::SyntaxError, what + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace wloc
