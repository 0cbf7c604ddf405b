#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tal {

/// Base of every error raised by the library. `code()` is the stable
/// machine-readable name used in CLI and HTTP error bodies.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

#define TAL_DEFINE_ERROR(Name)                                                \
  class Name : public Error {                                                 \
  public:                                                                     \
    explicit Name(const std::string& message) : Error(#Name, message) {}      \
  }

TAL_DEFINE_ERROR(UnknownVertex);
TAL_DEFINE_ERROR(InvariantViolation);
TAL_DEFINE_ERROR(ParseError);
TAL_DEFINE_ERROR(SizeLimit);
TAL_DEFINE_ERROR(InvalidParameters);
TAL_DEFINE_ERROR(NonTermination);
TAL_DEFINE_ERROR(InfiniteDimensional);
TAL_DEFINE_ERROR(ConflictingConstraints);
TAL_DEFINE_ERROR(PairingFailure);
TAL_DEFINE_ERROR(CapExceeded);
TAL_DEFINE_ERROR(AssertionFailure);

#undef TAL_DEFINE_ERROR

/// Why a quiver failed membership in the mutation class of a non-oriented cycle.
enum class NotInClassReason {
  NoNonOrientedCycle,
  MultipleNonOrientedCycles,
  BadCycleIncidence,
  BranchNotTypeA,
  BadApexDegree,
};

std::string_view to_string(NotInClassReason reason) noexcept;

class NotInClass : public Error {
public:
  NotInClass(NotInClassReason reason, const std::string& detail)
      : Error("NotInClass", std::string(to_string(reason)) + ": " + detail),
        reason_(reason) {}

  NotInClassReason reason() const noexcept { return reason_; }

private:
  NotInClassReason reason_;
};

} // namespace tal
