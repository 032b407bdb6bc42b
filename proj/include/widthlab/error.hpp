#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace widthlab {

enum class Errc {
  MalformedLine,
  NonInvolutiveGluing,
  IndexOutOfRange,
  DuplicateFaceAssignment,
  Disconnected,
  InvalidTriangulation,
  MoreThanOneSelfGluedPair,
  NotAPermutation,
  InvalidHost,
  InvalidDecomposition,
  TooLarge,
  NotAdmissible,
  HostDoesNotMatchGraph,
  NotSorted,
  MissingWidths,
  InvalidArgument,
  Io,
  Internal,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map them onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace widthlab
