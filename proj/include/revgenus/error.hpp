#pragma once

#include <stdexcept>
#include <string>

namespace revgenus {

enum class Errc {
  MalformedToken,
  NotAPermutation,
  IndexOutOfRange,
  LengthMismatch,
  NotAFatgraph,
  UnknownVertex,
  MalformedPiMap,
  NotExternal,
  NotNonOrientable,
  NoHurdles,
  SizeTooLarge,
  BadCache,
  InternalInvariant,
};

const char* errc_name(Errc code) noexcept;

// Every failure in the library is reported through this one exception type;
// callers that care about the cause switch on code().
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace revgenus
