#pragma once

#include <stdexcept>
#include <string>

namespace feuerbach {

enum class ErrorCode {
  Parse,
  ZeroDenominator,
  Overflow,
  NonPositiveSide,
  DegenerateTriangle,
  CoincidentCircles,
  IllConditioned,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

// Every failure raised by the kernel carries a code so the C layer can map it
// to a status value without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace feuerbach
