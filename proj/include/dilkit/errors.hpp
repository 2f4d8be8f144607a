#pragma once

#include <stdexcept>
#include <string>

namespace dilkit {

enum class ErrorCode {
    not_definite,
    out_of_disc,
    orientation_reversing,
    singular,
    unknown_property,
};

const char* to_string(ErrorCode code);

/// Domain error raised when an operation's precondition is violated.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

} // namespace dilkit
