#pragma once

#include <stdexcept>
#include <string>

namespace sqz {

enum class ErrorCode {
  invalid_argument,
  dimension_mismatch,
  domain,
  numerical,
};

// Single exception type for every failure in the core; the C layer maps
// code() onto sqz_status values and the CLI onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline void require(bool ok, ErrorCode code, const std::string& message) {
  if (!ok) throw Error(code, message);
}

}  // namespace sqz
