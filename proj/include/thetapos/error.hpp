#pragma once

#include <stdexcept>
#include <string>

namespace thetapos {

/// Failure categories shared by every module and mirrored by the C status codes.
enum class ErrorKind {
  Parse,
  Dimension,
  Index,
  Domain,
  Singular,
  Transversality,
  Decomposition,
  Limit,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace thetapos
