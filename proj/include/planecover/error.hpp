#pragma once

#include <stdexcept>
#include <string>

namespace planecover {

// Failure taxonomy for the whole pipeline. The CLI maps Config to exit
// code 2 and everything else to exit code 1.
enum class ErrorKind {
  Config,                 // bad user input: malformed config, degenerate curves
  Dimension,              // mismatched sizes (group rank, matrix shapes)
  UnsupportedField,       // value outside the iterated square-root towers
  UnsupportedSingularity, // branch geometry other than A1 / A3
  CheckFailed,            // a pipeline check found the construction falsified
  Internal,               // broken invariant inside the library
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

inline void require(bool cond, ErrorKind kind, const std::string& msg) {
  if (!cond) fail(kind, msg);
}

}  // namespace planecover
