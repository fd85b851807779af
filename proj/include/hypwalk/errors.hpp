#pragma once

#include <stdexcept>
#include <string>

namespace hypwalk {

enum class ErrorKind {
  MalformedWord,
  UnsupportedMode,
  ResourceLimit,
  Config,
  InsufficientSamples,
  DegenerateRoot,
  NumericalConsistency,
  NonConvergence,
  SingularWeight,
  LatticeEdge,
  PointAtInfinity,
  InvalidDistance,
  Pole,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

const char* to_string(ErrorKind k);

// process exit code used by the CLI for each error kind
int exit_code(ErrorKind k);

}  // namespace hypwalk
