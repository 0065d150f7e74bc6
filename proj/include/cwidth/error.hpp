#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cwidth {

enum class ErrorCode {
  MismatchedGeometry,
  NonUnitTangent,
  CoincidentPoints,
  AntipodalPoints,
  DomainError,
  ProjectionPole,
  ConcentricCircles,
  DifferentIdealPoints,
  NestedViolation,
  EmptyBody,
  EmptyIntersection,
  DegenerateIntersection,
  DiameterExceeded,
  NonConvergence,
  CertificationFailure,
  DegenerateTriangle,
  EndpointOffCircle,
  EtaTooLarge,
  ProjectionMismatch,
  InvalidFile,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace cwidth
