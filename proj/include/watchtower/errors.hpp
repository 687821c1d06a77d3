#ifndef WATCHTOWER_ERRORS_HPP
#define WATCHTOWER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace watchtower {

enum class ErrorCode {
  CoincidentPoints,
  ParallelLines,
  VerticalLine,
  NonMonotoneX,
  IntervalInverted,
  TooFewVertices,
  ApexOutsideStrip,
  OutOfRange,
  InvalidChannel,
  EndpointOutsideChannel,
  DegeneratePolyline,
  OutsideDomain,
  InvalidMesh,
  InvalidTower,
  BudgetExceeded,
  NonPositiveEpsilon,
  ParseError,
  IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

} // namespace watchtower

#endif
