#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qei {

enum class ErrorCode {
  InvalidInput,
  DegenerateInput,
  NearNullCovector,
  ZeroMomentum,
  PolesMerged,
  NotPositive,
  OnExtraordinaryCone,
  NotSubluminal,
  NotTimelike,
  GridTooCoarse,
  NewtonDiverged,
  NonConvergent,
};

std::string_view to_string(ErrorCode code);

// payload carries eigenvalues (NotPositive) or the last iterate (NewtonDiverged)
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what, std::vector<double> payload = {});

  ErrorCode code() const noexcept { return code_; }
  const std::vector<double>& payload() const noexcept { return payload_; }

private:
  ErrorCode code_;
  std::vector<double> payload_;
};

}  // namespace qei
