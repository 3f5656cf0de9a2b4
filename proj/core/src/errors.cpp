#include "qei/errors.hpp"

namespace qei {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::NearNullCovector: return "NearNullCovector";
    case ErrorCode::ZeroMomentum: return "ZeroMomentum";
    case ErrorCode::PolesMerged: return "PolesMerged";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::OnExtraordinaryCone: return "OnExtraordinaryCone";
    case ErrorCode::NotSubluminal: return "NotSubluminal";
    case ErrorCode::NotTimelike: return "NotTimelike";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::NewtonDiverged: return "NewtonDiverged";
    case ErrorCode::NonConvergent: return "NonConvergent";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what, std::vector<double> payload)
    : std::runtime_error(std::string(to_string(code)) + ": " + what),
      code_(code),
      payload_(std::move(payload)) {}

}  // namespace qei
