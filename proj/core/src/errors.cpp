#include "chebsqrt/errors.hpp"

namespace chebsqrt {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::PoleAtPoint: return "PoleAtPoint";
    case Errc::NotAnalyticAtZero: return "NotAnalyticAtZero";
    case Errc::BadRootOrder: return "BadRootOrder";
    case Errc::DegenerateStep: return "DegenerateStep";
    case Errc::BadIndex: return "BadIndex";
    case Errc::NearPole: return "NearPole";
    case Errc::OnBranchCut: return "OnBranchCut";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace chebsqrt
