#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chebsqrt {

/// Failure categories raised by the library. Every throw site uses exactly one of these.
enum class Errc {
  ZeroDenominator,
  PoleAtPoint,
  NotAnalyticAtZero,
  BadRootOrder,
  DegenerateStep,
  BadIndex,
  NearPole,
  OnBranchCut,
  CapExceeded,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace chebsqrt
