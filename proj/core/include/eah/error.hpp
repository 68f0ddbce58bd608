#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eah {

enum class Errc {
  ZeroInput,
  NotPrime,
  NotOddPrime,
  NotOnCurve,
  NotMinimal,
  ZeroX,
  TorsionPoint,
  InfinityPoint,
  NonConvergent,
  DepthExceeded,
  RowValidationFailed,
  NoRationalHalf,
  FactorizationBudgetExceeded,
  InvalidArgument,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the Errc codes so that
/// front ends can map it onto an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace eah
