#include "eah/error.hpp"

namespace eah {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::NotPrime: return "NotPrime";
    case Errc::NotOddPrime: return "NotOddPrime";
    case Errc::NotOnCurve: return "NotOnCurve";
    case Errc::NotMinimal: return "NotMinimal";
    case Errc::ZeroX: return "ZeroX";
    case Errc::TorsionPoint: return "TorsionPoint";
    case Errc::InfinityPoint: return "InfinityPoint";
    case Errc::NonConvergent: return "NonConvergent";
    case Errc::DepthExceeded: return "DepthExceeded";
    case Errc::RowValidationFailed: return "RowValidationFailed";
    case Errc::NoRationalHalf: return "NoRationalHalf";
    case Errc::FactorizationBudgetExceeded: return "FactorizationBudgetExceeded";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace eah
