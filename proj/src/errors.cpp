#include "rtau/errors.hpp"

namespace rtau {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::zero_denominator: return "ZeroDenominator";
    case Errc::zero_polynomial: return "ZeroPolynomial";
    case Errc::constant_input: return "ConstantInput";
    case Errc::degree_too_large: return "DegreeTooLarge";
    case Errc::non_coprime_moduli: return "NonCoprimeModuli";
    case Errc::valuation_unresolvable: return "ValuationUnresolvable";
    case Errc::infinite_valuation: return "InfiniteValuation";
    case Errc::unknown_component: return "UnknownComponent";
    case Errc::quota_unmet: return "QuotaUnmet";
    case Errc::exhausted_primes: return "ExhaustedPrimes";
    case Errc::no_residue: return "NoResidue";
    case Errc::lefschetz_search_exhausted: return "LefschetzSearchExhausted";
    case Errc::ledger_violation: return "LedgerViolation";
    case Errc::parse_error: return "ParseError";
    case Errc::not_increasing: return "NotIncreasing";
    case Errc::not_in_s: return "NotInS";
    case Errc::precondition: return "PreconditionViolation";
  }
  return "Unknown";
}

}  // namespace rtau
