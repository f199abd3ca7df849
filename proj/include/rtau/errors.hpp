#ifndef RTAU_ERRORS_HPP
#define RTAU_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace rtau {

enum class Errc {
  zero_denominator,
  zero_polynomial,
  constant_input,
  degree_too_large,
  non_coprime_moduli,
  valuation_unresolvable,
  infinite_valuation,
  unknown_component,
  quota_unmet,
  exhausted_primes,
  no_residue,
  lefschetz_search_exhausted,
  ledger_violation,
  parse_error,
  not_increasing,
  not_in_s,
  precondition,
};

/// Machine-readable category name, e.g. "DegreeTooLarge".
std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Parse failure with the 0-based offset into the input text.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(Errc::parse_error, what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace rtau

#endif  // RTAU_ERRORS_HPP
