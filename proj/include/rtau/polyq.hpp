#ifndef RTAU_POLYQ_HPP
#define RTAU_POLYQ_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "rtau/integer.hpp"

namespace rtau {

/// Polynomial over Z, coefficients stored low to high (a_0 first).
/// The zero polynomial is the empty sequence and has degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly x();
  static IntPoly monomial(const Integer& c, std::size_t power);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  /// a_i, or zero past the degree.
  Integer coeff(std::size_t i) const;
  const Integer& leading() const;
  std::span<const Integer> coeffs() const noexcept { return coeffs_; }

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const Integer& c, const IntPoly& a);

/// Lexicographic order on (degree, a_0, a_1, ...); only for containers.
bool lex_less(const IntPoly& a, const IntPoly& b);

IntPoly derivative(const IntPoly& g);
Integer evaluate(const IntPoly& g, const Integer& at);
Integer height(const IntPoly& g);  // max |a_i|

/// g(r) mod modulus, in [0, modulus).
Integer eval_mod(const IntPoly& g, const Integer& r, const Integer& modulus);

/// Positive gcd of the coefficients; g must be nonzero.
Integer content(const IntPoly& g);

struct ContentSplit {
  Integer content;
  IntPoly primitive;
};

/// g = content * primitive with content > 0; the sign stays on the primitive part.
ContentSplit content_primitive(const IntPoly& g);

/// a / b when b divides a in Z[x].
std::optional<IntPoly> exact_quotient(const IntPoly& a, const IntPoly& b);

/// gcd over Q, returned primitive with positive leading coefficient.
IntPoly gcd_over_Q(IntPoly a, IntPoly b);

bool eisenstein_at(const IntPoly& g, const Integer& p);

struct IrreducibilityOptions {
  /// Degree cap for the complete factor-and-recombine route. Shortcut
  /// certificates (Eisenstein, irreducible mod p) are accepted at any degree.
  int max_degree = 12;
  /// Extra primes at which Eisenstein is tried first, e.g. recorded witnesses.
  std::vector<Integer> hint_primes;
};

/// Irreducibility in Z[x]: content 1 and irreducible over Q.
/// Throws ConstantInput for constants, DegreeTooLarge when only the complete
/// route could decide and the degree exceeds the cap.
bool irreducible_over_Z(const IntPoly& g, const IrreducibilityOptions& options = {});

/// The complete route alone: factor modulo a prime above the coefficient
/// bound and test every recombination of the modular factors.
bool irreducible_by_recombination(const IntPoly& g);

/// Membership in I: non-constant, irreducible over Z, positive leading coefficient.
bool in_I(const IntPoly& g);

/// The i-th element of I under the order (degree + height, degree, lex on
/// (a_0, ..., a_d)). Prefix-stable; thread-safe.
IntPoly enumerate_I(std::size_t i);

/// Element of Q[x] in canonical form num/den: den >= 1, gcd(content(num), den) = 1.
class RTauElem {
 public:
  RTauElem() : den_(1) {}
  /// Throws ZeroDenominator when den == 0.
  RTauElem(IntPoly num, Integer den);
  explicit RTauElem(IntPoly num) : RTauElem(std::move(num), 1) {}

  const IntPoly& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }
  bool is_constant() const noexcept { return num_.is_constant(); }
  int degree() const noexcept { return num_.degree(); }

  friend bool operator==(const RTauElem& a, const RTauElem& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  IntPoly num_;
  Integer den_;
};

RTauElem canonicalize(IntPoly num, const Integer& den);

RTauElem operator+(const RTauElem& a, const RTauElem& b);
RTauElem operator-(const RTauElem& a, const RTauElem& b);
RTauElem operator*(const RTauElem& a, const RTauElem& b);

enum class OrderResult { less, equal, greater };

/// f < g iff g - f has positive leading coefficient.
OrderResult compare(const RTauElem& f, const RTauElem& g);

/// Canonical text, e.g. "(x^3 - 2)/2" or "3x^2 - x + 1".
std::string format(const IntPoly& g);
std::string format(const RTauElem& f);

std::ostream& operator<<(std::ostream& os, const IntPoly& g);
std::ostream& operator<<(std::ostream& os, const RTauElem& f);

}  // namespace rtau

#endif  // RTAU_POLYQ_HPP
