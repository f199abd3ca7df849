#ifndef RTAU_SRC_FP_POLY_HPP
#define RTAU_SRC_FP_POLY_HPP

#include <vector>

#include <gmpxx.h>

#include "rtau/polyq.hpp"

namespace rtau::detail {

/// Dense polynomial over F_p, low to high, trimmed, coefficients in [0, p).
using FpPoly = std::vector<Integer>;

class PrimeField {
 public:
  explicit PrimeField(Integer p) : p_(std::move(p)) {}
  const Integer& p() const noexcept { return p_; }

  FpPoly reduce(const IntPoly& g) const;
  IntPoly lift_symmetric(const FpPoly& a) const;  // coefficients in (-p/2, p/2]

  FpPoly add(const FpPoly& a, const FpPoly& b) const;
  FpPoly sub(const FpPoly& a, const FpPoly& b) const;
  FpPoly mul(const FpPoly& a, const FpPoly& b) const;
  FpPoly scale(const FpPoly& a, const Integer& c) const;
  FpPoly rem(const FpPoly& a, const FpPoly& m) const;
  FpPoly quo(const FpPoly& a, const FpPoly& m) const;
  FpPoly monic(const FpPoly& a) const;
  FpPoly gcd(FpPoly a, FpPoly b) const;  // monic
  FpPoly powmod(const FpPoly& base, const Integer& e, const FpPoly& m) const;
  FpPoly derivative(const FpPoly& a) const;

  /// Rabin's test; a must have degree >= 1.
  bool irreducible(const FpPoly& a) const;
  bool squarefree(const FpPoly& a) const;

  /// Monic irreducible factors of a squarefree monic polynomial (p odd).
  std::vector<FpPoly> factor_squarefree(const FpPoly& a, gmp_randclass& rng) const;

 private:
  static void trim(FpPoly& a);
  void divmod(const FpPoly& a, const FpPoly& m, FpPoly* q, FpPoly* r) const;
  void equal_degree(const FpPoly& a, unsigned long d, gmp_randclass& rng, std::vector<FpPoly>& out) const;

  Integer p_;
};

inline int deg(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

}  // namespace rtau::detail

#endif  // RTAU_SRC_FP_POLY_HPP
