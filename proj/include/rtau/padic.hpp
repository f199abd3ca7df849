#ifndef RTAU_PADIC_HPP
#define RTAU_PADIC_HPP

#include <span>
#include <variant>
#include <vector>

#include "rtau/integer.hpp"
#include "rtau/polyq.hpp"

namespace rtau {

/// One coordinate tau_p of a profinite integer: either an exact integer or a
/// residue known modulo p^precision.
class PadicComponent {
 public:
  struct Exact {
    Integer value;
  };
  struct Approx {
    int precision;
    Integer residue;  // in [0, p^precision)
  };

  static PadicComponent exact(Integer p, Integer value);
  /// Throws Precondition when precision < 1 or the residue is out of range.
  static PadicComponent approx(Integer p, int precision, Integer residue);

  const Integer& prime() const noexcept { return p_; }
  bool is_exact() const noexcept { return std::holds_alternative<Exact>(mode_); }
  const Exact& as_exact() const { return std::get<Exact>(mode_); }
  const Approx& as_approx() const { return std::get<Approx>(mode_); }

  /// p^precision; only for Approx.
  Integer modulus() const;
  /// tau_p mod p.
  Integer residue_mod_p() const;

  friend bool operator==(const PadicComponent& a, const PadicComponent& b);

 private:
  PadicComponent(Integer p, std::variant<Exact, Approx> mode) : p_(std::move(p)), mode_(std::move(mode)) {}
  Integer p_;
  std::variant<Exact, Approx> mode_;
};

struct ValuationResult {
  enum class Kind { determined, infinite, need_more_precision };
  Kind kind;
  unsigned long value = 0;  // e when determined, minimum new precision otherwise

  static ValuationResult determined(unsigned long e) { return {Kind::determined, e}; }
  static ValuationResult infinite() { return {Kind::infinite, 0}; }
  static ValuationResult need_more(unsigned long precision) { return {Kind::need_more_precision, precision}; }
  bool is_determined() const noexcept { return kind == Kind::determined; }
  friend bool operator==(const ValuationResult&, const ValuationResult&) = default;
};

ValuationResult valuation(const IntPoly& g, const PadicComponent& c);

/// g(tau_p) in Z_p^x; decided at precision 1.
bool is_unit_value(const IntPoly& g, const PadicComponent& c);

struct RefineOptions {
  int depth_cap = 64;             // digits searched beyond the target precision
  unsigned long node_budget = 1000000;
  unsigned long digit_scan_limit = 100000;  // digits examined per level for large p
};

/// Extends an Approx component to precision >= target so that every g in
/// avoid has a determined valuation. Digits are chosen smallest-first, with
/// backtracking out of multiple-root paths. Throws ValuationUnresolvable when
/// the search exceeds its caps.
PadicComponent refine(const PadicComponent& c, std::span<const IntPoly> avoid, int target,
                      const RefineOptions& options = {});

struct Congruence {
  Integer residue;
  Integer modulus;
};

struct CrtSolution {
  Integer solution;  // in [0, modulus)
  Integer modulus;
};

/// Throws NonCoprimeModuli when two moduli share a factor.
CrtSolution crt_solve(std::span<const Congruence> system);

}  // namespace rtau

#endif  // RTAU_PADIC_HPP
