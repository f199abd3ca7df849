#include <algorithm>

#include "fp_poly.hpp"
#include "rtau/errors.hpp"
#include "rtau/polyq.hpp"

namespace rtau {

namespace {

using detail::FpPoly;
using detail::PrimeField;

constexpr unsigned long kModularShortcutPrimes = 20;
// Rational-root candidates are enumerated only below this size.
const Integer kRationalRootLimit = Integer(1) << 40;

void divisors_of(const Integer& n, std::vector<Integer>& out) {
  out.assign(1, Integer(1));
  for (const auto& [p, e] : factor(n).factors) {
    const std::size_t base = out.size();
    Integer pk = 1;
    for (unsigned long k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
}

bool has_rational_root(const IntPoly& g) {
  const Integer& a0 = g.coeffs().front();
  const Integer& lc = g.leading();
  if (abs(a0) > kRationalRootLimit || abs(lc) > kRationalRootLimit) return false;
  std::vector<Integer> us, vs;
  divisors_of(a0, us);
  divisors_of(lc, vs);
  const std::size_t n = g.coeffs().size() - 1;
  for (const Integer& u0 : us) {
    for (const Integer& v : vs) {
      Integer gg;
      mpz_gcd(gg.get_mpz_t(), u0.get_mpz_t(), v.get_mpz_t());
      if (gg != 1) continue;
      for (int sign : {1, -1}) {
        Integer u = sign * u0;
        // v^n g(u/v) = sum a_i u^i v^(n-i)
        Integer acc = 0, upow = 1;
        for (std::size_t i = 0; i <= n; ++i) {
          acc += g.coeffs()[i] * upow * ipow(v, n - i);
          upow *= u;
        }
        if (acc == 0) return true;
      }
    }
  }
  return false;
}

bool eisenstein_somewhere(const IntPoly& g, const std::vector<Integer>& hints) {
  for (const Integer& p : hints) {
    if (eisenstein_at(g, p)) return true;
  }
  Integer common = 0;
  auto c = g.coeffs();
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    mpz_gcd(common.get_mpz_t(), common.get_mpz_t(), c[i].get_mpz_t());
  }
  if (common <= 1) return false;
  for (const auto& [p, e] : factor(common).factors) {
    (void)e;
    if (eisenstein_at(g, p)) return true;
  }
  return false;
}

bool irreducible_mod_small_prime(const IntPoly& g) {
  unsigned long tried = 0;
  for (std::uint64_t q : primes_up_to(200)) {
    Integer p = static_cast<unsigned long>(q);
    if (mpz_divisible_p(g.leading().get_mpz_t(), p.get_mpz_t())) continue;
    PrimeField field(p);
    if (field.irreducible(field.reduce(g))) return true;
    if (++tried == kModularShortcutPrimes) break;
  }
  return false;
}

}  // namespace

bool irreducible_by_recombination(const IntPoly& g) {
  if (g.is_constant()) throw Error(Errc::constant_input, "irreducibility of a constant");
  if (content(g) != 1) return false;
  const int n = g.degree();
  if (n == 1) return true;
  if (gcd_over_Q(g, derivative(g)).degree() > 0) return false;

  // Any factor h of lc*g scaled to leading coefficient lc has coefficients
  // bounded by |lc| 2^n ||g||_2.
  Integer norm2 = 0;
  for (const Integer& a : g.coeffs()) norm2 += a * a;
  Integer root = sqrt(norm2) + 1;
  const Integer& lc = g.leading();
  Integer bound = abs(lc) * (Integer(1) << n) * root;
  Integer p = next_prime(2 * bound + 1);
  for (;;) {
    if (!mpz_divisible_p(lc.get_mpz_t(), p.get_mpz_t())) {
      PrimeField field(p);
      if (field.squarefree(field.reduce(g))) break;
    }
    p = next_prime(p);
  }
  PrimeField field(p);
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0x5eed);
  std::vector<FpPoly> factors = field.factor_squarefree(field.reduce(g), rng);
  const std::size_t r = factors.size();
  if (r == 1) return true;

  // subsets of size <= r/2 suffice: a factor and its cofactor split the set
  for (std::size_t size = 1; 2 * size <= r; ++size) {
    std::vector<bool> mask(r, false);
    std::fill(mask.begin(), mask.begin() + static_cast<long>(size), true);
    do {
      FpPoly prod{mod(lc, p)};
      for (std::size_t i = 0; i < r; ++i) {
        if (mask[i]) prod = field.mul(prod, factors[i]);
      }
      IntPoly candidate = content_primitive(field.lift_symmetric(prod)).primitive;
      if (candidate.degree() > 0 && candidate.degree() < n && exact_quotient(g, candidate)) {
        return false;
      }
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  return true;
}

bool irreducible_over_Z(const IntPoly& g, const IrreducibilityOptions& options) {
  if (g.is_constant()) throw Error(Errc::constant_input, "irreducibility of a constant");
  if (content(g) != 1) return false;
  const int n = g.degree();
  if (n == 1) return true;
  if (g.coeffs().front() == 0) return false;  // x divides g
  if (has_rational_root(g)) return false;
  if (eisenstein_somewhere(g, options.hint_primes)) return true;
  if (irreducible_mod_small_prime(g)) return true;
  if (n > options.max_degree) {
    throw Error(Errc::degree_too_large, "degree " + std::to_string(n) + " exceeds the cap of " +
                                            std::to_string(options.max_degree));
  }
  return irreducible_by_recombination(g);
}

}  // namespace rtau
