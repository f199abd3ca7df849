#ifndef RTAU_INTEGER_HPP
#define RTAU_INTEGER_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rtau {

using Integer = mpz_class;

Integer parse_integer(const std::string& text);
std::string to_string(const Integer& n);

/// p^e for a small exponent.
Integer ipow(const Integer& base, unsigned long exponent);

/// Nonnegative residue of a modulo m (m > 0).
Integer mod(const Integer& a, const Integer& m);

/// Exponent of the prime p in n; n must be nonzero.
unsigned long valuation_of(const Integer& n, const Integer& p);

bool is_prime(const Integer& n);
Integer next_prime(const Integer& n);  // least prime > n

/// Primes up to bound, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

struct Factorization {
  std::vector<std::pair<Integer, unsigned long>> factors;  // ascending primes
  bool complete = true;  // false if a composite cofactor resisted splitting
};

/// Prime factorization of |n| (n != 0) by trial division and Pollard-Brent.
Factorization factor(const Integer& n);

}  // namespace rtau

#endif  // RTAU_INTEGER_HPP
