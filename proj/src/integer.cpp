#include "rtau/integer.hpp"

#include <algorithm>

#include "rtau/errors.hpp"

namespace rtau {

Integer parse_integer(const std::string& text) {
  Integer n;
  if (text.empty() || n.set_str(text, 10) != 0) {
    throw Error(Errc::parse_error, "not an integer: '" + text + "'");
  }
  return n;
}

std::string to_string(const Integer& n) { return n.get_str(10); }

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

unsigned long valuation_of(const Integer& n, const Integer& p) {
  Integer q = n;
  return mpz_remove(q.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

Integer next_prime(const Integer& n) {
  Integer r;
  if (n < 2) return 2;
  mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

namespace {

constexpr std::uint64_t kTrialBound = 100000;

// Brent's variant of Pollard rho. Returns a nontrivial factor or 0.
Integer pollard_brent(const Integer& n, unsigned long seed, unsigned long budget) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  Integer y = seed % 1000 + 2, c = seed % 97 + 1, m = 128;
  Integer g = 1, r = 1, q = 1, x, ys;
  unsigned long steps = 0;
  while (g == 1) {
    x = y;
    for (Integer i = 0; i < r; ++i) y = (y * y + c) % n;
    Integer k = 0;
    while (k < r && g == 1) {
      ys = y;
      Integer lim = std::min<Integer>(m, r - k);
      for (Integer i = 0; i < lim; ++i) {
        y = (y * y + c) % n;
        Integer diff = abs(x - y);
        q = (q * diff) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
      steps += lim.get_ui();
      if (steps > budget) return 0;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = (ys * ys + c) % n;
      Integer diff = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g == n ? Integer(0) : g;
}

void split(const Integer& n, std::vector<Integer>& primes, bool& complete) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  for (unsigned long attempt = 0; attempt < 8; ++attempt) {
    Integer d = pollard_brent(n, attempt * 7919 + 3, 2000000);
    if (d != 0) {
      split(d, primes, complete);
      split(n / d, primes, complete);
      return;
    }
  }
  complete = false;
  primes.push_back(n);
}

}  // namespace

Factorization factor(const Integer& n) {
  if (n == 0) throw Error(Errc::precondition, "factor: zero has no factorization");
  Integer m = abs(n);
  Factorization out;
  static const std::vector<std::uint64_t> trial = primes_up_to(kTrialBound);
  for (std::uint64_t p : trial) {
    if (m == 1) break;
    Integer pp = static_cast<unsigned long>(p);
    if (pp * pp > m) break;
    unsigned long e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      m /= pp;
      ++e;
    }
    if (e) out.factors.emplace_back(pp, e);
  }
  if (m > 1) {
    std::vector<Integer> rest;
    split(m, rest, out.complete);
    std::sort(rest.begin(), rest.end());
    for (const Integer& p : rest) {
      if (!out.factors.empty() && out.factors.back().first == p) {
        ++out.factors.back().second;
      } else {
        out.factors.emplace_back(p, 1);
      }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return out;
}

}  // namespace rtau
