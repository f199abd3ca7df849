#include "fp_poly.hpp"

#include "rtau/errors.hpp"

namespace rtau::detail {

void PrimeField::trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly PrimeField::reduce(const IntPoly& g) const {
  FpPoly out;
  out.reserve(g.coeffs().size());
  for (const Integer& c : g.coeffs()) out.push_back(mod(c, p_));
  trim(out);
  return out;
}

IntPoly PrimeField::lift_symmetric(const FpPoly& a) const {
  Integer half = p_ / 2;
  std::vector<Integer> v(a);
  for (Integer& c : v) {
    if (c > half) c -= p_;
  }
  return IntPoly(std::move(v));
}

FpPoly PrimeField::add(const FpPoly& a, const FpPoly& b) const {
  FpPoly r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
    if (r[i] >= p_) r[i] -= p_;
  }
  trim(r);
  return r;
}

FpPoly PrimeField::sub(const FpPoly& a, const FpPoly& b) const {
  FpPoly r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
    if (r[i] < 0) r[i] += p_;
  }
  trim(r);
  return r;
}

FpPoly PrimeField::mul(const FpPoly& a, const FpPoly& b) const {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  for (Integer& c : r) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), p_.get_mpz_t());
  trim(r);
  return r;
}

FpPoly PrimeField::scale(const FpPoly& a, const Integer& c) const {
  FpPoly r(a);
  for (Integer& x : r) x = mod(x * c, p_);
  trim(r);
  return r;
}

void PrimeField::divmod(const FpPoly& a, const FpPoly& m, FpPoly* q, FpPoly* r) const {
  if (m.empty()) throw Error(Errc::zero_polynomial, "division by zero polynomial mod p");
  FpPoly rem(a);
  Integer inv;
  mpz_invert(inv.get_mpz_t(), m.back().get_mpz_t(), p_.get_mpz_t());
  const std::size_t dm = m.size() - 1;
  FpPoly quot(rem.size() > dm ? rem.size() - dm : 0, Integer(0));
  while (!rem.empty() && rem.size() > dm) {
    std::size_t shift = rem.size() - 1 - dm;
    Integer c = mod(rem.back() * inv, p_);
    quot[shift] = c;
    for (std::size_t j = 0; j <= dm; ++j) {
      rem[shift + j] -= c * m[j];
      mpz_mod(rem[shift + j].get_mpz_t(), rem[shift + j].get_mpz_t(), p_.get_mpz_t());
    }
    trim(rem);
  }
  if (q) {
    trim(quot);
    *q = std::move(quot);
  }
  if (r) *r = std::move(rem);
}

FpPoly PrimeField::rem(const FpPoly& a, const FpPoly& m) const {
  FpPoly r;
  divmod(a, m, nullptr, &r);
  return r;
}

FpPoly PrimeField::quo(const FpPoly& a, const FpPoly& m) const {
  FpPoly q;
  divmod(a, m, &q, nullptr);
  return q;
}

FpPoly PrimeField::monic(const FpPoly& a) const {
  if (a.empty()) return a;
  Integer inv;
  mpz_invert(inv.get_mpz_t(), a.back().get_mpz_t(), p_.get_mpz_t());
  return scale(a, inv);
}

FpPoly PrimeField::gcd(FpPoly a, FpPoly b) const {
  while (!b.empty()) {
    FpPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

FpPoly PrimeField::powmod(const FpPoly& base, const Integer& e, const FpPoly& m) const {
  FpPoly result{Integer(1)};
  result = rem(result, m);
  FpPoly b = rem(base, m);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result), m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b), m);
  }
  return result;
}

FpPoly PrimeField::derivative(const FpPoly& a) const {
  if (a.size() <= 1) return {};
  FpPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mod(a[i] * static_cast<unsigned long>(i), p_);
  trim(r);
  return r;
}

bool PrimeField::squarefree(const FpPoly& a) const {
  FpPoly d = derivative(a);
  if (d.empty()) return false;
  return deg(gcd(a, d)) == 0;
}

bool PrimeField::irreducible(const FpPoly& a) const {
  const int n = deg(a);
  if (n < 1) return false;
  if (n == 1) return true;
  const FpPoly x{Integer(0), Integer(1)};
  // x^(p^k) mod a for k = 1..n
  std::vector<FpPoly> frob(n + 1);
  frob[0] = rem(x, a);
  for (int k = 1; k <= n; ++k) frob[k] = powmod(frob[k - 1], p_, a);
  if (sub(frob[n], frob[0]).size() != 0) return false;
  for (auto [q, e] : factor(Integer(n)).factors) {
    (void)e;
    int k = n / static_cast<int>(q.get_si());
    if (deg(gcd(a, sub(frob[k], x))) != 0) return false;
  }
  return true;
}

void PrimeField::equal_degree(const FpPoly& a, unsigned long d, gmp_randclass& rng,
                              std::vector<FpPoly>& out) const {
  if (static_cast<unsigned long>(deg(a)) == d) {
    out.push_back(a);
    return;
  }
  Integer e = (ipow(p_, d) - 1) / 2;
  for (;;) {
    FpPoly r(static_cast<std::size_t>(deg(a)));
    for (Integer& c : r) c = rng.get_z_range(p_);
    trim(r);
    if (deg(r) < 1) continue;
    FpPoly b = sub(powmod(r, e, a), FpPoly{Integer(1)});
    FpPoly g = gcd(a, b);
    if (deg(g) > 0 && deg(g) < deg(a)) {
      equal_degree(g, d, rng, out);
      equal_degree(monic(quo(a, g)), d, rng, out);
      return;
    }
  }
}

std::vector<FpPoly> PrimeField::factor_squarefree(const FpPoly& a, gmp_randclass& rng) const {
  std::vector<FpPoly> out;
  const FpPoly x{Integer(0), Integer(1)};
  FpPoly rest = monic(a);
  FpPoly h = rem(x, rest);
  for (unsigned long i = 1; deg(rest) >= static_cast<int>(2 * i); ++i) {
    h = powmod(h, p_, rest);
    FpPoly g = gcd(rest, sub(h, x));
    if (deg(g) > 0) {
      equal_degree(g, i, rng, out);
      rest = monic(quo(rest, g));
      h = rem(h, rest);
    }
  }
  if (deg(rest) > 0) out.push_back(rest);
  return out;
}

}  // namespace rtau::detail
