#include "rtau/polyq.hpp"

#include <algorithm>
#include <sstream>

#include "rtau/errors.hpp"

namespace rtau {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::x() { return IntPoly{0, 1}; }

IntPoly IntPoly::monomial(const Integer& c, std::size_t power) {
  std::vector<Integer> v(power + 1, Integer(0));
  v[power] = c;
  return IntPoly(std::move(v));
}

Integer IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

const Integer& IntPoly::leading() const {
  if (coeffs_.empty()) throw Error(Errc::zero_polynomial, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<Integer> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = a.coeff(i) + b.coeff(i);
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a) {
  std::vector<Integer> v(a.coeffs().begin(), a.coeffs().end());
  for (Integer& c : v) c = -c;
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  auto ac = a.coeffs(), bc = b.coeffs();
  std::vector<Integer> v(ac.size() + bc.size() - 1, Integer(0));
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) v[i + j] += ac[i] * bc[j];
  }
  return IntPoly(std::move(v));
}

IntPoly operator*(const Integer& c, const IntPoly& a) {
  std::vector<Integer> v(a.coeffs().begin(), a.coeffs().end());
  for (Integer& x : v) x *= c;
  return IntPoly(std::move(v));
}

bool lex_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  auto ac = a.coeffs(), bc = b.coeffs();
  return std::lexicographical_compare(ac.begin(), ac.end(), bc.begin(), bc.end());
}

IntPoly derivative(const IntPoly& g) {
  if (g.degree() < 1) return {};
  std::vector<Integer> v(g.coeffs().size() - 1);
  for (std::size_t i = 1; i < g.coeffs().size(); ++i) v[i - 1] = g.coeffs()[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(v));
}

Integer evaluate(const IntPoly& g, const Integer& at) {
  Integer acc = 0;
  auto c = g.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * at + c[i];
  return acc;
}

Integer height(const IntPoly& g) {
  Integer h = 0;
  for (const Integer& c : g.coeffs()) h = std::max<Integer>(h, abs(c));
  return h;
}

Integer eval_mod(const IntPoly& g, const Integer& r, const Integer& modulus) {
  Integer acc = 0;
  auto c = g.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * r + c[i];
    mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), modulus.get_mpz_t());
  }
  return acc;
}

Integer content(const IntPoly& g) {
  if (g.is_zero()) throw Error(Errc::zero_polynomial, "content of zero polynomial");
  Integer c = 0;
  for (const Integer& a : g.coeffs()) {
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), a.get_mpz_t());
    if (c == 1) break;
  }
  return c;
}

ContentSplit content_primitive(const IntPoly& g) {
  Integer c = content(g);
  std::vector<Integer> v(g.coeffs().begin(), g.coeffs().end());
  for (Integer& a : v) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
  return {c, IntPoly(std::move(v))};
}

std::optional<IntPoly> exact_quotient(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(Errc::zero_polynomial, "division by zero polynomial");
  if (a.is_zero()) return IntPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Integer> rem(a.coeffs().begin(), a.coeffs().end());
  auto bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<Integer> q(rem.size() - db);
  for (std::size_t i = q.size(); i-- > 0;) {
    const Integer& top = rem[i + db];
    if (!mpz_divisible_p(top.get_mpz_t(), bc[db].get_mpz_t())) return std::nullopt;
    q[i] = top / bc[db];
    for (std::size_t j = 0; j <= db; ++j) rem[i + j] -= q[i] * bc[j];
  }
  for (const Integer& r : rem) {
    if (r != 0) return std::nullopt;
  }
  return IntPoly(std::move(q));
}

namespace {

// Pseudo-remainder of a by b (deg a >= deg b).
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
  auto bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const Integer& lb = bc[db];
  while (r.size() > db && !r.empty()) {
    Integer top = r.back();
    std::size_t shift = r.size() - 1 - db;
    for (Integer& c : r) c *= lb;
    for (std::size_t j = 0; j <= db; ++j) r[shift + j] -= top * bc[j];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return IntPoly(std::move(r));
}

IntPoly normalized_primitive(const IntPoly& g) {
  IntPoly p = content_primitive(g).primitive;
  return p.leading() < 0 ? -p : p;
}

}  // namespace

IntPoly gcd_over_Q(IntPoly a, IntPoly b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return normalized_primitive(b);
  if (b.is_zero()) return normalized_primitive(a);
  a = normalized_primitive(a);
  b = normalized_primitive(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.is_zero() ? IntPoly{} : normalized_primitive(r);
  }
  return a;
}

bool eisenstein_at(const IntPoly& g, const Integer& p) {
  if (g.is_constant()) return false;
  auto c = g.coeffs();
  if (mpz_divisible_p(c.back().get_mpz_t(), p.get_mpz_t())) return false;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    if (!mpz_divisible_p(c[i].get_mpz_t(), p.get_mpz_t())) return false;
  }
  Integer p2 = p * p;
  return !mpz_divisible_p(c[0].get_mpz_t(), p2.get_mpz_t());
}

bool in_I(const IntPoly& g) {
  return !g.is_constant() && g.leading() > 0 && irreducible_over_Z(g);
}

RTauElem::RTauElem(IntPoly num, Integer den) {
  if (den == 0) throw Error(Errc::zero_denominator, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num.is_zero()) {
    num_ = {};
    den_ = 1;
    return;
  }
  Integer g = content(num);
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den.get_mpz_t());
  if (g != 1) {
    std::vector<Integer> v(num.coeffs().begin(), num.coeffs().end());
    for (Integer& a : v) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
    num = IntPoly(std::move(v));
    mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

RTauElem canonicalize(IntPoly num, const Integer& den) { return RTauElem(std::move(num), den); }

RTauElem operator+(const RTauElem& a, const RTauElem& b) {
  return RTauElem(b.den() * a.num() + a.den() * b.num(), a.den() * b.den());
}

RTauElem operator-(const RTauElem& a, const RTauElem& b) {
  return RTauElem(b.den() * a.num() - a.den() * b.num(), a.den() * b.den());
}

RTauElem operator*(const RTauElem& a, const RTauElem& b) {
  return RTauElem(a.num() * b.num(), a.den() * b.den());
}

OrderResult compare(const RTauElem& f, const RTauElem& g) {
  // denominators are positive, so the sign of g - f sits on this numerator
  IntPoly diff = f.den() * g.num() - g.den() * f.num();
  if (diff.is_zero()) return OrderResult::equal;
  return diff.leading() > 0 ? OrderResult::less : OrderResult::greater;
}

std::string format(const IntPoly& g) {
  if (g.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto c = g.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    Integer mag = abs(c[i]);
    if (first) {
      if (c[i] < 0) os << '-';
    } else {
      os << (c[i] < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

std::string format(const RTauElem& f) {
  if (f.den() == 1) return format(f.num());
  return "(" + format(f.num()) + ")/" + f.den().get_str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& g) { return os << format(g); }
std::ostream& operator<<(std::ostream& os, const RTauElem& f) { return os << format(f); }

}  // namespace rtau
