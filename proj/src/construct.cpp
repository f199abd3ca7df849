#include "rtau/construct.hpp"

#include <algorithm>

#include "rtau/errors.hpp"

namespace rtau {

DiffTuple::DiffTuple(std::vector<Integer> values) : d_(std::move(values)) {
  if (d_.empty()) throw Error(Errc::not_increasing, "difference tuple is empty");
  if (d_.front() <= 0) throw Error(Errc::not_increasing, "difference tuple entries must be positive");
  for (std::size_t i = 1; i < d_.size(); ++i) {
    if (d_[i] <= d_[i - 1]) {
      throw Error(Errc::not_increasing, "difference tuple must be strictly increasing at entry " + std::to_string(i + 1));
    }
  }
}

DiffTuple::DiffTuple(std::initializer_list<long> values)
    : DiffTuple(std::vector<Integer>(values.begin(), values.end())) {}

std::vector<Integer> DiffTuple::with_zero() const {
  std::vector<Integer> out{Integer(0)};
  out.insert(out.end(), d_.begin(), d_.end());
  return out;
}

bool check_S(const DiffTuple& d) {
  const std::vector<Integer> all = d.with_zero();
  for (std::uint64_t q : primes_up_to(d.length() + 1)) {
    std::vector<bool> hit(q, false);
    Integer qq = static_cast<unsigned long>(q);
    for (const Integer& v : all) hit[mod(v, qq).get_ui()] = true;
    if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) return false;
  }
  return true;
}

namespace {

bool has_root_mod(const IntPoly& f, const Integer& p) {
  std::vector<Integer> v(f.coeffs().begin(), f.coeffs().end());
  for (Integer& c : v) c = mod(c, p);
  const IntPoly reduced(std::move(v));
  if (reduced.is_zero()) return true;
  for (Integer c = 0; c < p; ++c) {
    if (eval_mod(reduced, c, p) == 0) return true;
  }
  return false;
}

Integer least_root_mod(const IntPoly& f, const Integer& p) {
  for (Integer c = 0; c < p; ++c) {
    if (eval_mod(f, c, p) == 0) return c;
  }
  throw Error(Errc::no_residue, format(f) + " has no root mod " + p.get_str());
}

}  // namespace

std::vector<Integer> sf_primes(const IntPoly& f, std::uint64_t bound) {
  if (f.is_constant()) throw Error(Errc::constant_input, "S_f needs a non-constant polynomial");
  std::vector<Integer> out;
  for (std::uint64_t q : primes_up_to(bound)) {
    Integer p = static_cast<unsigned long>(q);
    if (has_root_mod(f, p)) out.push_back(p);
  }
  return out;
}

std::vector<std::vector<Integer>> assign_T(std::span<const IntPoly> fs, std::size_t quota, std::uint64_t bound) {
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].is_constant()) throw Error(Errc::constant_input, "T_f needs non-constant polynomials");
    for (std::size_t j = 0; j < i; ++j) {
      if (fs[i] == fs[j]) throw Error(Errc::precondition, "polynomials must be pairwise distinct");
    }
  }
  const std::vector<std::uint64_t> primes = primes_up_to(bound);
  std::vector<bool> claimed(primes.size(), false);
  std::vector<std::vector<Integer>> out(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = 0; j < primes.size() && out[i].size() < quota; ++j) {
      if (claimed[j]) continue;
      Integer p = static_cast<unsigned long>(primes[j]);
      if (has_root_mod(fs[i], p)) {
        claimed[j] = true;
        out[i].push_back(p);
      }
    }
    if (out[i].size() < quota) {
      throw Error(Errc::quota_unmet, "only " + std::to_string(out[i].size()) + " of " + std::to_string(quota) +
                                         " primes <= " + std::to_string(bound) + " for " + format(fs[i]));
    }
  }
  return out;
}

TauState build_justprimes(std::size_t count, std::size_t quota, std::uint64_t bound) {
  std::vector<IntPoly> fs;
  for (std::size_t i = 0; i < count; ++i) fs.push_back(enumerate_I(i));
  auto sets = assign_T(fs, quota, bound);
  TauState tau = TauState::all_exact(0);
  tau.kind = BuilderKind::justprimes;
  tau.stage = static_cast<std::int64_t>(count);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (const Integer& p : sets[i]) {
      tau.components.emplace(p, PadicComponent::exact(p, least_root_mod(fs[i], p)));
    }
  }
  return tau;
}

LargePrimesWitness lemma_largeprimes(std::span<const IntPoly> F, unsigned long n, const DiffTuple& d,
                                     const std::function<bool(const Integer&)>& available,
                                     const SearchLimits& limits) {
  if (n < 2) throw Error(Errc::precondition, "lemma_largeprimes needs n >= 2");
  LargePrimesWitness w;
  std::vector<Integer> values;
  for (w.r = 1;; ++w.r) {
    if (ipow(w.r, n) <= d.last()) continue;
    values.clear();
    bool root = false;
    for (const IntPoly& f : F) {
      values.push_back(evaluate(f, w.r));
      root = root || values.back() == 0;
    }
    if (!root) break;
  }
  const Integer floor = ipow(w.r, n) + d.last();
  Integer q = floor;
  std::uint64_t scanned = 0;
  while (w.primes.size() < d.length() + 1) {
    q = next_prime(q);
    if (++scanned > limits.prime_scan_cap) {
      throw Error(Errc::exhausted_primes, "fewer than " + std::to_string(d.length() + 1) +
                                              " available primes within the scan cap");
    }
    if (!available(q)) continue;
    bool divides = std::any_of(values.begin(), values.end(),
                               [&](const Integer& v) { return mpz_divisible_p(v.get_mpz_t(), q.get_mpz_t()) != 0; });
    if (!divides) w.primes.push_back(q);
  }
  const std::vector<Integer> offsets = d.with_zero();
  std::vector<Congruence> system;
  w.product = 1;
  for (std::size_t i = 0; i < w.primes.size(); ++i) {
    const Integer& p = w.primes[i];
    system.push_back({p - offsets[i], p * p});
    w.product *= p;
  }
  w.a = crt_solve(system).solution;
  if (!verify_largeprimes(w, F, n, d)) {
    throw Error(Errc::ledger_violation, "large-primes witness failed verification");
  }
  return w;
}

bool verify_largeprimes(const LargePrimesWitness& w, std::span<const IntPoly> F, unsigned long n,
                        const DiffTuple& d, unsigned long k_max) {
  const std::vector<Integer> offsets = d.with_zero();
  if (w.primes.size() != offsets.size() || w.r < 1 || w.a < 1) return false;
  const Integer floor = ipow(w.r, n) + d.last();
  Integer product = 1;
  for (std::size_t i = 0; i < w.primes.size(); ++i) {
    if (!is_prime(w.primes[i]) || w.primes[i] <= floor) return false;
    if (i > 0 && w.primes[i] <= w.primes[i - 1]) return false;
    product *= w.primes[i];
  }
  if (product != w.product) return false;
  Integer g;
  for (const IntPoly& f : F) {
    Integer v = evaluate(f, w.r);
    mpz_gcd(g.get_mpz_t(), v.get_mpz_t(), product.get_mpz_t());
    if (g != 1) return false;
  }
  const Integer rn = ipow(w.r, n);
  for (unsigned long k = 0; k <= k_max; ++k) {
    const Integer kp = k * product;
    for (std::size_t i = 0; i < offsets.size(); ++i) {
      std::vector<Integer> coeffs(n + 1, Integer(0));
      coeffs[0] = w.a + offsets[i];
      coeffs[1] += kp;
      coeffs[n] += 1;
      if (!eisenstein_at(IntPoly(std::move(coeffs)), w.primes[i])) return false;
      Integer value = rn + kp * w.r + w.a + offsets[i];
      mpz_gcd(g.get_mpz_t(), value.get_mpz_t(), product.get_mpz_t());
      if (g != 1) return false;
    }
  }
  return true;
}

Integer KProgression::member(std::size_t i) const {
  Integer k = k0;
  for (std::size_t seen = 0;; k += modulus) {
    if (excluded.count(k)) continue;
    if (seen++ == i) return k;
  }
}

KProgression lemma_manyk(const std::map<Integer, Integer>& constraints, const Integer& p, const DiffTuple& d,
                         const Integer& a, unsigned long n, const std::set<Integer>& excluded) {
  if (!check_S(d)) throw Error(Errc::not_in_s, "difference tuple is not admissible");
  if (n < 2) throw Error(Errc::precondition, "lemma_manyk needs n >= 2");
  const std::vector<Integer> offsets = d.with_zero();
  std::vector<Congruence> system;
  for (const auto& [q, c] : constraints) {
    if (mpz_divisible_p(p.get_mpz_t(), q.get_mpz_t())) {
      throw Error(Errc::precondition, q.get_str() + " divides p");
    }
    if (c < 1 || c >= q) throw Error(Errc::precondition, "c_q must lie in [1, q-1] for q = " + q.get_str());
    // value(k) = base + k * step + d_i (mod q), step a unit
    const Integer base = mod(ipow(c, n) + a, q);
    const Integer step = mod(p * c, q);
    std::optional<Integer> chosen;
    const Integer scan = std::min<Integer>(q, Integer(static_cast<unsigned long>(offsets.size() + 1)));
    for (Integer r = 0; r < scan && !chosen; ++r) {
      const Integer v = base + r * step;
      bool ok = std::none_of(offsets.begin(), offsets.end(),
                             [&](const Integer& di) { return mod(v + di, q) == 0; });
      if (ok) chosen = r;
    }
    if (!chosen) throw Error(Errc::no_residue, "no admissible class of k modulo " + q.get_str());
    system.push_back({*chosen, q});
  }
  CrtSolution sol = crt_solve(system);
  KProgression out{sol.solution == 0 ? sol.modulus : sol.solution, sol.modulus, excluded};
  while (out.excluded.count(out.k0)) out.k0 += out.modulus;
  return out;
}

std::pair<std::size_t, unsigned long> iota_index(std::uint64_t m, std::optional<std::size_t> rows) {
  auto triangle = [](std::uint64_t k) { return k * (k + 1) / 2; };
  auto in_triangle = [&](std::uint64_t idx) {
    std::uint64_t k = 0;
    while (triangle(k + 1) <= idx) ++k;
    std::uint64_t j = idx - triangle(k);  // column within diagonal k
    return std::pair<std::size_t, unsigned long>{static_cast<std::size_t>(k - j), static_cast<unsigned long>(j + 2)};
  };
  if (!rows) return in_triangle(m);
  const std::uint64_t R = *rows + 1;
  if (m < triangle(R)) return in_triangle(m);
  const std::uint64_t rest = m - triangle(R);
  const std::uint64_t k = R + rest / R, j = rest % R;
  const std::uint64_t col = k - R + 1 + j;
  return {static_cast<std::size_t>(R - 1 - j), static_cast<unsigned long>(col + 2)};
}

IotaCell iota(std::uint64_t m, std::span<const DiffTuple> D) {
  auto [row, n] = iota_index(m, D.size());
  if (row == 0) return {std::nullopt, n};
  return {D[row - 1], n};
}

std::vector<ProgressionCertificate> progressions(const TauState& tau) {
  std::vector<ProgressionCertificate> out;
  for (std::size_t i = 0; i < tau.ledger.size(); ++i) {
    const auto& tag = tau.ledger[i].progression;
    if (!tag) continue;
    if (out.empty() || out.back().ledger_indices.empty() ||
        tau.ledger[out.back().ledger_indices.front()].progression->group != tag->group) {
      LargePrimesWitness w{tag->r, tag->a, tag->witness_primes, 1};
      for (const Integer& p : w.primes) w.product *= p;
      IntPoly base = IntPoly::monomial(1, tag->degree) + IntPoly::monomial(tag->k * w.product, 1) +
                     IntPoly::constant(tag->a);
      out.push_back({RTauElem(base), DiffTuple(tag->diffs), w, tag->k, tag->degree, {}});
    }
    out.back().ledger_indices.push_back(i);
  }
  return out;
}

}  // namespace rtau
