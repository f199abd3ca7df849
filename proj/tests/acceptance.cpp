// Acceptance gate: runs every criterion and prints one PASS/FAIL line each.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "oracles.hpp"
#include "rtau/construct.hpp"
#include "rtau/errors.hpp"
#include "rtau/tau.hpp"

using namespace rtau;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0 means no time bound
  std::function<Outcome()> body;
};

bool divides(const Integer& p, const Integer& v) { return mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t()) != 0; }

Integer gcd_of(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Outcome check_s_oracle() {
  std::size_t tuples = 0, mismatches = 0;
  auto test = [&](const std::vector<std::int64_t>& d) {
    ++tuples;
    std::vector<Integer> v(d.begin(), d.end());
    if (check_S(DiffTuple(v)) != oracle::misses_a_class_mod_every_prime(d, 29)) ++mismatches;
  };
  for (std::int64_t a = 1; a <= 24; ++a) {
    test({a});
    for (std::int64_t b = a + 1; b <= 24; ++b) {
      test({a, b});
      for (std::int64_t c = b + 1; c <= 24; ++c) test({a, b, c});
    }
  }
  return {mismatches == 0, std::to_string(tuples) + " tuples, " + std::to_string(mismatches) + " mismatches"};
}

Outcome known_families() {
  bool ok = check_S(DiffTuple{2}) && check_S(DiffTuple{6, 12}) && !check_S(DiffTuple{1}) && !check_S(DiffTuple{2, 4});
  return {ok, "(2) and (6,12) admissible, (1) and (2,4) not"};
}

// Independent check of the witness: Eisenstein by direct divisibility, the
// size inequality, and the two coprimality conditions.
bool witness_holds(const LargePrimesWitness& w, const std::vector<IntPoly>& F, unsigned long n,
                   const std::vector<Integer>& d0) {
  if (w.primes.size() != d0.size()) return false;
  Integer product = 1;
  for (const Integer& p : w.primes) product *= p;
  if (product != w.product) return false;
  const Integer rn = ipow(w.r, n);
  for (const Integer& p : w.primes) {
    if (mpz_probab_prime_p(p.get_mpz_t(), 40) == 0 || p <= rn + d0.back()) return false;
  }
  for (const IntPoly& f : F) {
    if (gcd_of(evaluate(f, w.r), product) != 1) return false;
  }
  for (long k = 0; k <= 10; ++k) {
    const Integer kp = k * product;
    for (std::size_t i = 0; i < d0.size(); ++i) {
      const Integer& p = w.primes[i];
      const Integer c0 = w.a + d0[i];
      // x^n + kp x + c0: monic, p | kp, p | c0, p^2 does not divide c0
      if (!divides(p, kp) || !divides(p, c0) || divides(p * p, c0)) return false;
      if (gcd_of(rn + kp * w.r + c0, product) != 1) return false;
    }
  }
  return true;
}

Outcome largeprimes_harness() {
  std::mt19937_64 rng(0x1a4e);
  std::uniform_int_distribution<int> nd(2, 5), ld(1, 3), fd(0, 5);
  std::uniform_int_distribution<long> step(1, 8);
  std::uniform_int_distribution<std::size_t> pick(0, 60);
  std::uniform_int_distribution<int> coin(0, 3);
  int failures = 0;
  for (int i = 0; i < 100; ++i) {
    std::vector<Integer> d;
    long v = 0;
    for (int j = ld(rng); j > 0; --j) d.emplace_back(v += step(rng));
    std::vector<IntPoly> F;
    for (int j = fd(rng); j > 0; --j) F.push_back(enumerate_I(pick(rng)));
    const unsigned long n = static_cast<unsigned long>(nd(rng));
    const int skip = coin(rng);  // make some primes unavailable
    auto available = [skip](const Integer& q) { return skip == 0 || mpz_fdiv_ui(q.get_mpz_t(), 4) != 1; };
    const DiffTuple dt(d);
    try {
      LargePrimesWitness w = lemma_largeprimes(F, n, dt, available);
      if (!witness_holds(w, F, n, dt.with_zero())) ++failures;
    } catch (const Error&) {
      ++failures;
    }
  }
  return {failures == 0, "100 instances, " + std::to_string(failures) + " failures"};
}

Outcome manyk_harness() {
  std::mt19937_64 rng(0x3a11);
  std::uniform_int_distribution<int> ld(1, 3), nd(2, 5), qd(1, 12);
  std::uniform_int_distribution<long> step(1, 12), big(1000, 100000);
  const std::vector<std::uint64_t> small = primes_up_to(300);
  std::uniform_int_distribution<std::size_t> pick(0, small.size() - 1);
  int failures = 0, instances = 0;
  while (instances < 100) {
    std::vector<Integer> d;
    long v = 0;
    for (int j = ld(rng); j > 0; --j) d.emplace_back(v += step(rng));
    DiffTuple dt(d);
    if (!check_S(dt)) continue;
    ++instances;
    Integer p = next_prime(Integer(big(rng))) * next_prime(Integer(big(rng) + 200000));
    Integer a = big(rng);
    const unsigned long n = static_cast<unsigned long>(nd(rng));
    std::map<Integer, Integer> constraints;
    for (int j = qd(rng); j > 0; --j) {
      Integer q = static_cast<unsigned long>(small[pick(rng)]);
      std::uniform_int_distribution<long> c(1, q.get_si() - 1);
      constraints[q] = c(rng);
    }
    try {
      KProgression kp = lemma_manyk(constraints, p, dt, a, n);
      for (std::size_t m = 0; m < 10; ++m) {
        const Integer k = kp.member(m);
        if (k < 1) ++failures;
        for (const auto& [q, c] : constraints) {
          for (const Integer& di : dt.with_zero()) {
            if (divides(q, ipow(c, n) + k * p * c + a + di)) ++failures;
          }
        }
      }
    } catch (const Error&) {
      ++failures;
    }
  }
  return {failures == 0, "100 instances x 10 members, " + std::to_string(failures) + " violations"};
}

// Certified progressions: every member is prime (certified or promised).
std::vector<ProgressionCertificate> certified(const TauState& tau) {
  std::vector<ProgressionCertificate> out;
  for (const ProgressionCertificate& cert : progressions(tau)) {
    bool all = true;
    for (std::size_t idx : cert.ledger_indices) {
      all = all && is_prime(tau.ledger[idx].normalized(), tau).verdict.certainty.true_or_promised();
    }
    if (all) out.push_back(cert);
  }
  return out;
}

bool pairwise_nonconstant(const TauState& tau, bool skip_same_progression) {
  for (std::size_t i = 0; i < tau.ledger.size(); ++i) {
    for (std::size_t j = i + 1; j < tau.ledger.size(); ++j) {
      const auto& a = tau.ledger[i].progression;
      const auto& b = tau.ledger[j].progression;
      if (skip_same_progression && a && b && a->group == b->group) continue;
      if ((tau.ledger[i].normalized() - tau.ledger[j].normalized()).is_constant()) return false;
    }
  }
  return true;
}

Outcome twins_main() {
  TauState tau = build_main(std::vector<DiffTuple>{DiffTuple{2}}, 40, 2024);
  auto certs = certified(tau);
  std::set<unsigned long> degrees;
  std::size_t twins = 0;
  for (const auto& c : certs) {
    if (c.diffs == DiffTuple{2} && c.ledger_indices.size() == 2) {
      ++twins;
      degrees.insert(c.degree);
    }
  }
  bool report_ok = true;
  try {
    pid_report(tau);
  } catch (const Error&) {
    report_ok = false;
  }
  const bool separated = pairwise_nonconstant(tau, true);
  return {twins >= 5 && degrees.size() >= 3 && report_ok && separated,
          std::to_string(twins) + " twin certificates over " + std::to_string(degrees.size()) +
              " degrees, pid_report " + (report_ok ? "ok" : "failed") +
              (separated ? "" : ", constant difference found")};
}

Outcome progressions_6_12() {
  TauState tau = build_main(std::vector<DiffTuple>{DiffTuple{6, 12}}, 30, 2024);
  std::size_t count = 0;
  for (const auto& c : certified(tau)) count += c.ledger_indices.size() == 3 ? 1 : 0;
  bool report_ok = true;
  try {
    pid_report(tau);
  } catch (const Error&) {
    report_ok = false;
  }
  return {count >= 3 && report_ok, std::to_string(count) + " certified length-3 progressions"};
}

Outcome sparse_differences() {
  TauState tau = build_sparse(20, 2024);
  const bool ok = tau.ledger.size() == 20 && pairwise_nonconstant(tau, false);
  return {ok, "190 pairwise differences of " + std::to_string(tau.ledger.size()) + " entries checked"};
}

Outcome r0_corpus() {
  const TauState r0 = TauState::all_exact(0);
  std::mt19937_64 rng(0x7e0);
  std::uniform_int_distribution<int> deg(0, 4), pick(0, 2);
  std::uniform_int_distribution<long> coeff(-9, 9), den(1, 6);
  std::set<std::pair<std::vector<Integer>, Integer>> corpus;
  std::size_t agree = 0, primes = 0;
  while (corpus.size() < 500) {
    std::vector<Integer> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (Integer& x : c) x = coeff(rng);
    const long k = den(rng);
    if (pick(rng) == 0) c[0] = pick(rng) == 0 ? k : -k;  // bias toward constant term +-den
    RTauElem f(IntPoly(std::move(c)), k);
    if (f.num().is_zero() || height(f.num()) > 9) continue;
    if (f.is_constant() && f.den() == 1 && abs(f.num().coeff(0)) == 1) continue;  // units
    if (!membership(f, r0).verdict.certainty.is_true()) continue;
    if (!corpus.insert({{f.num().coeffs().begin(), f.num().coeffs().end()}, f.den()}).second) continue;
    const bool certifier = is_prime(f, r0).verdict.certainty.is_true();
    const bool closed_form = r0_prime_oracle(f);
    agree += certifier == closed_form ? 1 : 0;
    primes += closed_form ? 1 : 0;
  }
  return {agree == 500, std::to_string(agree) + "/500 agree (" + std::to_string(primes) + " primes)"};
}

Outcome r0_twins() {
  const TauState r0 = TauState::all_exact(0);
  int ok = 0;
  for (unsigned long n = 2; n <= 6; ++n) {
    for (long c : {-2L, 2L}) {
      RTauElem f(IntPoly::monomial(1, n) + IntPoly{c}, 2);
      ok += is_prime(f, r0).verdict.certainty.is_true() ? 1 : 0;
    }
  }
  return {ok == 10, std::to_string(ok) + "/10 certified"};
}

Outcome justprimes() {
  const std::size_t count = 10, quota = 3;
  const std::uint64_t bound = 2000;
  TauState tau = build_justprimes(count, quota, bound);
  std::vector<IntPoly> fs;
  for (std::size_t i = 0; i < count; ++i) fs.push_back(enumerate_I(i));
  auto sets = assign_T(fs, quota, bound);
  std::set<Integer> seen;
  bool disjoint = true;
  std::size_t certified_count = 0, pairs = 0;
  for (std::size_t i = 0; i < count; ++i) {
    for (const Integer& p : sets[i]) {
      disjoint = disjoint && seen.insert(p).second;
      ++pairs;
      certified_count += membership(RTauElem(fs[i], p), tau).verdict.certainty.is_true() ? 1 : 0;
    }
  }
  return {disjoint && certified_count == pairs,
          std::string(disjoint ? "disjoint" : "overlapping") + " T_f, " + std::to_string(certified_count) + "/" +
              std::to_string(pairs) + " f/p members"};
}

Outcome determinism() {
  const std::vector<DiffTuple> D = {DiffTuple{2}, DiffTuple{6, 12}};
  bool ok = serialize(build_sparse(20, 99)) == serialize(build_sparse(20, 99));
  ok = ok && serialize(build_main(D, 25, 99)) == serialize(build_main(D, 25, 99));
  ok = ok && serialize(build_justprimes(10, 3, 2000)) == serialize(build_justprimes(10, 3, 2000));
  return {ok, "sparse, main and justprimes outputs byte-identical"};
}

Outcome irreducibility_oracle() {
  std::size_t total = 0, mismatches = 0;
  for (int d = 1; d <= 4; ++d) {
    oracle::Coeffs c(static_cast<std::size_t>(d) + 1, -5);
    while (true) {
      if (c.back() != 0) {
        ++total;
        std::vector<Integer> v(c.begin(), c.end());
        if (irreducible_over_Z(IntPoly(std::vector<Integer>(v))) != oracle::irreducible(c)) ++mismatches;
      }
      std::size_t j = 0;
      while (j < c.size() && c[j] == 5) c[j++] = -5;
      if (j == c.size()) break;
      ++c[j];
    }
  }
  return {mismatches == 0, std::to_string(total) + " polynomials, " + std::to_string(mismatches) + " mismatches"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "check_S matches brute-force cover search", 60, check_s_oracle},
      {2, "known tuple families in S", 0, known_families},
      {3, "large-primes witnesses verify", 120, largeprimes_harness},
      {4, "k-progressions avoid every constraint", 60, manyk_harness},
      {5, "twin progressions from build_main([(2)], 40)", 300, twins_main},
      {6, "length-3 progressions from build_main([(6,12)], 30)", 300, progressions_6_12},
      {7, "build_sparse(20) differences non-constant", 180, sparse_differences},
      {8, "R_0 certifier agrees with closed form", 0, r0_corpus},
      {9, "(x^n -+ 2)/2 prime in R_0 for n = 2..6", 0, r0_twins},
      {10, "build_justprimes(10) disjoint and dividing", 60, justprimes},
      {11, "builders deterministic", 0, determinism},
      {12, "irreducibility matches exhaustive factor search", 120, irreducibility_oracle},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_seconds == 0 || secs < c.limit_seconds;
    const bool pass = o.pass && in_time;
    failed += pass ? 0 : 1;
    std::printf("[%s] %2d %s: %s (%.2f s%s)\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs,
                in_time ? "" : ", over time limit");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
