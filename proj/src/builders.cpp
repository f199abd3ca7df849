#include <algorithm>
#include <set>

#include "rtau/construct.hpp"
#include "rtau/errors.hpp"

namespace rtau {

namespace {

IntPoly reduce_mod(const IntPoly& f, const Integer& p) {
  std::vector<Integer> v(f.coeffs().begin(), f.coeffs().end());
  for (Integer& c : v) c = mod(c, p);
  return IntPoly(std::move(v));
}

// Smallest c in [lo, p) that is a root of none of the ledger polynomials.
std::optional<Integer> admissible_residue(const std::vector<IntPoly>& polys, const Integer& p, int lo) {
  std::vector<IntPoly> reduced;
  for (const IntPoly& g : polys) reduced.push_back(reduce_mod(g, p));
  for (Integer c = lo; c < p; ++c) {
    bool ok = std::none_of(reduced.begin(), reduced.end(),
                           [&](const IntPoly& g) { return eval_mod(g, c, p) == 0; });
    if (ok) return c;
  }
  return std::nullopt;
}

void define_components_up_to(TauState& tau, const Integer& bound, bool unit) {
  if (!bound.fits_ulong_p()) throw Error(Errc::precondition, "s_m is too large");
  const std::vector<IntPoly> polys = tau.ledger_polys();
  for (std::uint64_t q : primes_up_to(bound.get_ui())) {
    Integer p = static_cast<unsigned long>(q);
    if (tau.components.count(p)) continue;
    auto c = admissible_residue(polys, p, unit ? 1 : 0);
    if (!c) throw Error(Errc::no_residue, "every residue mod " + p.get_str() + " is a ledger root");
    tau.components.emplace(p, PadicComponent::approx(p, 1, *c));
  }
}

// Integers t > 0 with g/n_g - f/(t n1) constant for some ledger entry g.
std::set<Integer> collisions(const TauState& tau, const IntPoly& f, const Integer& n1) {
  std::set<Integer> out;
  const int d = f.degree();
  for (const LedgerEntry& e : tau.ledger) {
    if (e.f.degree() != d) continue;
    const Integer num = f.leading() * e.n, den = e.f.leading() * n1;
    if (num % den != 0) continue;
    const Integer t = num / den;
    if (t <= 0) continue;
    bool same = true;
    for (int j = 1; j < d && same; ++j) same = f.coeff(j) * e.n == t * n1 * e.f.coeff(j);
    if (same) out.insert(t);
  }
  return out;
}

// Smallest c in [lo, q) with f(c) = 0 and no ledger root at c, modulo q.
std::optional<Integer> lefschetz_residue(const IntPoly& f, const std::vector<IntPoly>& polys, const Integer& q,
                                         int lo) {
  const IntPoly fr = reduce_mod(f, q);
  std::vector<IntPoly> reduced;
  for (const IntPoly& g : polys) reduced.push_back(reduce_mod(g, q));
  for (Integer c = lo; c < q; ++c) {
    if (eval_mod(fr, c, q) != 0) continue;
    bool ok = std::none_of(reduced.begin(), reduced.end(),
                           [&](const IntPoly& g) { return eval_mod(g, c, q) == 0; });
    if (ok) return c;
  }
  return std::nullopt;
}

// n_f for a new entry: the product of p^{v_p(f)} over defined primes, moved
// off any constant collision with the ledger by one extra coordinate.
Integer settle_normalizer(TauState& tau, const IntPoly& f, bool unit, const BuildOptions& options) {
  Integer n1 = 1;
  std::vector<Integer> defined;
  for (const auto& [p, c] : tau.components) defined.push_back(p);
  for (const Integer& p : defined) {
    ValuationResult v = settled_valuation(tau, f, p, options.refine);
    if (!v.is_determined()) throw Error(Errc::ledger_violation, format(f) + " has an exact root at " + p.get_str());
    n1 *= ipow(p, v.value);
  }
  const std::set<Integer> T = collisions(tau, f, n1);
  if (!T.count(1)) return n1;

  const int lo = unit ? 1 : 0;
  if (unit && f == IntPoly::x()) {
    throw Error(Errc::lefschetz_search_exhausted, "x has no unit root modulo any prime");
  }
  const std::vector<IntPoly> polys = tau.ledger_polys();
  Integer q = 1;
  for (std::uint64_t scanned = 0; scanned < options.limits.prime_scan_cap; ++scanned) {
    q = next_prime(q);
    if (tau.is_defined(q)) continue;
    auto c = lefschetz_residue(f, polys, q, lo);
    if (!c) continue;
    TauState trial = tau;
    trial.components.emplace(q, PadicComponent::approx(q, 1, *c));
    ValuationResult v = settled_valuation(trial, f, q, options.refine);
    const Integer t = ipow(q, v.value);
    if (T.count(t)) continue;
    tau = std::move(trial);
    return n1 * t;
  }
  throw Error(Errc::lefschetz_search_exhausted, "no prime separates " + format(f) + " from the ledger");
}

IntPoly next_unlisted(const TauState& tau) {
  for (std::size_t i = 0;; ++i) {
    IntPoly f = enumerate_I(i);
    if (!tau.find_tracked(f)) return f;
  }
}

void empty_branch(TauState& tau, bool unit, const BuildOptions& options) {
  const IntPoly f = next_unlisted(tau);
  tau.s += f.degree();
  define_components_up_to(tau, tau.s, unit);
  Integer n = settle_normalizer(tau, f, unit, options);
  tau.ledger.push_back({f, std::move(n), tau.stage, std::nullopt});
}

void progression_branch(TauState& tau, const DiffTuple& d, unsigned long n, const BuildOptions& options) {
  const std::size_t l = d.length();
  tau.s += Integer(static_cast<unsigned long>(l + 1)) * n;
  define_components_up_to(tau, tau.s, true);

  std::vector<IntPoly> F = tau.ledger_polys();
  F.push_back(IntPoly::x());
  LargePrimesWitness w = lemma_largeprimes(
      F, n, d, [&](const Integer& q) { return !tau.is_defined(q); }, options.limits);

  std::map<Integer, Integer> Q;
  for (const auto& [q, c] : tau.components) Q.emplace(q, c.residue_mod_p());
  for (const Integer& p : w.primes) tau.components.emplace(p, PadicComponent::approx(p, 1, mod(w.r, p)));

  // k making some f_k + d_i differ from a ledger entry by a constant
  std::set<Integer> excluded;
  for (const LedgerEntry& e : tau.ledger) {
    if (e.f.degree() != static_cast<int>(n) || e.f.leading() != e.n) continue;
    bool gap = true;
    for (unsigned long j = 2; j < n && gap; ++j) gap = e.f.coeff(static_cast<int>(j)) == 0;
    if (!gap) continue;
    const Integer step = e.n * w.product;
    if (e.f.coeff(1) % step == 0 && e.f.coeff(1) / step > 0) excluded.insert(e.f.coeff(1) / step);
  }
  const KProgression kp = lemma_manyk(Q, w.product, d, w.a, n, excluded);

  const IntPoly base =
      IntPoly::monomial(1, static_cast<int>(n)) + IntPoly::monomial(kp.k0 * w.product, 1) + IntPoly::constant(w.a);
  ProgressionTag tag{tau.stage, {d.values().begin(), d.values().end()}, 0, n, w.r, w.a, kp.k0, w.primes};
  for (const Integer& di : d.with_zero()) {
    const IntPoly f = base + IntPoly::constant(di);
    for (const auto& [p, c] : tau.components) {
      if (!is_unit_value(f, c)) {
        throw Error(Errc::ledger_violation, format(f) + " is not a unit at " + p.get_str());
      }
    }
    tag.offset = di;
    tau.ledger.push_back({f, Integer(1), tau.stage, tag});
  }
}

void check_kind(const TauState& tau, BuilderKind kind) {
  if (tau.kind != kind || tau.default_exact) {
    throw Error(Errc::precondition, std::string("state was not produced by the ") + std::string(to_string(kind)) +
                                        " builder");
  }
}

}  // namespace

TauState continue_sparse(TauState tau, std::size_t more, const BuildOptions& options) {
  check_kind(tau, BuilderKind::sparse);
  for (std::size_t i = 0; i < more; ++i) {
    ++tau.stage;
    empty_branch(tau, false, options);
  }
  return tau;
}

TauState build_sparse(std::size_t stages, std::uint64_t seed, const BuildOptions& options) {
  TauState tau;
  tau.kind = BuilderKind::sparse;
  tau.seed = seed;
  return continue_sparse(std::move(tau), stages, options);
}

TauState continue_main(TauState tau, const DiffSource& D, std::size_t more, const BuildOptions& options) {
  check_kind(tau, BuilderKind::main);
  for (std::size_t i = 0; i < more; ++i) {
    auto [row, n] = iota_index(static_cast<std::uint64_t>(tau.stage), D.count);
    if (row == 0) {
      empty_branch(tau, true, options);
    } else {
      DiffTuple d = D.at(row - 1);
      if (!check_S(d)) throw Error(Errc::not_in_s, "difference tuple " + std::to_string(row) + " is not admissible");
      progression_branch(tau, d, n, options);
    }
    ++tau.stage;
  }
  return tau;
}

TauState build_main(const DiffSource& D, std::size_t stages, std::uint64_t seed, const BuildOptions& options) {
  TauState tau;
  tau.kind = BuilderKind::main;
  tau.seed = seed;
  tau.s = 1;
  tau.pairing = D.count ? "anti-diagonal" : "anti-diagonal-stream";
  return continue_main(std::move(tau), D, stages, options);
}

TauState build_main(std::span<const DiffTuple> D, std::size_t stages, std::uint64_t seed,
                    const BuildOptions& options) {
  for (const DiffTuple& d : D) {
    if (!check_S(d)) throw Error(Errc::not_in_s, "difference tuple is not admissible");
  }
  std::vector<DiffTuple> copy(D.begin(), D.end());
  DiffSource source{copy.size(), [copy](std::size_t i) { return copy.at(i); }};
  TauState tau;
  tau.kind = BuilderKind::main;
  tau.seed = seed;
  tau.s = 1;
  tau.pairing = "anti-diagonal";
  for (const DiffTuple& d : D) tau.pairing_diffs.emplace_back(d.values().begin(), d.values().end());
  return continue_main(std::move(tau), source, stages, options);
}

}  // namespace rtau
