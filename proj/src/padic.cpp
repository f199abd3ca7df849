#include "rtau/padic.hpp"

#include <algorithm>
#include <optional>

#include "rtau/errors.hpp"

namespace rtau {

PadicComponent PadicComponent::exact(Integer p, Integer value) {
  return PadicComponent(std::move(p), Exact{std::move(value)});
}

PadicComponent PadicComponent::approx(Integer p, int precision, Integer residue) {
  if (precision < 1) throw Error(Errc::precondition, "approximate component needs precision >= 1");
  if (residue < 0 || residue >= ipow(p, static_cast<unsigned long>(precision))) {
    throw Error(Errc::precondition, "residue " + residue.get_str() + " out of range for " + p.get_str() +
                                        "^" + std::to_string(precision));
  }
  return PadicComponent(std::move(p), Approx{precision, std::move(residue)});
}

Integer PadicComponent::modulus() const {
  return ipow(p_, static_cast<unsigned long>(as_approx().precision));
}

Integer PadicComponent::residue_mod_p() const {
  return is_exact() ? mod(as_exact().value, p_) : mod(as_approx().residue, p_);
}

bool operator==(const PadicComponent& a, const PadicComponent& b) {
  if (a.p_ != b.p_ || a.is_exact() != b.is_exact()) return false;
  if (a.is_exact()) return a.as_exact().value == b.as_exact().value;
  return a.as_approx().precision == b.as_approx().precision && a.as_approx().residue == b.as_approx().residue;
}

ValuationResult valuation(const IntPoly& g, const PadicComponent& c) {
  if (g.is_zero()) return ValuationResult::infinite();
  if (c.is_exact()) {
    Integer v = evaluate(g, c.as_exact().value);
    if (v == 0) return ValuationResult::infinite();
    return ValuationResult::determined(valuation_of(v, c.prime()));
  }
  const auto& a = c.as_approx();
  Integer v = eval_mod(g, a.residue, c.modulus());
  if (v == 0) return ValuationResult::need_more(static_cast<unsigned long>(a.precision) + 1);
  return ValuationResult::determined(valuation_of(v, c.prime()));
}

bool is_unit_value(const IntPoly& g, const PadicComponent& c) {
  if (g.is_zero()) return false;
  return eval_mod(g, c.residue_mod_p(), c.prime()) != 0;
}

namespace {

struct DigitSearch {
  const Integer& p;
  std::span<const IntPoly> avoid;
  int target;
  const RefineOptions& options;
  unsigned long nodes = 0;

  struct Node {
    int precision;
    Integer residue;
  };

  std::optional<Node> run(int m, const Integer& r, const std::vector<std::size_t>& open) {
    if (open.empty()) return Node{std::max(m, target), r};  // zero digits keep everything settled
    if (m >= target + options.depth_cap) return std::nullopt;
    if (++nodes > options.node_budget) {
      throw Error(Errc::valuation_unresolvable,
                  "digit search at p = " + p.get_str() + " exceeded its node budget");
    }
    const Integer pm = ipow(p, static_cast<unsigned long>(m));
    const Integer pm1 = pm * p;
    struct Child {
      std::vector<std::size_t> open;
      Integer digit;
    };
    std::vector<Child> children;
    Integer limit = std::min<Integer>(p, Integer(options.digit_scan_limit));
    for (Integer d = 0; d < limit; ++d) {
      Integer next = r + d * pm;
      std::vector<std::size_t> still;
      for (std::size_t i : open) {
        if (eval_mod(avoid[i], next, pm1) == 0) still.push_back(i);
      }
      if (still.empty()) return run(m + 1, next, still);
      children.push_back({std::move(still), d});
    }
    std::stable_sort(children.begin(), children.end(),
                     [](const Child& a, const Child& b) { return a.open.size() < b.open.size(); });
    for (const Child& child : children) {
      if (auto found = run(m + 1, r + child.digit * pm, child.open)) return found;
    }
    return std::nullopt;
  }
};

}  // namespace

PadicComponent refine(const PadicComponent& c, std::span<const IntPoly> avoid, int target,
                      const RefineOptions& options) {
  if (c.is_exact()) throw Error(Errc::precondition, "refine needs an approximate component");
  const auto& a = c.as_approx();
  const Integer modulus = c.modulus();
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < avoid.size(); ++i) {
    if (avoid[i].is_zero()) throw Error(Errc::precondition, "cannot avoid the zero polynomial");
    if (eval_mod(avoid[i], a.residue, modulus) == 0) open.push_back(i);
  }
  DigitSearch search{c.prime(), avoid, target, options};
  auto found = search.run(a.precision, a.residue, open);
  if (!found) {
    throw Error(Errc::valuation_unresolvable,
                "no digit path within depth " + std::to_string(options.depth_cap) + " at p = " +
                    c.prime().get_str());
  }
  return PadicComponent::approx(c.prime(), found->precision, found->residue);
}

CrtSolution crt_solve(std::span<const Congruence> system) {
  for (std::size_t i = 0; i < system.size(); ++i) {
    if (system[i].modulus <= 0) throw Error(Errc::precondition, "CRT modulus must be positive");
    for (std::size_t j = i + 1; j < system.size(); ++j) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), system[i].modulus.get_mpz_t(), system[j].modulus.get_mpz_t());
      if (g != 1) {
        throw Error(Errc::non_coprime_moduli, "moduli " + system[i].modulus.get_str() + " and " +
                                                  system[j].modulus.get_str() + " share a factor");
      }
    }
  }
  Integer x = 0, m = 1;
  for (const Congruence& c : system) {
    Integer inv;
    Integer m_mod = mod(m, c.modulus);
    if (c.modulus == 1) continue;
    mpz_invert(inv.get_mpz_t(), m_mod.get_mpz_t(), c.modulus.get_mpz_t());
    Integer t = mod((c.residue - x) * inv, c.modulus);
    x += m * t;
    m *= c.modulus;
  }
  x = mod(x, m);
  for (const Congruence& c : system) {
    if (mod(x - c.residue, c.modulus) != 0) {
      throw Error(Errc::ledger_violation, "CRT solution failed verification");
    }
  }
  return {x, m};
}

}  // namespace rtau
