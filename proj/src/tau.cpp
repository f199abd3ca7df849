#include "rtau/tau.hpp"

#include <algorithm>

#include "rtau/errors.hpp"

namespace rtau {

std::string_view to_string(BuilderKind kind) noexcept {
  switch (kind) {
    case BuilderKind::exact: return "exact";
    case BuilderKind::justprimes: return "justprimes";
    case BuilderKind::sparse: return "sparse";
    case BuilderKind::main: return "main";
  }
  return "exact";
}

BuilderKind parse_builder_kind(std::string_view text) {
  if (text == "exact") return BuilderKind::exact;
  if (text == "justprimes") return BuilderKind::justprimes;
  if (text == "sparse") return BuilderKind::sparse;
  if (text == "main") return BuilderKind::main;
  throw Error(Errc::parse_error, "unknown builder kind '" + std::string(text) + "'");
}

TauState TauState::all_exact(const Integer& z) {
  TauState tau;
  tau.kind = BuilderKind::exact;
  tau.default_exact = z;
  return tau;
}

std::optional<PadicComponent> TauState::component_at(const Integer& p) const {
  if (auto it = components.find(p); it != components.end()) return it->second;
  if (default_exact) return PadicComponent::exact(p, *default_exact);
  return std::nullopt;
}

Integer TauState::least_undefined_prime() const {
  if (default_exact) throw Error(Errc::precondition, "every coordinate is defined");
  Integer p = 2;
  while (components.count(p)) p = next_prime(p);
  return p;
}

const LedgerEntry* TauState::find_tracked(const IntPoly& g) const {
  for (const LedgerEntry& e : ledger) {
    if (e.f == g) return &e;
  }
  return nullptr;
}

std::vector<IntPoly> TauState::ledger_polys() const {
  std::vector<IntPoly> out;
  out.reserve(ledger.size());
  for (const LedgerEntry& e : ledger) out.push_back(e.f);
  return out;
}

ValuationResult settled_valuation(TauState& tau, const IntPoly& g, const Integer& p, const RefineOptions& options) {
  auto it = tau.components.find(p);
  if (it == tau.components.end()) {
    if (!tau.default_exact) throw Error(Errc::unknown_component, "tau_" + p.get_str() + " is undefined");
    return valuation(g, PadicComponent::exact(p, *tau.default_exact));
  }
  ValuationResult v = valuation(g, it->second);
  if (v.kind != ValuationResult::Kind::need_more_precision) return v;
  std::vector<IntPoly> avoid = tau.ledger_polys();
  avoid.push_back(g);
  it->second = refine(it->second, avoid, static_cast<int>(v.value), options);
  return valuation(g, it->second);
}

namespace {

int rank(Certainty::Kind k) {
  switch (k) {
    case Certainty::Kind::certified_false: return 0;
    case Certainty::Kind::unknown: return 1;
    case Certainty::Kind::promised: return 2;
    case Certainty::Kind::certified_true: return 3;
  }
  return 0;
}

// Divides out every explicitly defined prime of tau from n.
Integer strip_defined(Integer n, const TauState& tau) {
  n = abs(n);
  for (const auto& [p, c] : tau.components) {
    if (n == 1) break;
    mpz_remove(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
  }
  return n;
}

Integer least_prime_factor(const Integer& n) { return factor(n).factors.front().first; }

IntPoly positive_primitive(const IntPoly& g) {
  IntPoly p = content_primitive(g).primitive;
  return p.leading() < 0 ? -p : p;
}

bool value_matches(const ValuationResult& v, unsigned long required) {
  return v.is_determined() && v.value == required;
}

void note_refinement(const TauState& before, const TauState& after, Verdict& verdict) {
  for (const auto& [p, c] : after.components) {
    auto it = before.components.find(p);
    if (it != before.components.end() && !(it->second == c)) verdict.refined.push_back(p);
  }
}

}  // namespace

Certainty conjunction(const Certainty& a, const Certainty& b) {
  int ra = rank(a.kind), rb = rank(b.kind);
  if (ra != rb) return ra < rb ? a : b;
  if (a.kind == Certainty::Kind::unknown) return *a.needed_prime <= *b.needed_prime ? a : b;
  return a;
}

std::string to_string(const Certainty& c) {
  switch (c.kind) {
    case Certainty::Kind::certified_true: return "CertifiedTrue";
    case Certainty::Kind::certified_false: return "CertifiedFalse";
    case Certainty::Kind::promised: return "Promised";
    case Certainty::Kind::unknown: return "Unknown(" + c.needed_prime->get_str() + ")";
  }
  return "Unknown";
}

Answer membership(const RTauElem& f, TauState tau) {
  const TauState before = tau;
  Verdict verdict;
  verdict.certainty = Certainty::certified(true);
  if (f.den() != 1) {
    for (const auto& [p, e] : factor(f.den()).factors) {
      if (!tau.is_defined(p)) {
        verdict.certainty = conjunction(verdict.certainty, Certainty::unknown(p));
        continue;
      }
      ValuationResult v = settled_valuation(tau, f.num(), p);
      verdict.evidence.push_back({p, v, e});
      bool ok = v.kind == ValuationResult::Kind::infinite || (v.is_determined() && v.value >= e);
      if (!ok) verdict.certainty = Certainty::certified(false);
    }
  }
  note_refinement(before, tau, verdict);
  return {std::move(verdict), std::move(tau)};
}

Answer is_unit_adeles(const RTauElem& f, TauState tau) {
  const TauState before = tau;
  Verdict verdict;
  verdict.certainty = Certainty::certified(true);
  if (f.num().is_zero()) {
    verdict.certainty = Certainty::certified(false);
    return {std::move(verdict), std::move(tau)};
  }

  std::vector<Integer> defined;
  for (const auto& [p, c] : tau.components) defined.push_back(p);
  for (const Integer& p : defined) {
    ValuationResult v = settled_valuation(tau, f.num(), p);
    unsigned long required = valuation_of(f.den(), p);
    if (!value_matches(v, required)) {
      verdict.evidence.push_back({p, v, required});
      verdict.certainty = Certainty::certified(false);
    } else if (required != 0) {
      verdict.evidence.push_back({p, v, required});
    }
  }

  if (tau.default_exact) {
    Integer value = evaluate(f.num(), *tau.default_exact);
    if (value == 0) {
      verdict.certainty = Certainty::certified(false);
      verdict.note = "f vanishes at the default coordinate " + tau.default_exact->get_str();
    } else {
      Integer rest_value = strip_defined(value, tau);
      Integer rest_den = strip_defined(f.den(), tau);
      if (rest_value != rest_den) {
        verdict.certainty = Certainty::certified(false);
        verdict.note = "at the default coordinates num = " + value.get_str() + ", den = " + f.den().get_str();
      }
    }
  } else if (!f.is_constant()) {
    ContentSplit split = content_primitive(f.num());
    IntPoly prim = split.primitive.leading() < 0 ? -split.primitive : split.primitive;
    Integer bad = strip_defined(split.content * f.den(), tau);
    const LedgerEntry* tracked = tau.find_tracked(prim);
    if (tracked) verdict.ledger_match = static_cast<std::size_t>(tracked - tau.ledger.data());
    if (bad != 1) {
      verdict.certainty = conjunction(verdict.certainty, Certainty::unknown(least_prime_factor(bad)));
    } else if (tracked) {
      verdict.certainty = conjunction(verdict.certainty, Certainty::promised());
    } else {
      verdict.certainty = conjunction(verdict.certainty, Certainty::unknown(tau.least_undefined_prime()));
    }
  } else {
    // a constant is a unit everywhere iff it is +-1
    Integer bad = strip_defined(f.num().coeff(0) * f.den(), tau);
    if (bad != 1) verdict.certainty = Certainty::certified(false);
  }
  note_refinement(before, tau, verdict);
  return {std::move(verdict), std::move(tau)};
}

Answer is_prime(const RTauElem& f, TauState tau) {
  if (f.num().is_zero()) throw Error(Errc::precondition, "zero is not a prime candidate");
  if (f.is_constant()) {
    if (f.den() == 1 && abs(f.num().coeff(0)) == 1) throw Error(Errc::precondition, "units are not prime candidates");
    Verdict verdict;
    verdict.certainty = Certainty::certified(f.den() == 1 && is_prime(Integer(abs(f.num().coeff(0)))));
    return {std::move(verdict), std::move(tau)};
  }
  IntPoly prim = positive_primitive(f.num());
  IrreducibilityOptions options;
  if (const LedgerEntry* e = tau.find_tracked(prim); e && e->progression) {
    options.hint_primes = e->progression->witness_primes;
  }
  if (!irreducible_over_Z(prim, options)) {
    Verdict verdict;
    verdict.certainty = Certainty::certified(false);
    verdict.note = "reducible over Q";
    return {std::move(verdict), std::move(tau)};
  }
  Answer unit = is_unit_adeles(f, std::move(tau));
  unit.verdict.note = unit.verdict.note.empty() ? "irreducible over Q" : "irreducible over Q; " + unit.verdict.note;
  return unit;
}

RTauElem normalize_prime(const IntPoly& g, const TauState& tau) {
  if (g.is_constant() || g.leading() < 0) throw Error(Errc::precondition, "normalize_prime needs a member of I");
  const LedgerEntry* tracked = tau.find_tracked(g);
  if (!tau.default_exact && !tracked) {
    throw Error(Errc::unknown_component,
                "untracked polynomial; tau_" + tau.least_undefined_prime().get_str() + " is not promised");
  }
  Integer k = 1;
  for (const auto& [p, c] : tau.components) {
    ValuationResult v = valuation(g, c);
    if (v.kind == ValuationResult::Kind::infinite) {
      throw Error(Errc::infinite_valuation, "tau_" + p.get_str() + " is a root of " + format(g));
    }
    if (v.kind == ValuationResult::Kind::need_more_precision) {
      if (tracked) throw Error(Errc::ledger_violation, "ledger polynomial unsettled at " + p.get_str());
      throw Error(Errc::precondition, "valuation at " + p.get_str() + " needs more precision");
    }
    k *= ipow(p, v.value);
  }
  if (tau.default_exact) {
    Integer value = evaluate(g, *tau.default_exact);
    if (value == 0) {
      throw Error(Errc::infinite_valuation, "the default coordinate " + tau.default_exact->get_str() +
                                                " is a root of " + format(g));
    }
    k *= strip_defined(value, tau);
  }
  if (tracked && tracked->n != k) {
    throw Error(Errc::ledger_violation, "recorded n = " + tracked->n.get_str() + " but valuations give " + k.get_str());
  }
  return RTauElem(g, k);
}

PidReport pid_report(const TauState& tau) {
  if (tau.kind != BuilderKind::sparse && tau.kind != BuilderKind::main) {
    throw Error(Errc::precondition, "pid_report needs a sparse or main builder state");
  }
  PidReport report;
  report.defined_primes = tau.components.size();
  for (const auto& [p, c] : tau.components) {
    if (c.is_exact()) throw Error(Errc::ledger_violation, "exact component at " + p.get_str() + " in a builder state");
    if (tau.kind == BuilderKind::main && c.residue_mod_p() == 0) {
      throw Error(Errc::ledger_violation, "tau_" + p.get_str() + " is not a unit");
    }
  }
  for (std::size_t i = 0; i < tau.ledger.size(); ++i) {
    const LedgerEntry& e = tau.ledger[i];
    if (e.f.is_constant() || e.f.leading() <= 0 || content(e.f) != 1 || e.n < 1) {
      throw Error(Errc::ledger_violation, "ledger entry " + std::to_string(i) + " is not a normalized member of I");
    }
    PidEntry entry{i, e.f, e.n, {}};
    for (const auto& [p, c] : tau.components) {
      ValuationResult v = valuation(e.f, c);
      if (!v.is_determined()) {
        throw Error(Errc::ledger_violation, "valuation of " + format(e.f) + " at " + p.get_str() + " is unsettled");
      }
      if (v.value != valuation_of(e.n, p)) {
        throw Error(Errc::ledger_violation, format(e.f) + " has valuation " + std::to_string(v.value) + " at " +
                                                p.get_str() + " but n = " + e.n.get_str());
      }
      if (v.value > 0) entry.support.push_back(p);
    }
    if (strip_defined(e.n, tau) != 1) {
      throw Error(Errc::ledger_violation, "n = " + e.n.get_str() + " has a prime factor with undefined tau_p");
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

bool r0_prime_oracle(const RTauElem& f) {
  if (f.num().is_zero()) return false;
  if (f.is_constant()) return f.den() == 1 && is_prime(Integer(abs(f.num().coeff(0))));
  if (!irreducible_over_Z(content_primitive(f.num()).primitive)) return false;
  return abs(f.num().coeff(0)) == f.den();
}

}  // namespace rtau
