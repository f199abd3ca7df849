#ifndef RTAU_TAU_HPP
#define RTAU_TAU_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rtau/integer.hpp"
#include "rtau/padic.hpp"
#include "rtau/polyq.hpp"

namespace rtau {

enum class BuilderKind { exact, justprimes, sparse, main };

std::string_view to_string(BuilderKind kind) noexcept;
BuilderKind parse_builder_kind(std::string_view text);

/// Membership of a ledger entry in a realized prime progression
/// (x^n + k p x + a + d_i for the recorded witnesses).
struct ProgressionTag {
  std::int64_t group = 0;  // stage that created the progression
  std::vector<Integer> diffs;
  Integer offset;          // d_i of this member, 0 for the base
  unsigned long degree = 0;
  Integer r, a, k;
  std::vector<Integer> witness_primes;  // p_0 .. p_l

  friend bool operator==(const ProgressionTag&, const ProgressionTag&) = default;
};

/// A polynomial f of I with its fixed normalizer n_f: f / n_f is promised to
/// be a unit at every coordinate of tau.
struct LedgerEntry {
  IntPoly f;
  Integer n;
  std::int64_t stage = 0;
  std::optional<ProgressionTag> progression;

  RTauElem normalized() const { return RTauElem(f, n); }
  friend bool operator==(const LedgerEntry&, const LedgerEntry&) = default;
};

/// Finite approximation of tau together with the promise ledger.
/// Coordinates absent from `components` are undefined unless
/// `default_exact` is set, in which case they all equal that integer.
struct TauState {
  BuilderKind kind = BuilderKind::exact;
  std::uint64_t seed = 0;
  std::int64_t stage = 0;
  Integer s = 0;
  std::string pairing;  // description of the stage pairing, empty when unused
  std::vector<std::vector<Integer>> pairing_diffs;
  std::optional<Integer> default_exact;
  std::map<Integer, PadicComponent> components;
  std::vector<LedgerEntry> ledger;

  /// tau_p = z for every prime p.
  static TauState all_exact(const Integer& z);

  /// Explicit component, or the default one, or nothing.
  std::optional<PadicComponent> component_at(const Integer& p) const;
  bool is_defined(const Integer& p) const { return default_exact || components.count(p) != 0; }
  Integer least_undefined_prime() const;

  /// Ledger entry whose polynomial equals g, if any.
  const LedgerEntry* find_tracked(const IntPoly& g) const;
  std::vector<IntPoly> ledger_polys() const;

  friend bool operator==(const TauState&, const TauState&) = default;
};

/// Valuation of g at tau_p, refining the stored component in place when it
/// lacks precision. The refinement keeps every ledger polynomial settled.
ValuationResult settled_valuation(TauState& tau, const IntPoly& g, const Integer& p,
                                  const RefineOptions& options = {});

struct Certainty {
  enum class Kind { certified_true, certified_false, promised, unknown };
  Kind kind = Kind::certified_true;
  std::optional<Integer> needed_prime;  // set for unknown

  static Certainty certified(bool value) { return {value ? Kind::certified_true : Kind::certified_false, {}}; }
  static Certainty promised() { return {Kind::promised, {}}; }
  static Certainty unknown(Integer p) { return {Kind::unknown, std::move(p)}; }

  bool is_true() const noexcept { return kind == Kind::certified_true; }
  bool is_false() const noexcept { return kind == Kind::certified_false; }
  bool true_or_promised() const noexcept { return kind == Kind::certified_true || kind == Kind::promised; }
  friend bool operator==(const Certainty&, const Certainty&) = default;
};

/// False dominates, then Unknown (least prime), then Promised, then True.
Certainty conjunction(const Certainty& a, const Certainty& b);
std::string to_string(const Certainty& c);

struct PrimeEvidence {
  Integer p;
  ValuationResult valuation;
  unsigned long required = 0;  // v_p(den)
};

struct Verdict {
  Certainty certainty;
  std::vector<PrimeEvidence> evidence;
  std::optional<std::size_t> ledger_match;
  std::vector<Integer> refined;  // primes whose component gained precision
  std::string note;
};

/// A query result plus the snapshot it was answered against; the snapshot
/// differs from the input only by extra precision.
struct Answer {
  Verdict verdict;
  TauState state;
};

Answer membership(const RTauElem& f, TauState tau);
Answer is_unit_adeles(const RTauElem& f, TauState tau);
Answer is_prime(const RTauElem& f, TauState tau);

/// g / k with k = prod p^{e_p}. Throws InfiniteValuation when a coordinate is
/// an exact root of g, UnknownComponent when g is untracked and tau leaves
/// coordinates undefined.
RTauElem normalize_prime(const IntPoly& g, const TauState& tau);

struct PidEntry {
  std::size_t index;
  IntPoly f;
  Integer n;
  std::vector<Integer> support;  // defined primes with positive valuation on f
};

struct PidReport {
  std::vector<PidEntry> entries;
  std::size_t defined_primes = 0;
};

/// Checks every ledger invariant against the stored components and lists the
/// finite non-unit support of each entry. Throws LedgerViolation on failure.
PidReport pid_report(const TauState& tau);

/// Closed-form primality in R_0: prime integers, and non-constant
/// polynomials irreducible over Q whose constant term is +-1.
bool r0_prime_oracle(const RTauElem& f);

/// Stable text document for a state (field order fixed, version "1").
std::string serialize(const TauState& tau);
TauState deserialize(const std::string& text);

}  // namespace rtau

#endif  // RTAU_TAU_HPP
