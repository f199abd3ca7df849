#ifndef RTAU_CONSTRUCT_HPP
#define RTAU_CONSTRUCT_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "rtau/integer.hpp"
#include "rtau/padic.hpp"
#include "rtau/polyq.hpp"
#include "rtau/tau.hpp"

namespace rtau {

/// Strictly increasing nonempty tuple of positive integers (d_1 < ... < d_l);
/// d_0 = 0 is implicit.
class DiffTuple {
 public:
  /// Throws NotIncreasing unless the values are positive and strictly increasing.
  explicit DiffTuple(std::vector<Integer> values);
  DiffTuple(std::initializer_list<long> values);

  std::size_t length() const noexcept { return d_.size(); }  // l
  const Integer& last() const noexcept { return d_.back(); }
  std::span<const Integer> values() const noexcept { return d_; }
  /// (0, d_1, ..., d_l)
  std::vector<Integer> with_zero() const;

  friend bool operator==(const DiffTuple&, const DiffTuple&) = default;

 private:
  std::vector<Integer> d_;
};

/// For every prime p <= l+1, {0, d_1, ..., d_l} misses a residue class mod p.
bool check_S(const DiffTuple& d);

/// Primes p <= bound such that f has a root modulo p.
std::vector<Integer> sf_primes(const IntPoly& f, std::uint64_t bound);

/// Pairwise disjoint T_f inside S_f, `quota` primes each, claimed greedily in
/// list order over primes <= bound. Throws QuotaUnmet naming the first
/// polynomial left short.
std::vector<std::vector<Integer>> assign_T(std::span<const IntPoly> fs, std::size_t quota, std::uint64_t bound);

/// tau_p = z with p | f(z) for every p in T_f over the first `count` members
/// of I; all other coordinates are Exact(0).
TauState build_justprimes(std::size_t count, std::size_t quota, std::uint64_t bound);

struct LargePrimesWitness {
  Integer r;
  Integer a;
  std::vector<Integer> primes;  // p_0 .. p_l, ascending, p_i paired with d_i
  Integer product;              // p = prod p_i
};

struct SearchLimits {
  std::uint64_t prime_scan_cap = 1000000;
};

/// Witness data making x^n + k p x + a + d_i Eisenstein at p_i for every k,
/// with r^n + k p r + a + d_i and f(r) (f in F) coprime to p. The witness is
/// verified before it is returned.
LargePrimesWitness lemma_largeprimes(std::span<const IntPoly> F, unsigned long n, const DiffTuple& d,
                                     const std::function<bool(const Integer&)>& available,
                                     const SearchLimits& limits = {});

/// Independent check of the three witness properties for k in [0, k_max].
bool verify_largeprimes(const LargePrimesWitness& w, std::span<const IntPoly> F, unsigned long n,
                        const DiffTuple& d, unsigned long k_max = 10);

struct KProgression {
  Integer k0;       // least admissible k >= 1
  Integer modulus;  // every k = k0 mod modulus outside `excluded` is admissible
  std::set<Integer> excluded;

  /// The i-th admissible member (i = 0 gives k0).
  Integer member(std::size_t i) const;
};

/// k with q not dividing c_q^n + k p c_q + a + d_i for every q and i.
/// Requires check_S(d), q not dividing p, 1 <= c_q < q. Throws NoResidue if
/// some q admits no class.
KProgression lemma_manyk(const std::map<Integer, Integer>& constraints, const Integer& p, const DiffTuple& d,
                         const Integer& a, unsigned long n, const std::set<Integer>& excluded = {});

struct IotaCell {
  std::optional<DiffTuple> branch;  // nullopt is the empty branch
  unsigned long n;                  // >= 2
};

/// Anti-diagonal pairing of N onto (rows) x {2, 3, ...}, rows ordered
/// (empty, D[0], D[1], ...); within a diagonal the column ascends.
/// `rows` counts D only; nullopt means an unbounded stream of tuples.
std::pair<std::size_t, unsigned long> iota_index(std::uint64_t m, std::optional<std::size_t> rows);
IotaCell iota(std::uint64_t m, std::span<const DiffTuple> D);

/// Source of difference tuples for build_main; `count` is nullopt for an
/// unbounded stream, in which case `at` must serve every index.
struct DiffSource {
  std::optional<std::size_t> count;
  std::function<DiffTuple(std::size_t)> at;
};

struct BuildOptions {
  SearchLimits limits;
  RefineOptions refine;
};

TauState build_sparse(std::size_t stages, std::uint64_t seed, const BuildOptions& options = {});

TauState build_main(std::span<const DiffTuple> D, std::size_t stages, std::uint64_t seed,
                    const BuildOptions& options = {});
TauState build_main(const DiffSource& D, std::size_t stages, std::uint64_t seed, const BuildOptions& options = {});

/// Runs `more` further stages on a state produced by build_sparse/build_main.
TauState continue_sparse(TauState tau, std::size_t more, const BuildOptions& options = {});
TauState continue_main(TauState tau, const DiffSource& D, std::size_t more, const BuildOptions& options = {});

struct ProgressionCertificate {
  RTauElem base;  // x^n + k p x + a
  DiffTuple diffs;
  LargePrimesWitness witness;
  Integer k;
  unsigned long degree;
  std::vector<std::size_t> ledger_indices;  // base + d_i for i = 0..l
};

/// Progressions recorded in a main-builder ledger, in creation order.
std::vector<ProgressionCertificate> progressions(const TauState& tau);

}  // namespace rtau

#endif  // RTAU_CONSTRUCT_HPP
