#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rrw/partitions.hpp"
#include "rrw/polyq.hpp"
#include "rrw/weights.hpp"

namespace rrw {

// Every verification procedure the library ships. Each id names one closed
// check with a bound parameter: q-order for series comparisons, maximum n for
// counting identities, maximum L for the bounded ones.
enum class TheoremId {
  T1,
  Jtp,
  FiniteJtp,
  Sylvester,
  ThmA,
  ThmB,
  KeyIdentity,
  Goellnitz,
  ThmC,
  Eq510,
  ThmR,
  ThmRPrime,
  T2,
  T3,
  T4,
  T5,
  T6,
  T7,
  Lebesgue,
  FiniteLebesgue,
  Surjection,
};

const char* theorem_tag(TheoremId id);
TheoremId parse_theorem_id(const std::string& tag);
const std::vector<TheoremId>& all_theorem_ids();
int default_bound(TheoremId id);

struct CaseResult {
  long long index = 0;
  std::string lhs;
  std::string rhs;
  bool match = false;
};

struct Report {
  TheoremId id;
  int bound = 0;
  std::vector<CaseResult> cases;
  bool passed = false;  // true iff every case matches
};

// Weighted gap >= 2 sum against the coefficient of q^n in the three-factor
// product; the product coefficient is cross-checked against direct
// enumeration of vector partitions and a disagreement throws.
std::pair<LaurentPoly, LaurentPoly> theorem1_sides(int n);
QSeries theorem1_product(int order);
LaurentPoly theorem1_vector_poly(int n);

// 1 + sum over n >= 1 of (s^n + s^-n) q^(n^2), truncated.
QSeries theta_series(Sym s, int order);
std::pair<QSeries, QSeries> jtp_sides(int order);

// k -> (odd-part partitions with k distinct values, distinct-part partitions
// whose parts form k maximal runs of consecutive integers).
std::map<int, std::pair<long long, long long>> sylvester_counts(int n);
// Dilated weighted form, as polynomials in x = ab: sum of (1+x)^(distinct
// values) over parts congruent 2 mod 4 against sum of (1+x)^(chain count)
// over gap >= 2 partitions with all parts even.
std::pair<LaurentPoly, LaurentPoly> sylvester_weighted(int n);

std::pair<long long, long long> thmA_sides(int n);
std::pair<long long, long long> thmB_sides(int n);

std::pair<QSeries, QSeries> key_identity_sides(int order);

// Partitions of n into parts not congruent to 0 or +-i mod k. Rejected when
// 2i = k, where the product below has a doubled factor instead.
long long modular_count(int n, int k, int i);
// (q^k;q^k) (q^i;q^k) (q^(k-i);q^k) / (q;q), all infinite, truncated.
QSeries modular_gf(int k, int i, int order);
// Partitions of n whose successive ranks all lie in [2-i, k-i-2].
long long rank_count(int n, int k, int i);

long long weighted_rr_sum(int n, WeightKind kind);
// Sum of (-1)^(parts divisible by 3) over all partitions of n.
long long signed_unrestricted(int n);

// Number of partitions with ranks in the (k,i) window whose hook partition
// equals target; target must have gaps >= 2.
long long preimage_count(const Partition& target, int k, int i);

// The six rank windows and the weight kind whose per-target weight counts
// the window preimages of each target.
struct SurjectionPair {
  int k;
  int i;
  WeightKind kind;
};
const std::vector<SurjectionPair>& surjection_pairs();

// Bounded identities; all Gaussian binomials in base q^2, coefficients
// Laurent in A.
std::pair<QSeries, QSeries> finite_jtp_sides(int L, int order);
std::pair<QSeries, QSeries> finite_lebesgue_sides(int L, int order);
std::pair<QSeries, QSeries> lebesgue_sides(int order);

Report verify(TheoremId id, int bound);
Report verify(TheoremId id);  // default_bound(id)

}  // namespace rrw
