#pragma once

#include <functional>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

namespace rrw {

class Partition;

// Maximal run of parts whose consecutive differences are exactly 2, inside a
// partition with all gaps >= 2. Every part of a chain has the parity of
// `least`, and adjacent chains are separated by a gap of at least 3.
struct Chain {
  int least = 0;
  int length = 0;
  bool even() const { return least % 2 == 0; }
  bool operator==(const Chain&) const = default;
};

// Maximal run of parts with consecutive differences 2 or 3; eta counts the
// differences equal to 3. Adjacent blocks are separated by a gap >= 4.
struct StringBlock {
  std::vector<int> parts;  // increasing
  int eta = 0;
  int least() const { return parts.front(); }
  bool contains(int v) const;
  bool operator==(const StringBlock&) const = default;
};

/* Durfee-square diagonal data. For a partition p with conjugate p', cell i of
   the diagonal (1-based, i <= durfee) has

     hook  h_i = p_i + p'_i - 2i + 1,
     rank  r_i = p_i - p'_i.

   The hooks satisfy h_i - h_(i+1) >= 2 and sum to |p|; h_i - r_i is odd. */
struct RankProfile {
  int durfee = 0;
  std::vector<int> hooks;
  std::vector<int> ranks;
  Partition hook_partition() const;
};

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  // "7,4,2" with parts largest first; an empty string is the empty partition.
  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int size() const { return static_cast<int>(parts_.size()); }
  long long sum() const;
  int distinct_values() const;
  // Parts divisible by 3, counted with multiplicity.
  int multiples_of_3() const;

  Partition conjugate() const;
  RankProfile rank_profile() const;

  bool has_distinct_parts() const;
  bool all_parts_odd() const;
  bool all_parts_even() const;
  bool gaps_at_least_2() const;
  bool gaps_at_least_2_no_ones() const;

  // Both require gaps_at_least_2(); blocks are returned in decreasing order
  // of least part, and concatenating them recovers every part.
  std::vector<Chain> chains() const;
  std::vector<StringBlock> strings() const;

  std::string str() const;
  bool operator==(const Partition&) const = default;
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

 private:
  std::vector<int> parts_;  // weakly decreasing, all >= 1
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

enum class FilterKind { All, Distinct, OddParts, RR, RR2, PartsAllowed, RanksIn };

/* Constraint on the partitions an enumeration visits. RR is the gap >= 2
   condition, RR2 additionally forbids part 1. PartsAllowed restricts part
   values to residue classes; RanksIn keeps partitions whose diagonal ranks
   all lie in a window (the empty partition passes vacuously). */
class PartitionFilter {
 public:
  static PartitionFilter all();
  static PartitionFilter distinct();
  static PartitionFilter odd_parts();
  static PartitionFilter rr();
  static PartitionFilter rr2();
  static PartitionFilter parts_allowed(int modulus, std::set<int> residues);
  static PartitionFilter ranks_in(int lo, int hi);

  FilterKind kind() const { return kind_; }
  int rank_lo() const { return lo_; }
  int rank_hi() const { return hi_; }
  bool residue_ok(int v) const;

 private:
  explicit PartitionFilter(FilterKind k) : kind_(k) {}
  FilterKind kind_;
  int modulus_ = 0;
  std::set<int> residues_;
  int lo_ = 0;
  int hi_ = 0;
};

/* Visits every partition of n passing the filter, in reverse lexicographic
   order (largest first part first; [4], [3,1], [2,2], [2,1,1], [1,1,1,1]).
   The order is deterministic, so enumeration doubles as a stable listing. */
void enumerate_partitions(int n, const PartitionFilter& filter,
                          const std::function<void(const Partition&)>& emit);

std::vector<Partition> list_partitions(int n, const PartitionFilter& filter);
long long count_partitions(int n, const PartitionFilter& filter);

}  // namespace rrw
