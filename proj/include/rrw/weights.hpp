#pragma once

#include <string>
#include <vector>

#include "rrw/partitions.hpp"
#include "rrw/polyq.hpp"

namespace rrw {

long long fibonacci(int n);

// Counts fillings of n boxes in a row with no two adjacent boxes empty, by
// scanning all 2^n assignments. Always equals fibonacci(n + 2).
long long box_fillings(int n);

/* The weight attached to one partition. OmegaSymbolic is the Laurent
   polynomial chain product; the rest are positive integers, each defined on
   its own domain:

     Omega1             odd parts                 2^(distinct values)
     Omega2             gaps >= 2, no part 1      2^(even chains, least > 2)
     Omega3 / TheoremA  gaps >= 2                 2^(odd chains, least > 1)
     Omega4             gaps >= 2                 2^(even chains)
     TheoremB           gaps >= 2                 product over chains
     Omega5..Omega7     strings, Fibonacci        product over strings */
enum class WeightKind {
  OmegaSymbolic,
  Omega1,
  Omega2,
  Omega3,
  Omega4,
  Omega5,
  Omega6,
  Omega7,
  TheoremA,
  TheoremB,
};

const char* weight_kind_tag(WeightKind kind);
WeightKind parse_weight_kind(const std::string& tag);
const std::vector<WeightKind>& all_weight_kinds();

LaurentPoly chain_weight(const Chain& ch);

// Product of chain_weight over the chains; requires gaps >= 2.
LaurentPoly symbolic_weight(const Partition& p);

// Integer weight kinds only; throws on OmegaSymbolic or a domain violation.
long long integer_weight(const Partition& p, WeightKind kind);

}  // namespace rrw
