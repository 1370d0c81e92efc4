#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rrw/polyq.hpp"

namespace rrw {

// Primary colors a, b, c and their products. Secondary-colored integers only
// exist from value 2 upward.
enum class Color : int { a = 0, b = 1, c = 2, ab = 3, ac = 4, bc = 5 };

bool is_secondary(Color col);
const char* color_name(Color col);
LaurentPoly color_monomial(Color col);

// The integer `value` carrying color `color`.
struct ColorSymbol {
  int value = 1;
  Color color = Color::a;
  bool operator==(const ColorSymbol&) const = default;
};

/* Placement of a colored integer on the common scale that encodes the gap
   conditions: for value n,

   ab -> 6n-6,  ac -> 6n-5,  a -> 6n-4,  bc -> 6n-3,  b -> 6n-2,  c -> 6n-1.

   Positions 1 and 3 (and anything below 2) do not occur because 1 only comes
   in the primary colors. */
int position(const ColorSymbol& s);

// Inverse of position(); std::nullopt for the excluded slots.
std::optional<ColorSymbol> symbol_at_position(int pos);

/* Three sizes attached to a colored integer:
   Word       its value,
   Standard   its position (distinct parts, residues 2,4,5 mod 6 primary and
              0,1,3 mod 6 secondary),
   Quadratic  2n-1 for a_n, b_n, ac_n, bc_n; 2n for c_n; 2n-2 for ab_n
              (gap >= 2 parts with colored multiplicities). */
enum class Transform { Word, Standard, Quadratic };

int standard_value(const ColorSymbol& s);
int quadratic_value(const ColorSymbol& s);
int transformed_value(const ColorSymbol& s, Transform t);

struct ColoredPartition {
  std::vector<ColorSymbol> symbols;  // strictly decreasing positions
  LaurentPoly monomial() const;      // product of the color monomials
  long long value_sum(Transform t) const;
  std::string str() const;
};

/* Visits every colored partition obeying the two-step gap rule -- consecutive
   positions differ by at least 6, strictly more when the larger symbol is
   secondary -- whose values under `t` sum to n. Symbols are chosen largest
   position first, so the enumeration order is deterministic. */
void enumerate_type1(int n, Transform t,
                     const std::function<void(const ColoredPartition&)>& emit);

long long count_type1(int n, Transform t);

// Sum of monomial() over the enumeration above.
LaurentPoly type1_monomial_sum(int n, Transform t);

struct GoellnitzCounts {
  // Partitions of n into distinct parts congruent to 2, 4 or 5 mod 6.
  long long modular_distinct = 0;
  // Colored partitions of n under the Standard size.
  long long type1 = 0;
};
GoellnitzCounts goellnitz_counts(int n);

// Multiplicities per color, indexed by Color.
using ColorCounts = std::array<int, 6>;
std::map<ColorCounts, long long> refined_counts(
    int n, Transform t = Transform::Standard);

/* Triples of distinct-part partitions with total n, keyed by their part
   counts (i, j, k). Components may be empty and parts are unrestricted
   positive integers. */
using TripleKey = std::array<int, 3>;
std::map<TripleKey, long long> vector_counts(int n);

}  // namespace rrw
