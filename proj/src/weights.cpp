#include "rrw/weights.hpp"

#include <map>
#include <stdexcept>

namespace rrw {

long long fibonacci(int n) {
  if (n < 0) throw std::invalid_argument("fibonacci index must be >= 0");
  if (n > 90) throw std::invalid_argument("fibonacci index too large");
  long long prev = 0, cur = 1;  // F_0, F_1
  for (int i = 0; i < n; ++i) {
    long long next = prev + cur;
    prev = cur;
    cur = next;
  }
  return prev;
}

long long box_fillings(int n) {
  if (n < 0) throw std::invalid_argument("box count must be >= 0");
  if (n > 25) throw std::invalid_argument("box scan limited to n <= 25");
  long long count = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    // Bit set = box filled; reject two adjacent empties.
    bool ok = true;
    for (int i = 0; i + 1 < n; ++i)
      if (!(mask >> i & 1) && !(mask >> (i + 1) & 1)) {
        ok = false;
        break;
      }
    if (ok) ++count;
  }
  return count;
}

const char* weight_kind_tag(WeightKind kind) {
  switch (kind) {
    case WeightKind::OmegaSymbolic: return "OMEGA_SYMBOLIC";
    case WeightKind::Omega1: return "OMEGA1";
    case WeightKind::Omega2: return "OMEGA2";
    case WeightKind::Omega3: return "OMEGA3";
    case WeightKind::Omega4: return "OMEGA4";
    case WeightKind::Omega5: return "OMEGA5";
    case WeightKind::Omega6: return "OMEGA6";
    case WeightKind::Omega7: return "OMEGA7";
    case WeightKind::TheoremA: return "THEOREM_A";
    case WeightKind::TheoremB: return "THEOREM_B";
  }
  throw std::invalid_argument("bad weight kind");
}

const std::vector<WeightKind>& all_weight_kinds() {
  static const std::vector<WeightKind> kinds = {
      WeightKind::OmegaSymbolic, WeightKind::Omega1,   WeightKind::Omega2,
      WeightKind::Omega3,        WeightKind::Omega4,   WeightKind::Omega5,
      WeightKind::Omega6,        WeightKind::Omega7,   WeightKind::TheoremA,
      WeightKind::TheoremB,
  };
  return kinds;
}

WeightKind parse_weight_kind(const std::string& tag) {
  for (WeightKind k : all_weight_kinds())
    if (tag == weight_kind_tag(k)) return k;
  throw std::invalid_argument("unknown weight kind '" + tag + "'");
}

LaurentPoly chain_weight(const Chain& ch) {
  if (ch.least < 1 || ch.length < 1)
    throw std::invalid_argument("bad chain");
  const LaurentPoly a = var_a(), b = var_b(), c = var_c();
  const int l = ch.length;
  if (ch.even()) return c.pow(l - 1) * (c + a * b);

  // a^l + (1+c) * sum_{k=1}^{l-1} a^k b^(l-k) + b^l, doubled by another
  // (1+c) factor when the least part exceeds 1.
  LaurentPoly mid;
  for (int k = 1; k <= l - 1; ++k) mid += a.pow(k) * b.pow(l - k);
  LaurentPoly core = a.pow(l) + (LaurentPoly(1) + c) * mid + b.pow(l);
  if (ch.least == 1) return core;
  return (LaurentPoly(1) + c) * core;
}

LaurentPoly symbolic_weight(const Partition& p) {
  LaurentPoly w(1);
  for (const Chain& ch : p.chains()) w *= chain_weight(ch);
  return w;
}

namespace {

long long pow2(int k) {
  if (k < 0 || k > 62) throw std::invalid_argument("bad power of two");
  return 1LL << k;
}

long long string_weight(const StringBlock& s, WeightKind kind) {
  const int eta = s.eta;
  switch (kind) {
    case WeightKind::Omega5:
      return fibonacci(s.contains(1) ? eta + 2 : eta + 3);
    case WeightKind::Omega6:
      if (s.least() >= 3) return fibonacci(eta + 3);
      if (s.contains(2) || (s.contains(1) && !s.contains(3) && !s.contains(4)))
        return fibonacci(eta + 2);
      return fibonacci(eta + 1);  // 1 together with 3 or 4
    case WeightKind::Omega7:
      if (s.least() >= 4) return fibonacci(eta + 3);
      if (s.contains(3) || (s.contains(2) && !s.contains(4) && !s.contains(5)))
        return fibonacci(eta + 2);
      return fibonacci(eta + 1);  // 2 together with 4 or 5
    default:
      throw std::invalid_argument("not a string weight");
  }
}

}  // namespace

long long integer_weight(const Partition& p, WeightKind kind) {
  switch (kind) {
    case WeightKind::OmegaSymbolic:
      throw std::domain_error("symbolic weight is not an integer");

    case WeightKind::Omega1:
      if (!p.all_parts_odd())
        throw std::domain_error("OMEGA1 requires all parts odd");
      return pow2(p.distinct_values());

    case WeightKind::Omega2: {
      if (!p.gaps_at_least_2_no_ones())
        throw std::domain_error("OMEGA2 requires gaps >= 2 and no part 1");
      int r = 0;
      for (const Chain& ch : p.chains())
        if (ch.even() && ch.least > 2) ++r;
      return pow2(r);
    }

    case WeightKind::Omega3:
    case WeightKind::TheoremA: {
      if (!p.gaps_at_least_2())
        throw std::domain_error("weight requires gaps >= 2");
      int k = 0;
      for (const Chain& ch : p.chains())
        if (!ch.even() && ch.least > 1) ++k;
      return pow2(k);
    }

    case WeightKind::Omega4: {
      if (!p.gaps_at_least_2())
        throw std::domain_error("weight requires gaps >= 2");
      int r = 0;
      for (const Chain& ch : p.chains())
        if (ch.even()) ++r;
      return pow2(r);
    }

    case WeightKind::TheoremB: {
      if (!p.gaps_at_least_2())
        throw std::domain_error("weight requires gaps >= 2");
      long long w = 1;
      for (const Chain& ch : p.chains()) {
        if (ch.even())
          w *= 2;
        else
          w *= (ch.least == 1 ? 2LL : 4LL) * ch.length;
      }
      return w;
    }

    case WeightKind::Omega5:
    case WeightKind::Omega6: {
      if (!p.gaps_at_least_2())
        throw std::domain_error("weight requires gaps >= 2");
      long long w = 1;
      for (const StringBlock& s : p.strings()) w *= string_weight(s, kind);
      return w;
    }

    case WeightKind::Omega7: {
      if (!p.gaps_at_least_2_no_ones())
        throw std::domain_error("OMEGA7 requires gaps >= 2 and no part 1");
      long long w = 1;
      for (const StringBlock& s : p.strings()) w *= string_weight(s, kind);
      return w;
    }
  }
  throw std::invalid_argument("bad weight kind");
}

}  // namespace rrw
