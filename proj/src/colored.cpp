#include "rrw/colored.hpp"

#include <algorithm>
#include <stdexcept>

namespace rrw {

bool is_secondary(Color col) {
  return col == Color::ab || col == Color::ac || col == Color::bc;
}

const char* color_name(Color col) {
  switch (col) {
    case Color::a: return "a";
    case Color::b: return "b";
    case Color::c: return "c";
    case Color::ab: return "ab";
    case Color::ac: return "ac";
    case Color::bc: return "bc";
  }
  throw std::invalid_argument("bad color");
}

LaurentPoly color_monomial(Color col) {
  switch (col) {
    case Color::a: return var_a();
    case Color::b: return var_b();
    case Color::c: return var_c();
    case Color::ab: return var_a() * var_b();
    case Color::ac: return var_a() * var_c();
    case Color::bc: return var_b() * var_c();
  }
  throw std::invalid_argument("bad color");
}

int position(const ColorSymbol& s) {
  if (s.value < 1) throw std::invalid_argument("colored integer must be >= 1");
  if (s.value < 2 && is_secondary(s.color))
    throw std::invalid_argument("secondary colors start at value 2");
  switch (s.color) {
    case Color::ab: return 6 * s.value - 6;
    case Color::ac: return 6 * s.value - 5;
    case Color::a: return 6 * s.value - 4;
    case Color::bc: return 6 * s.value - 3;
    case Color::b: return 6 * s.value - 2;
    case Color::c: return 6 * s.value - 1;
  }
  throw std::invalid_argument("bad color");
}

std::optional<ColorSymbol> symbol_at_position(int pos) {
  if (pos < 2 || pos == 3) return std::nullopt;
  switch (pos % 6) {
    case 0: return ColorSymbol{pos / 6 + 1, Color::ab};
    case 1: return ColorSymbol{(pos + 5) / 6, Color::ac};
    case 2: return ColorSymbol{(pos + 4) / 6, Color::a};
    case 3: return ColorSymbol{(pos + 3) / 6, Color::bc};
    case 4: return ColorSymbol{(pos + 2) / 6, Color::b};
    case 5: return ColorSymbol{(pos + 1) / 6, Color::c};
  }
  return std::nullopt;
}

int standard_value(const ColorSymbol& s) { return position(s); }

int quadratic_value(const ColorSymbol& s) {
  position(s);  // validate
  switch (s.color) {
    case Color::a:
    case Color::b:
    case Color::ac:
    case Color::bc:
      return 2 * s.value - 1;
    case Color::c:
      return 2 * s.value;
    case Color::ab:
      return 2 * s.value - 2;
  }
  throw std::invalid_argument("bad color");
}

int transformed_value(const ColorSymbol& s, Transform t) {
  switch (t) {
    case Transform::Word:
      position(s);  // validate
      return s.value;
    case Transform::Standard:
      return standard_value(s);
    case Transform::Quadratic:
      return quadratic_value(s);
  }
  throw std::invalid_argument("bad transform");
}

LaurentPoly ColoredPartition::monomial() const {
  LaurentPoly m(1);
  for (const ColorSymbol& s : symbols) m *= color_monomial(s.color);
  return m;
}

long long ColoredPartition::value_sum(Transform t) const {
  long long n = 0;
  for (const ColorSymbol& s : symbols) n += transformed_value(s, t);
  return n;
}

std::string ColoredPartition::str() const {
  if (symbols.empty()) return "()";
  std::string out;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i) out += " + ";
    out += std::to_string(symbols[i].value);
    out += '_';
    out += color_name(symbols[i].color);
  }
  return out;
}

namespace {

// Largest position whose transformed value can still fit in `remaining`.
int position_cap(int remaining, Transform t) {
  switch (t) {
    case Transform::Word:
      return 6 * remaining - 1;
    case Transform::Standard:
      return remaining;
    case Transform::Quadratic:
      return 3 * remaining + 1;
  }
  return 0;
}

struct Type1Enumerator {
  Transform t;
  const std::function<void(const ColoredPartition&)>& emit;
  std::vector<ColorSymbol> syms;

  void rec(int remaining, int maxpos) {
    if (remaining == 0) {
      emit(ColoredPartition{syms});
      return;
    }
    int top = std::min(maxpos, position_cap(remaining, t));
    for (int p = top; p >= 2; --p) {
      auto s = symbol_at_position(p);
      if (!s) continue;
      int v = transformed_value(*s, t);
      if (v > remaining) continue;
      syms.push_back(*s);
      rec(remaining - v, p - 6 - (is_secondary(s->color) ? 1 : 0));
      syms.pop_back();
    }
  }
};

}  // namespace

void enumerate_type1(int n, Transform t,
                     const std::function<void(const ColoredPartition&)>& emit) {
  if (n < 0) throw std::invalid_argument("total must be >= 0");
  Type1Enumerator e{t, emit, {}};
  e.rec(n, position_cap(n, t));
}

long long count_type1(int n, Transform t) {
  long long cnt = 0;
  enumerate_type1(n, t, [&](const ColoredPartition&) { ++cnt; });
  return cnt;
}

LaurentPoly type1_monomial_sum(int n, Transform t) {
  LaurentPoly sum;
  enumerate_type1(n, t,
                  [&](const ColoredPartition& cp) { sum += cp.monomial(); });
  return sum;
}

GoellnitzCounts goellnitz_counts(int n) {
  if (n < 0) throw std::invalid_argument("total must be >= 0");
  GoellnitzCounts out;
  // 0/1 knapsack over the admissible part values.
  std::vector<long long> dp(n + 1, 0);
  dp[0] = 1;
  for (int v = 1; v <= n; ++v) {
    int r = v % 6;
    if (r != 2 && r != 4 && r != 5) continue;
    for (int m = n; m >= v; --m) dp[m] += dp[m - v];
  }
  out.modular_distinct = dp[n];
  out.type1 = count_type1(n, Transform::Standard);
  return out;
}

std::map<ColorCounts, long long> refined_counts(int n, Transform t) {
  std::map<ColorCounts, long long> out;
  enumerate_type1(n, t, [&](const ColoredPartition& cp) {
    ColorCounts key{};
    for (const ColorSymbol& s : cp.symbols) ++key[static_cast<int>(s.color)];
    ++out[key];
  });
  return out;
}

std::map<TripleKey, long long> vector_counts(int n) {
  if (n < 0) throw std::invalid_argument("total must be >= 0");
  // d[m][j]: partitions of m into j distinct parts.
  int jmax = 0;
  while (triangular(jmax + 1) <= n) ++jmax;
  std::vector<std::vector<long long>> d(n + 1,
                                        std::vector<long long>(jmax + 1, 0));
  d[0][0] = 1;
  for (int v = 1; v <= n; ++v)
    for (int m = n; m >= v; --m)
      for (int j = jmax; j >= 1; --j) d[m][j] += d[m - v][j - 1];

  std::map<TripleKey, long long> out;
  for (int m1 = 0; m1 <= n; ++m1)
    for (int m2 = 0; m1 + m2 <= n; ++m2) {
      int m3 = n - m1 - m2;
      for (int i = 0; i <= jmax; ++i) {
        if (!d[m1][i]) continue;
        for (int j = 0; j <= jmax; ++j) {
          if (!d[m2][j]) continue;
          for (int k = 0; k <= jmax; ++k) {
            if (!d[m3][k]) continue;
            out[TripleKey{i, j, k}] += d[m1][i] * d[m2][j] * d[m3][k];
          }
        }
      }
    }
  return out;
}

}  // namespace rrw
