#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rrw {

using Int = boost::multiprecision::cpp_int;

// Symbols the polynomial layer knows about. a, b, c carry the color data of
// the weighted partition identities; A is the free parameter of the theta and
// Lebesgue style sums.
enum class Sym : int { a = 0, b = 1, c = 2, A = 3 };

inline constexpr int num_syms = 4;
inline constexpr std::array<char, num_syms> sym_names = {'a', 'b', 'c', 'A'};

// Exponent vector of one monomial, indexed by Sym. Entries may be negative.
using Expo = std::array<int, num_syms>;

/* Sparse Laurent polynomial in a, b, c, A with exact integer coefficients.

   Invariant: no stored coefficient is zero. Equality of the term maps is
   therefore equality of polynomials, and map iteration (lexicographic in the
   exponent vector) gives a canonical term order for printing. */
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long long value);
  LaurentPoly(const Int& value);

  // The monomial s^power; power 0 gives the constant 1.
  static LaurentPoly symbol(Sym s, int power = 1);
  static LaurentPoly monomial(const Int& coeff, const Expo& e);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  // A single term with coefficient +1 or -1: the invertible elements.
  bool is_unit_monomial() const;

  const std::map<Expo, Int>& terms() const { return terms_; }
  Int coeff(const Expo& e) const;
  Int constant_term() const { return coeff(Expo{}); }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) {
    x += y;
    return x;
  }
  friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) {
    x -= y;
    return x;
  }
  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
  LaurentPoly& operator*=(const LaurentPoly& o);

  // e >= 0 always works; e < 0 requires a unit monomial.
  LaurentPoly pow(int e) const;

  /* Simultaneous substitution. A symbol occurring with a negative exponent
     may only be bound to a unit monomial; anything else has no polynomial
     inverse and is rejected. */
  LaurentPoly substitute(const std::map<Sym, LaurentPoly>& bindings) const;

  bool operator==(const LaurentPoly&) const = default;

  std::string str() const;

 private:
  void add_term(const Expo& e, const Int& c);
  std::map<Expo, Int> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

inline LaurentPoly var_a() { return LaurentPoly::symbol(Sym::a); }
inline LaurentPoly var_b() { return LaurentPoly::symbol(Sym::b); }
inline LaurentPoly var_c() { return LaurentPoly::symbol(Sym::c); }
inline LaurentPoly var_A() { return LaurentPoly::symbol(Sym::A); }

/* Power series in q truncated at a fixed order, with LaurentPoly
   coefficients. A series of order N stores the coefficients of q^0..q^N.
   Arithmetic never invents terms beyond the truncation; combining series of
   different orders truncates the result to the shorter one. q itself is not
   a polynomial symbol, so coefficients are q-free by construction. */
class QSeries {
 public:
  explicit QSeries(int order);
  static QSeries one(int order);
  static QSeries constant(const LaurentPoly& c0, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const LaurentPoly& coeff(int k) const;
  void set_coeff(int k, LaurentPoly v);

  // Restriction to a smaller order. Extending would fabricate unknown
  // coefficients, so a larger order is rejected.
  QSeries truncated(int order) const;

  // q^shift * mono * (*this), shift >= 0.
  QSeries scaled(const LaurentPoly& mono, int shift) const;

  QSeries operator-() const;
  friend QSeries operator+(const QSeries& x, const QSeries& y);
  friend QSeries operator-(const QSeries& x, const QSeries& y);
  friend QSeries operator*(const QSeries& x, const QSeries& y);
  QSeries& operator+=(const QSeries& y);
  QSeries& operator-=(const QSeries& y);
  QSeries& operator*=(const QSeries& y);

  // Multiplicative inverse mod q^(order+1); the constant term must be 1.
  QSeries reciprocal() const;

  bool operator==(const QSeries&) const = default;

  std::string str() const;

 private:
  std::vector<LaurentPoly> c_;
};

std::ostream& operator<<(std::ostream& os, const QSeries& s);

// m(m+1)/2 with the convention that m = -1 gives 0; smaller m is rejected.
long long triangular(long long m);

/* prod_{j=0}^{count-1} (1 - coef * q^(start + j*step)) truncated at `order`.
   coef is q-free, so factors whose exponent exceeds the order are identity
   and the loop stops early. */
QSeries pochhammer_finite(const LaurentPoly& coef, int start, int step,
                          int count, int order);

/* Same product over all j >= 0. Requires start >= 1: a factor at q^0 would
   contribute at every order and no truncation is faithful. */
QSeries pochhammer_infinite(const LaurentPoly& coef, int start, int step,
                            int order);

/* Gaussian binomial [n, m] in base q^qstep, truncated at `order`; zero
   whenever m < 0 or m > n. For order >= qstep*m*(n-m) this is the exact
   polynomial. */
QSeries gaussian_binomial(int n, int m, int qstep, int order);

}  // namespace rrw
