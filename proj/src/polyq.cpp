#include "rrw/polyq.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rrw {

LaurentPoly::LaurentPoly(long long value) {
  if (value != 0) terms_[Expo{}] = value;
}

LaurentPoly::LaurentPoly(const Int& value) {
  if (value != 0) terms_[Expo{}] = value;
}

LaurentPoly LaurentPoly::symbol(Sym s, int power) {
  LaurentPoly p;
  Expo e{};
  e[static_cast<int>(s)] = power;
  p.terms_[e] = 1;
  return p;
}

LaurentPoly LaurentPoly::monomial(const Int& coeff, const Expo& e) {
  LaurentPoly p;
  if (coeff != 0) p.terms_[e] = coeff;
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Expo{} &&
         terms_.begin()->second == 1;
}

bool LaurentPoly::is_unit_monomial() const {
  if (terms_.size() != 1) return false;
  const Int& c = terms_.begin()->second;
  return c == 1 || c == -1;
}

Int LaurentPoly::coeff(const Expo& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(const Expo& e, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
  LaurentPoly out;
  for (const auto& [ex, cx] : x.terms_) {
    for (const auto& [ey, cy] : y.terms_) {
      Expo e;
      for (int s = 0; s < num_syms; ++s) e[s] = ex[s] + ey[s];
      out.add_term(e, cx * cy);
    }
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) {
    if (!is_unit_monomial())
      throw std::invalid_argument("negative power of a non-unit polynomial");
    const auto& [expo, c] = *terms_.begin();
    Expo inv;
    for (int s = 0; s < num_syms; ++s) inv[s] = expo[s] * e;
    // c is +-1, so c^e is c when e is odd and 1 otherwise.
    return monomial((e % 2 != 0) ? c : Int(1), inv);
  }
  LaurentPoly out(1);
  for (int i = 0; i < e; ++i) out *= *this;
  return out;
}

LaurentPoly LaurentPoly::substitute(
    const std::map<Sym, LaurentPoly>& bindings) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) {
    LaurentPoly acc(c);
    for (int s = 0; s < num_syms; ++s) {
      if (e[s] == 0) continue;
      auto it = bindings.find(static_cast<Sym>(s));
      if (it == bindings.end()) {
        acc *= symbol(static_cast<Sym>(s), e[s]);
      } else {
        if (e[s] < 0 && !it->second.is_unit_monomial())
          throw std::invalid_argument("non-invertible substitution");
        acc *= it->second.pow(e[s]);
      }
    }
    out += acc;
  }
  return out;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // leading terms first: descending exponent vectors
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool neg = c < 0;
    Int mag = neg ? Int(-c) : c;
    std::string mono;
    for (int s = 0; s < num_syms; ++s) {
      if (e[s] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += sym_names[s];
      if (e[s] != 1) {
        mono += '^';
        mono += std::to_string(e[s]);
      }
    }
    if (first) {
      if (neg) out += '-';
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    if (mono.empty()) {
      out += mag.str();
    } else {
      if (mag != 1) {
        out += mag.str();
        out += '*';
      }
      out += mono;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
  return os << p.str();
}

QSeries::QSeries(int order) {
  if (order < 0) throw std::invalid_argument("series order must be >= 0");
  c_.resize(order + 1);
}

QSeries QSeries::one(int order) {
  QSeries s(order);
  s.c_[0] = LaurentPoly(1);
  return s;
}

QSeries QSeries::constant(const LaurentPoly& c0, int order) {
  QSeries s(order);
  s.c_[0] = c0;
  return s;
}

const LaurentPoly& QSeries::coeff(int k) const {
  if (k < 0 || k > order())
    throw std::out_of_range("coefficient index out of range");
  return c_[k];
}

void QSeries::set_coeff(int k, LaurentPoly v) {
  if (k < 0 || k > order())
    throw std::out_of_range("coefficient index out of range");
  c_[k] = std::move(v);
}

QSeries QSeries::truncated(int order) const {
  if (order > this->order())
    throw std::invalid_argument("cannot extend a truncated series");
  QSeries s(order);
  for (int k = 0; k <= order; ++k) s.c_[k] = c_[k];
  return s;
}

QSeries QSeries::scaled(const LaurentPoly& mono, int shift) const {
  if (shift < 0) throw std::invalid_argument("series shift must be >= 0");
  QSeries s(order());
  for (int k = 0; k + shift <= order(); ++k) s.c_[k + shift] = mono * c_[k];
  return s;
}

QSeries QSeries::operator-() const {
  QSeries s(order());
  for (int k = 0; k <= order(); ++k) s.c_[k] = -c_[k];
  return s;
}

QSeries operator+(const QSeries& x, const QSeries& y) {
  int n = std::min(x.order(), y.order());
  QSeries s(n);
  for (int k = 0; k <= n; ++k) s.c_[k] = x.c_[k] + y.c_[k];
  return s;
}

QSeries operator-(const QSeries& x, const QSeries& y) {
  int n = std::min(x.order(), y.order());
  QSeries s(n);
  for (int k = 0; k <= n; ++k) s.c_[k] = x.c_[k] - y.c_[k];
  return s;
}

QSeries operator*(const QSeries& x, const QSeries& y) {
  int n = std::min(x.order(), y.order());
  QSeries s(n);
  for (int i = 0; i <= n; ++i) {
    if (x.c_[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (y.c_[j].is_zero()) continue;
      s.c_[i + j] += x.c_[i] * y.c_[j];
    }
  }
  return s;
}

QSeries& QSeries::operator+=(const QSeries& y) {
  *this = *this + y;
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& y) {
  *this = *this - y;
  return *this;
}

QSeries& QSeries::operator*=(const QSeries& y) {
  *this = *this * y;
  return *this;
}

QSeries QSeries::reciprocal() const {
  if (!c_[0].is_one())
    throw std::invalid_argument("series reciprocal requires constant term 1");
  QSeries s(order());
  s.c_[0] = LaurentPoly(1);
  for (int k = 1; k <= order(); ++k) {
    LaurentPoly acc;
    for (int j = 1; j <= k; ++j) acc += c_[j] * s.c_[k - j];
    s.c_[k] = -acc;
  }
  return s;
}

std::string QSeries::str() const {
  std::string out;
  for (int k = 0; k <= order(); ++k) {
    if (c_[k].is_zero()) continue;
    std::string ps = c_[k].str();
    bool wrap = c_[k].terms().size() > 1 || ps[0] == '-';
    std::string term;
    if (k == 0) {
      term = wrap ? "(" + ps + ")" : ps;
    } else {
      std::string qpow = k == 1 ? "q" : "q^" + std::to_string(k);
      if (c_[k].is_one())
        term = qpow;
      else
        term = (wrap ? "(" + ps + ")" : ps) + "*" + qpow;
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const QSeries& s) {
  return os << s.str();
}

long long triangular(long long m) {
  if (m < -1)
    throw std::invalid_argument("triangular number undefined below -1");
  return m * (m + 1) / 2;
}

QSeries pochhammer_finite(const LaurentPoly& coef, int start, int step,
                          int count, int order) {
  if (start < 0 || step < 1 || count < 0)
    throw std::invalid_argument("bad Pochhammer parameters");
  QSeries s = QSeries::one(order);
  for (int j = 0; j < count; ++j) {
    long long e = start + static_cast<long long>(j) * step;
    if (e > order) break;  // remaining factors are 1 mod q^(order+1)
    s = s - s.scaled(coef, static_cast<int>(e));
  }
  return s;
}

QSeries pochhammer_infinite(const LaurentPoly& coef, int start, int step,
                            int order) {
  if (start < 1) throw std::invalid_argument("non-convergent truncation");
  if (step < 1) throw std::invalid_argument("bad Pochhammer parameters");
  QSeries s = QSeries::one(order);
  for (long long e = start; e <= order; e += step)
    s = s - s.scaled(coef, static_cast<int>(e));
  return s;
}

QSeries gaussian_binomial(int n, int m, int qstep, int order) {
  if (qstep < 1) throw std::invalid_argument("bad base exponent");
  if (order < 0) throw std::invalid_argument("series order must be >= 0");
  if (m < 0 || m > n) return QSeries(order);
  // (q^(n-m+1); q)_m / (q; q)_m in base q^qstep.
  QSeries num = pochhammer_finite(LaurentPoly(1), qstep * (n - m + 1), qstep,
                                  m, order);
  QSeries den = pochhammer_finite(LaurentPoly(1), qstep, qstep, m, order);
  return num * den.reciprocal();
}

}  // namespace rrw
