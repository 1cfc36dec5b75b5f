#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "f2ca/types.hpp"

namespace f2ca {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

inline bool odd(const BigInt& v) { return (v % 2) != 0; }

// One term of a polynomial display, ascending-power style:
// "1 + 2*z + 2*z^2 + z^3", "z^-1 + 1", "1 - z".
inline void append_term(std::string& out, const BigInt& c, Site e, std::string_view var) {
  const bool neg = c < 0;
  const BigInt mag = neg ? BigInt(-c) : c;
  if (out.empty()) {
    if (neg) out += '-';
  } else {
    out += neg ? " - " : " + ";
  }
  const bool unit = (mag == 1) && (e != 0);
  if (!unit) out += mag.str();
  if (e != 0) {
    if (!unit) out += '*';
    out += var;
    if (e != 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
}

}  // namespace detail

// Dense polynomial over Z, coefficients ascending in the power. Normal form
// has no trailing zero coefficient; the zero polynomial stores nothing.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }
  IntPoly(std::initializer_list<long long> coeffs) {
    c_.assign(coeffs.begin(), coeffs.end());
    normalize();
  }

  static IntPoly one() { return IntPoly{1}; }
  static IntPoly monomial(std::size_t power, BigInt coeff = 1) {
    std::vector<BigInt> c(power + 1);
    c[power] = std::move(coeff);
    return IntPoly(std::move(c));
  }

  bool zero() const { return c_.empty(); }
  std::int64_t degree() const { return std::int64_t(c_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  const BigInt& coeff(std::int64_t i) const {
    static const BigInt kZero{};
    if (i < 0 || i >= std::int64_t(c_.size())) return kZero;
    return c_[std::size_t(i)];
  }

  IntPoly& operator+=(const IntPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
  }
  IntPoly& operator-=(const IntPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
  }

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator-(const IntPoly& a) {
    std::vector<BigInt> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.c_[i];
    return IntPoly(std::move(c));
  }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.zero() || b.zero()) return IntPoly{};
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(c));
  }
  IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

  bool operator==(const IntPoly&) const = default;

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<BigInt> c_;
};

inline IntPoly pow(const IntPoly& p, long long e) {
  if (e < 0) throw std::invalid_argument("pow: negative exponent");
  IntPoly r = IntPoly::one();
  for (long long i = 0; i < e; ++i) r *= p;
  return r;
}

// 1 + z + ... + z^(d-1); d = 0 gives the zero polynomial.
inline IntPoly geometric(std::int64_t d) {
  if (d < 0) throw std::invalid_argument("geometric: negative length");
  return IntPoly(std::vector<BigInt>(std::size_t(d), 1));
}

// Exact quotient p / (1 - z); throws when p is not divisible.
inline IntPoly div_exact_one_minus_z(const IntPoly& p) {
  if (p.zero()) return IntPoly{};
  const std::int64_t d = p.degree();
  if (d == 0) throw std::invalid_argument("div_exact_one_minus_z: not divisible by (1 - z)");
  std::vector<BigInt> q(static_cast<std::size_t>(d));
  q[0] = p.coeff(0);
  for (std::int64_t i = 1; i < d; ++i) q[std::size_t(i)] = p.coeff(i) + q[std::size_t(i - 1)];
  if (p.coeff(d) != -q[std::size_t(d - 1)])
    throw std::invalid_argument("div_exact_one_minus_z: not divisible by (1 - z)");
  return IntPoly(std::move(q));
}

inline std::string to_string(const IntPoly& p, std::string_view var = "z") {
  if (p.zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    if (p.coeffs()[i] != 0) detail::append_term(out, p.coeffs()[i], Site(i), var);
  return out;
}

// Polynomial over F2, stored as an ascending coefficient bitset.
class F2Poly {
 public:
  F2Poly() = default;
  explicit F2Poly(std::vector<bool> bits) : c_(std::move(bits)) { normalize(); }
  F2Poly(std::initializer_list<int> bits) {
    c_.reserve(bits.size());
    for (int b : bits) c_.push_back(b != 0);
    normalize();
  }

  static F2Poly one() { return F2Poly{1}; }

  bool zero() const { return c_.empty(); }
  std::int64_t degree() const { return std::int64_t(c_.size()) - 1; }
  bool coeff(std::int64_t i) const {
    return i >= 0 && i < std::int64_t(c_.size()) && c_[std::size_t(i)];
  }

  friend F2Poly operator+(const F2Poly& a, const F2Poly& b) {
    std::vector<bool> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] = (i < a.c_.size() && a.c_[i]) ^ (i < b.c_.size() && b.c_[i]);
    return F2Poly(std::move(c));
  }
  friend F2Poly operator*(const F2Poly& a, const F2Poly& b) {
    if (a.zero() || b.zero()) return F2Poly{};
    std::vector<bool> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (!a.c_[i]) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        if (b.c_[j]) c[i + j] = !c[i + j];
    }
    return F2Poly(std::move(c));
  }

  bool operator==(const F2Poly&) const = default;

  // Lowest power first: 1 + z^3 prints as "1001"; the zero polynomial as "0".
  std::string bitstring() const {
    if (zero()) return "0";
    std::string out(c_.size(), '0');
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i]) out[i] = '1';
    return out;
  }

 private:
  void normalize() {
    while (!c_.empty() && !c_.back()) c_.pop_back();
  }

  std::vector<bool> c_;
};

inline F2Poly pow(const F2Poly& p, long long e) {
  if (e < 0) throw std::invalid_argument("pow: negative exponent");
  F2Poly r = F2Poly::one();
  for (long long i = 0; i < e; ++i) r = r * p;
  return r;
}

inline F2Poly mod2(const IntPoly& p) {
  std::vector<bool> c(p.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = detail::odd(p.coeffs()[i]);
  return F2Poly(std::move(c));
}

// Laurent polynomial over Z: lowest exponent (may be negative) plus an
// ascending coefficient run. Normal form has nonzero end coefficients.
class LaurentInt {
 public:
  LaurentInt() = default;
  LaurentInt(Site lo, std::vector<BigInt> coeffs) : lo_(lo), c_(std::move(coeffs)) { normalize(); }

  static LaurentInt monomial(Site e, BigInt coeff = 1) {
    std::vector<BigInt> c(1);
    c[0] = std::move(coeff);
    return LaurentInt(e, std::move(c));
  }
  static LaurentInt one() { return monomial(0); }

  bool zero() const { return c_.empty(); }
  Site lo() const { return lo_; }
  Site hi() const { return lo_ + Site(c_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  const BigInt& coeff(Site e) const {
    static const BigInt kZero{};
    if (zero() || e < lo_ || e > hi()) return kZero;
    return c_[std::size_t(e - lo_)];
  }

  friend LaurentInt operator+(const LaurentInt& a, const LaurentInt& b) { return merge(a, b, +1); }
  friend LaurentInt operator-(const LaurentInt& a, const LaurentInt& b) { return merge(a, b, -1); }
  friend LaurentInt operator-(const LaurentInt& a) {
    std::vector<BigInt> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.c_[i];
    return LaurentInt(a.lo_, std::move(c));
  }
  friend LaurentInt operator*(const LaurentInt& a, const LaurentInt& b) {
    if (a.zero() || b.zero()) return LaurentInt{};
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return LaurentInt(a.lo_ + b.lo_, std::move(c));
  }

  bool operator==(const LaurentInt&) const = default;

 private:
  static LaurentInt merge(const LaurentInt& a, const LaurentInt& b, int sign) {
    if (a.zero() && b.zero()) return LaurentInt{};
    const Site lo = a.zero() ? b.lo_ : (b.zero() ? a.lo_ : std::min(a.lo_, b.lo_));
    const Site hi = a.zero() ? b.hi() : (b.zero() ? a.hi() : std::max(a.hi(), b.hi()));
    std::vector<BigInt> c(std::size_t(hi - lo + 1));
    for (Site e = lo; e <= hi; ++e)
      c[std::size_t(e - lo)] = a.coeff(e) + sign * b.coeff(e);
    return LaurentInt(lo, std::move(c));
  }

  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    std::size_t skip = 0;
    while (skip < c_.size() && c_[skip] == 0) ++skip;
    if (skip) {
      c_.erase(c_.begin(), c_.begin() + std::ptrdiff_t(skip));
      lo_ += Site(skip);
    }
    if (c_.empty()) lo_ = 0;
  }

  Site lo_ = 0;
  std::vector<BigInt> c_;
};

inline LaurentInt laurent(const IntPoly& p) {
  return LaurentInt(0, p.coeffs());
}

// z^pivot * p(1/z). Applying it twice with the same pivot is the identity.
inline LaurentInt substitute_inverse(const LaurentInt& p, Site pivot) {
  if (p.zero()) return LaurentInt{};
  std::vector<BigInt> c(p.coeffs().rbegin(), p.coeffs().rend());
  return LaurentInt(pivot - p.hi(), std::move(c));
}

inline LaurentInt laurent_mod2(const LaurentInt& p) {
  std::vector<BigInt> c(p.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = detail::odd(p.coeffs()[i]) ? 1 : 0;
  return LaurentInt(p.lo(), std::move(c));
}

inline bool mod2_zero(const LaurentInt& p) {
  for (const BigInt& c : p.coeffs())
    if (detail::odd(c)) return false;
  return true;
}

inline std::string to_string(const LaurentInt& p, std::string_view var = "z") {
  if (p.zero()) return "0";
  std::string out;
  for (Site e = p.lo(); e <= p.hi(); ++e)
    if (p.coeff(e) != 0) detail::append_term(out, p.coeff(e), e, var);
  return out;
}

}  // namespace f2ca
