#pragma once

// Exact integers, rationals and dyadic intervals.
//
// Integer and Rational are GMP's mpz_class / mpq_class. Rationals are kept
// canonical (reduced, positive denominator) by every function in this file.
// Dyadic numbers m*2^e carry an odd mantissa (or are zero with e = 0), so
// equal values have equal representations.

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "algroot/error.hpp"

namespace algroot {

using Integer = mpz_class;
using Rational = mpq_class;

enum class SignBit { Excluded, Included };

/// Bits needed for |x|: 1 + floor(lg |x|), and 1 for zero. With
/// SignBit::Included one extra bit is counted for the sign.
inline std::size_t bitsize(const Integer& x, SignBit s = SignBit::Excluded) {
  std::size_t b = sgn(x) == 0 ? 1 : mpz_sizeinbase(x.get_mpz_t(), 2);
  return s == SignBit::Included ? b + 1 : b;
}

inline int sign(const Integer& x) { return sgn(x); }
inline int sign(const Rational& x) { return sgn(x); }

/// ceil(lg x) for x >= 1.
inline long ceil_lg(const Integer& x) {
  if (x <= 1) return 0;
  Integer y = x - 1;
  return static_cast<long>(bitsize(y));
}
inline long ceil_lg(long x) { return ceil_lg(Integer(x)); }

/// floor(lg x) for x >= 1.
inline long floor_lg(const Integer& x) { return static_cast<long>(bitsize(x)) - 1; }

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::InvalidInput, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline Integer floor(const Rational& q) { return floor_div(q.get_num(), q.get_den()); }
inline Integer ceil(const Rational& q) { return ceil_div(q.get_num(), q.get_den()); }

inline Integer shift_left(const Integer& a, long k) {
  Integer r;
  if (k >= 0)
    mpz_mul_2exp(r.get_mpz_t(), a.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
  else
    mpz_fdiv_q_2exp(r.get_mpz_t(), a.get_mpz_t(), static_cast<mp_bitcnt_t>(-k));
  return r;
}
/// a / 2^k rounded toward +infinity (k >= 0).
inline Integer shift_right_ceil(const Integer& a, long k) {
  Integer r;
  mpz_cdiv_q_2exp(r.get_mpz_t(), a.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
  return r;
}

inline Integer pow2(long k) { return shift_left(Integer(1), k); }

inline Rational pow2_rational(long k) {
  if (k >= 0) return Rational(pow2(k));
  return make_rational(Integer(1), pow2(-k));
}

inline std::string to_string(const Integer& x) { return x.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Integer parse_integer(std::string_view s) {
  try {
    return Integer(std::string(s), 10);
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::InvalidInput, "not an integer: '" + std::string(s) + "'");
  }
}

inline Rational parse_rational(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s));
  return make_rational(parse_integer(s.substr(0, slash)), parse_integer(s.substr(slash + 1)));
}

/// m * 2^e with odd m (or zero).
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(Integer mantissa, long exponent = 0) : m_(std::move(mantissa)), e_(exponent) {
    normalize();
  }
  Dyadic(long v) : Dyadic(Integer(v)) {}

  const Integer& mantissa() const { return m_; }
  long exponent() const { return e_; }
  int sign() const { return sgn(m_); }
  bool is_zero() const { return sgn(m_) == 0; }

  Rational to_rational() const {
    if (e_ >= 0) return Rational(shift_left(m_, e_));
    return make_rational(m_, pow2(-e_));
  }

  /// Largest multiple of 2^e that is <= this.
  Dyadic floor_to(long e) const {
    if (e_ >= e || is_zero()) return *this;
    return Dyadic(shift_left(m_, e_ - e), e);
  }
  /// Smallest multiple of 2^e that is >= this.
  Dyadic ceil_to(long e) const {
    if (e_ >= e || is_zero()) return *this;
    return Dyadic(shift_right_ceil(m_, e - e_), e);
  }

  static Dyadic floor_of(const Rational& q, long e) {
    Integer num = q.get_num(), den = q.get_den();
    if (e <= 0)
      num = shift_left(num, -e);
    else
      den = shift_left(den, e);
    return Dyadic(floor_div(num, den), e);
  }
  static Dyadic ceil_of(const Rational& q, long e) {
    Integer num = q.get_num(), den = q.get_den();
    if (e <= 0)
      num = shift_left(num, -e);
    else
      den = shift_left(den, e);
    return Dyadic(ceil_div(num, den), e);
  }

  /// Mantissa rescaled to the (smaller or equal) exponent e.
  Integer scaled_to(long e) const { return shift_left(m_, e_ - e); }

  std::string str() const { return m_.get_str() + "*2^" + std::to_string(e_); }
  static Dyadic parse(std::string_view s) {
    auto star = s.find("*2^");
    if (star == std::string_view::npos) return Dyadic(parse_integer(s));
    std::string es(s.substr(star + 3));
    long e = 0;
    try {
      std::size_t used = 0;
      e = std::stol(es, &used);
      if (used != es.size()) throw std::invalid_argument(es);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "bad dyadic exponent: '" + es + "'");
    }
    return Dyadic(parse_integer(s.substr(0, star)), e);
  }

  friend Dyadic operator-(const Dyadic& a) { return Dyadic(-a.m_, a.e_); }
  friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long e = std::min(a.e_, b.e_);
    return Dyadic(Integer(a.scaled_to(e) + b.scaled_to(e)), e);
  }
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    return Dyadic(Integer(a.m_ * b.m_), a.e_ + b.e_);
  }
  /// Multiplication by 2^k.
  Dyadic times_pow2(long k) const { return is_zero() ? *this : Dyadic(m_, e_ + k); }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.e_ == b.e_ && a.m_ == b.m_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    long e = std::min(a.e_, b.e_);
    int c = cmp(a.scaled_to(e), b.scaled_to(e));
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend int compare(const Dyadic& a, const Rational& q) {
    // a.m * 2^a.e  vs  num/den
    Integer lhs = a.m_ * q.get_den(), rhs = q.get_num();
    if (a.e_ >= 0)
      lhs = shift_left(lhs, a.e_);
    else
      rhs = shift_left(rhs, -a.e_);
    return cmp(lhs, rhs);
  }
  friend std::ostream& operator<<(std::ostream& os, const Dyadic& d) { return os << d.str(); }

 private:
  void normalize() {
    if (sgn(m_) == 0) {
      e_ = 0;
      return;
    }
    auto tz = mpz_scan1(m_.get_mpz_t(), 0);
    if (tz > 0) {
      mpz_fdiv_q_2exp(m_.get_mpz_t(), m_.get_mpz_t(), tz);
      e_ += static_cast<long>(tz);
    }
  }

  Integer m_ = 0;
  long e_ = 0;
};

/// Closed interval [lo, hi] with dyadic endpoints. Every operation returns an
/// interval containing the exact image of its operands.
class DyadicInterval {
 public:
  DyadicInterval() = default;
  explicit DyadicInterval(Dyadic point) : lo_(point), hi_(std::move(point)) {}
  DyadicInterval(Dyadic lo, Dyadic hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (hi_ < lo_) throw Error(ErrorKind::InvalidInput, "interval with lo > hi");
  }

  const Dyadic& lo() const { return lo_; }
  const Dyadic& hi() const { return hi_; }
  Dyadic width() const { return hi_ - lo_; }
  Dyadic midpoint() const { return (lo_ + hi_).times_pow2(-1); }
  bool is_point() const { return lo_ == hi_; }

  bool contains(const Rational& q) const { return compare(lo_, q) <= 0 && compare(hi_, q) >= 0; }
  bool contains(const Dyadic& d) const { return lo_ <= d && d <= hi_; }
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool subset_of(const DyadicInterval& o) const { return o.lo_ <= lo_ && hi_ <= o.hi_; }
  bool intersects(const DyadicInterval& o) const { return !(hi_ < o.lo_ || o.hi_ < lo_); }

  /// Sign of every member, or 0 if the interval contains zero.
  int sign() const {
    if (lo_.sign() > 0) return 1;
    if (hi_.sign() < 0) return -1;
    return 0;
  }
  /// max |x| over the interval.
  Dyadic magnitude() const {
    Dyadic a = lo_.sign() < 0 ? -lo_ : lo_;
    Dyadic b = hi_.sign() < 0 ? -hi_ : hi_;
    return a < b ? b : a;
  }
  /// min |x| over the interval.
  Dyadic mignitude() const {
    if (contains_zero()) return Dyadic();
    return lo_.sign() > 0 ? lo_ : -hi_;
  }

  /// Endpoints rounded outward to multiples of 2^e.
  DyadicInterval round_outward(long e) const { return {lo_.floor_to(e), hi_.ceil_to(e)}; }

  friend DyadicInterval operator-(const DyadicInterval& a) { return {-a.hi_, -a.lo_}; }
  friend DyadicInterval operator+(const DyadicInterval& a, const DyadicInterval& b) {
    return {a.lo_ + b.lo_, a.hi_ + b.hi_};
  }
  friend DyadicInterval operator-(const DyadicInterval& a, const DyadicInterval& b) {
    return {a.lo_ - b.hi_, a.hi_ - b.lo_};
  }
  friend DyadicInterval operator*(const DyadicInterval& a, const DyadicInterval& b) {
    if (a.is_point() && b.is_point()) return DyadicInterval(a.lo_ * b.lo_);
    Dyadic p[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
  }
  friend DyadicInterval operator*(const DyadicInterval& a, const Dyadic& s) {
    return a * DyadicInterval(s);
  }
  friend bool operator==(const DyadicInterval& a, const DyadicInterval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }
  friend std::ostream& operator<<(std::ostream& os, const DyadicInterval& I) {
    return os << '[' << I.lo_ << ", " << I.hi_ << ']';
  }

 private:
  Dyadic lo_, hi_;
};

/// Dyadic enclosure of q of width <= 2^-L with endpoint exponents >= -L.
inline DyadicInterval dyadic_approx(const Rational& q, long L) {
  return {Dyadic::floor_of(q, -L), Dyadic::ceil_of(q, -L)};
}

/// true iff width(I) <= 2^-L.
inline bool width_at_most(const DyadicInterval& I, long L) {
  return I.width() <= Dyadic(Integer(1), -L);
}

}  // namespace algroot
