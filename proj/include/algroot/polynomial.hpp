#pragma once

// Dense univariate polynomials over an exact coefficient ring.
//
//   IntPoly = Poly<Integer>            Z[x]
//   RatPoly = Poly<Rational>           Q[x]
//   BiPoly  = Poly<IntPoly>            Z[x][y]; entry i is b_i(x), the
//                                      coefficient of y^i
//
// Coefficients are stored degree-ascending with no trailing zeros; the zero
// polynomial is the empty vector and has degree -1.

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

#include "algroot/exact_arith.hpp"

namespace algroot {

template <class R>
class Poly;

inline bool is_zero(const Integer& a) { return sgn(a) == 0; }
inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
template <class R>
bool is_zero(const Poly<R>& p) {
  return p.is_zero();
}

template <class R>
class Poly {
 public:
  using coeff_type = R;

  Poly() = default;
  explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<R> coeffs) : c_(coeffs) { trim(); }
  template <class S>
    requires(!std::is_same_v<S, R> && std::is_constructible_v<R, const S&>)
  Poly(std::initializer_list<S> coeffs) {
    c_.reserve(coeffs.size());
    for (const auto& s : coeffs) c_.emplace_back(s);
    trim();
  }

  static Poly constant(R c) { return Poly(std::vector<R>{std::move(c)}); }
  static Poly monomial(R c, int deg) {
    std::vector<R> v(static_cast<std::size_t>(deg) + 1);
    v.back() = std::move(c);
    return Poly(std::move(v));
  }
  /// The polynomial x.
  static Poly x() { return monomial(R(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const R& lc() const { return c_.back(); }
  const std::vector<R>& coeffs() const { return c_; }
  std::size_t size() const { return c_.size(); }

  /// Coefficient of x^i (zero beyond the degree).
  R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : R(); }
  const R& operator[](std::size_t i) const { return c_[i]; }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const R& s) {
    if (algroot::is_zero(s)) {
      c_.clear();
      return *this;
    }
    for (auto& c : c_) c *= s;
    trim();
    return *this;
  }

  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }
  friend Poly operator*(Poly a, const R& s) { return a *= s; }
  friend Poly operator*(const R& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<R> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (algroot::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// p(x) * x^k.
  Poly shift_up(int k) const {
    if (is_zero()) return *this;
    std::vector<R> v(static_cast<std::size_t>(k), R());
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(std::move(v));
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<R> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Integer(static_cast<long>(i));
    return Poly(std::move(v));
  }

  /// Horner evaluation in any ring V that R embeds into.
  template <class V>
  V eval(const V& x) const {
    if (c_.empty()) return V();
    V acc = V(c_.back());
    for (std::size_t i = c_.size() - 1; i-- > 0;) {
      acc = acc * x;
      acc = acc + V(c_[i]);
    }
    return acc;
  }

  /// Coefficients mapped through f.
  template <class F>
  auto map(F&& f) const -> Poly<std::decay_t<decltype(f(std::declval<const R&>()))>> {
    using S = std::decay_t<decltype(f(std::declval<const R&>()))>;
    std::vector<S> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(f(c));
    return Poly<S>(std::move(v));
  }

 private:
  void trim() {
    while (!c_.empty() && algroot::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<R> c_;
};

using IntPoly = Poly<Integer>;
using RatPoly = Poly<Rational>;
using BiPoly = Poly<IntPoly>;

// ---------------------------------------------------------------------------
// Exact division, powers and pseudo-remainders over an integral domain.

inline Integer exact_div(const Integer& a, const Integer& b) {
  Integer q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (sgn(r) != 0) throw std::logic_error("exact_div: integer division is not exact");
  return q;
}
inline Rational exact_div(const Rational& a, const Rational& b) { return Rational(a / b); }

template <class R>
Poly<R> exact_div(const Poly<R>& a, const R& s) {
  std::vector<R> v;
  v.reserve(a.size());
  for (const auto& c : a.coeffs()) v.push_back(exact_div(c, s));
  return Poly<R>(std::move(v));
}

/// Quotient a / b, which must be exact in R[x].
template <class R>
Poly<R> exact_div(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) throw std::logic_error("exact_div: division by zero polynomial");
  if (a.is_zero()) return a;
  int da = a.degree(), db = b.degree();
  if (da < db) throw std::logic_error("exact_div: polynomial division is not exact");
  std::vector<R> rem = a.coeffs();
  std::vector<R> q(static_cast<std::size_t>(da - db + 1));
  const R& lb = b.lc();
  for (int k = da - db; k >= 0; --k) {
    R& top = rem[static_cast<std::size_t>(k + db)];
    if (is_zero(top)) continue;
    R c = exact_div(top, lb);
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= c * b[static_cast<std::size_t>(j)];
    q[static_cast<std::size_t>(k)] = std::move(c);
  }
  for (const auto& r : rem)
    if (!is_zero(r)) throw std::logic_error("exact_div: polynomial division is not exact");
  return Poly<R>(std::move(q));
}

template <class R>
struct RingOne {
  static R get() { return R(1); }
};
template <class S>
struct RingOne<Poly<S>> {
  static Poly<S> get() { return Poly<S>::constant(RingOne<S>::get()); }
};

template <class R>
R power(R base, unsigned long e) {
  R acc = RingOne<R>::get();
  while (e > 0) {
    if (e & 1u) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

/// lc(g)^(deg f - deg g + 1) * f mod g, computed without division.
template <class R>
Poly<R> prem(const Poly<R>& f, const Poly<R>& g) {
  if (g.is_zero()) throw std::logic_error("prem: zero divisor");
  int df = f.degree(), dg = g.degree();
  if (df < dg) return f;
  std::vector<R> r = f.coeffs();
  const R& lg = g.lc();
  for (int d = df; d >= dg; --d) {
    R top = r[static_cast<std::size_t>(d)];
    for (auto& c : r) c *= lg;
    if (!is_zero(top))
      for (int j = 0; j <= dg; ++j) r[static_cast<std::size_t>(d - dg + j)] -= top * g[static_cast<std::size_t>(j)];
    r.pop_back();
  }
  return Poly<R>(std::move(r));
}

// ---------------------------------------------------------------------------
// Z[x] and Q[x] helpers.

inline Integer content(const IntPoly& f) {
  Integer g = 0;
  for (const auto& c : f.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

/// f divided by its content, with positive leading coefficient.
inline IntPoly primitive_part(const IntPoly& f) {
  if (f.is_zero()) return f;
  Integer c = content(f);
  if (sgn(f.lc()) < 0) c = -c;
  return c == 1 ? f : exact_div(f, c);
}

inline RatPoly to_ratpoly(const IntPoly& f) {
  return f.map([](const Integer& c) { return Rational(c); });
}

/// f = s * result with s > 0 and result in Z[x] with coprime coefficients
/// (sign preserved). Returns {result, s}.
inline std::pair<IntPoly, Rational> clear_denominators(const RatPoly& f) {
  if (f.is_zero()) return {IntPoly(), Rational(1)};
  Integer l = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Integer> v;
  v.reserve(f.size());
  for (const auto& c : f.coeffs()) v.push_back(Integer(c.get_num() * (l / c.get_den())));
  IntPoly p(std::move(v));
  Integer g = content(p);
  p = exact_div(p, g);
  return {p, make_rational(g, l)};
}

/// Exact value f(q) by Horner over Q.
inline Rational eval_at_rational(const IntPoly& f, const Rational& q) {
  Rational acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) {
    acc *= q;
    acc += f[i];
  }
  return acc;
}

/// den^deg f * f(num/den), an integer with the sign of f(num/den) (den > 0).
inline Integer eval_homogeneous(const IntPoly& f, const Integer& num, const Integer& den) {
  if (f.is_zero()) return 0;
  Integer acc = f.lc();
  Integer dpow = 1;
  for (std::size_t i = f.size() - 1; i-- > 0;) {
    dpow *= den;
    acc *= num;
    acc += f[i] * dpow;
  }
  return acc;
}

inline int sign_at_rational(const IntPoly& f, const Rational& q) {
  return sgn(eval_homogeneous(f, q.get_num(), q.get_den()));
}

/// f(x + c) for integer c.
inline IntPoly taylor_shift(const IntPoly& f, const Integer& c) {
  std::vector<Integer> a = f.coeffs();
  const std::size_t n = a.size();
  if (n <= 1 || c == 0) return f;
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) a[j] += c * a[j + 1];
  return IntPoly(std::move(a));
}

/// f(x + q) over Q.
inline RatPoly taylor_shift(const RatPoly& f, const Rational& q) {
  std::vector<Rational> a = f.coeffs();
  const std::size_t n = a.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) a[j] += q * a[j + 1];
  return RatPoly(std::move(a));
}

/// x^deg f * f(1/x).
template <class R>
Poly<R> reverse(const Poly<R>& f) {
  std::vector<R> v(f.coeffs().rbegin(), f.coeffs().rend());
  return Poly<R>(std::move(v));
}

/// Sign variations of a coefficient sequence, zeros skipped.
inline int sign_variations(const std::vector<Integer>& c) {
  int v = 0, last = 0;
  for (const auto& a : c) {
    int s = sgn(a);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

/// Sum of squares of the coefficients (||f||_2^2).
inline Integer norm2_squared(const IntPoly& f) {
  Integer s = 0;
  for (const auto& c : f.coeffs()) s += c * c;
  return s;
}

inline Integer max_abs_coeff(const IntPoly& f) {
  Integer m = 0;
  for (const auto& c : f.coeffs())
    if (abs(c) > m) m = abs(c);
  return m;
}

/// Max bitsize over the coefficients.
inline std::size_t coeff_bitsize(const IntPoly& f, SignBit s = SignBit::Excluded) {
  std::size_t b = 1;
  for (const auto& c : f.coeffs()) b = std::max(b, bitsize(c, s));
  return s == SignBit::Included && f.is_zero() ? 2 : b;
}

// ---------------------------------------------------------------------------
// Bivariate helpers. A BiPoly is a polynomial in y whose coefficients are
// polynomials in x.

inline int deg_y(const BiPoly& b) { return b.degree(); }
inline int deg_x(const BiPoly& b) {
  int d = -1;
  for (const auto& c : b.coeffs()) d = std::max(d, c.degree());
  return d;
}

/// Exchanges the roles of x and y: [i][j] -> [j][i].
inline BiPoly swap_variables(const BiPoly& b) {
  int dx = deg_x(b);
  if (dx < 0) return BiPoly();
  std::vector<std::vector<Integer>> t(static_cast<std::size_t>(dx) + 1,
                                      std::vector<Integer>(b.size()));
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b[i].size(); ++j) t[j][i] = b[i][j];
  std::vector<IntPoly> out;
  out.reserve(t.size());
  for (auto& row : t) out.emplace_back(std::move(row));
  return BiPoly(std::move(out));
}

/// IntPoly in y viewed as a BiPoly with constant x-coefficients.
inline BiPoly lift_constant_x(const IntPoly& p) {
  return p.map([](const Integer& c) { return IntPoly::constant(c); });
}

/// d/dy.
inline BiPoly derivative_y(const BiPoly& b) { return b.derivative(); }

/// q_den^deg_y(b) * b(x, q): an integer polynomial in x.
inline IntPoly substitute_y(const BiPoly& b, const Rational& q) {
  if (b.is_zero()) return IntPoly();
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  IntPoly acc = b.lc();
  Integer dpow = 1;
  for (std::size_t i = b.size() - 1; i-- > 0;) {
    dpow *= den;
    acc *= num;
    acc += b[i] * dpow;
  }
  return acc;
}

/// Max bitsize over all integer coefficients c_{i,j}.
inline std::size_t coeff_bitsize(const BiPoly& b, SignBit s = SignBit::Excluded) {
  std::size_t m = 1;
  for (const auto& c : b.coeffs()) m = std::max(m, coeff_bitsize(c, s));
  return m;
}

template <class R>
std::ostream& operator<<(std::ostream& os, const Poly<R>& p) {
  os << '[';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? ", " : "") << p[i];
  return os << ']';
}

}  // namespace algroot
