#pragma once

// Real algebraic numbers as (square-free integer polynomial, isolating
// interval), with a shared monotone refinement cache.

#include <memory>
#include <mutex>
#include <utility>

#include "algroot/introot.hpp"

namespace algroot {

/// Interval Horner evaluation of f over X; intermediate results are rounded
/// outward to exponent -prec.
inline DyadicInterval eval_interval(const IntPoly& f, const DyadicInterval& X, long prec) {
  if (f.is_zero()) return DyadicInterval(Dyadic(0));
  DyadicInterval acc(Dyadic(f.lc()));
  for (std::size_t i = f.size() - 1; i-- > 0;) {
    acc = (acc * X).round_outward(-prec) + DyadicInterval(Dyadic(f[i]));
  }
  return acc;
}

/// A positive multiple of the remainder of g modulo A (same value sign at
/// every root of A), with its positive content removed.
inline IntPoly reduce_positive(const IntPoly& g, const IntPoly& A) {
  if (g.degree() < A.degree()) return g;
  IntPoly a = sgn(A.lc()) < 0 ? -A : A;
  IntPoly r = prem(g, a);
  if (r.is_zero()) return r;
  Integer c = content(r);
  return c == 1 ? r : exact_div(r, c);
}

class RealAlgebraic {
 public:
  RealAlgebraic() : RealAlgebraic(IntPoly{Integer(0), Integer(1)}, Rational(0), Rational(0), true) {}

  /// Validates (A, [lo, hi]). A is replaced by its square-free part; the
  /// closed interval must contain exactly one of its real roots.
  static RealAlgebraic make(const IntPoly& A, const Rational& lo, const Rational& hi) {
    if (A.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "defining polynomial is zero");
    if (A.degree() < 1) throw Error(ErrorKind::NotIsolating, "constant defining polynomial has no roots");
    if (hi < lo) throw Error(ErrorKind::InvalidInput, "interval has lo > hi");
    IntPoly S = square_free_part(A);
    int n = count_real_roots(S, lo, hi);
    if (n != 1)
      throw Error(ErrorKind::NotIsolating, "interval contains " + std::to_string(n) + " roots");
    if (sign_at_rational(S, lo) == 0) return RealAlgebraic(S, lo, lo, true);
    if (sign_at_rational(S, hi) == 0) return RealAlgebraic(S, hi, hi, true);
    if (S.degree() == 1) {
      Rational q(-S[0], S[1]);
      q.canonicalize();
      return RealAlgebraic(S, q, q, true);
    }
    return RealAlgebraic(S, lo, hi, false);
  }

  /// The rational number q, with defining polynomial den*x - num.
  static RealAlgebraic rational(const Rational& q) {
    return RealAlgebraic(IntPoly{Integer(-q.get_num()), Integer(q.get_den())}, q, q, true);
  }

  const IntPoly& poly() const { return A_; }
  int degree() const { return A_.degree(); }
  /// The interval given at construction (degenerate for rational values).
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool is_rational() const { return exact_; }
  /// Only meaningful when is_rational().
  const Rational& rational_value() const { return lo_; }

  /// Current best enclosure (closed hull, rational endpoints).
  std::pair<Rational, Rational> enclosure() const {
    std::lock_guard<std::mutex> g(cache_->mu);
    return {cache_->lo, cache_->hi};
  }

  /// Dyadic interval containing alpha with width <= 2^-L.
  DyadicInterval approximate(long L) const {
    if (exact_) return dyadic_approx(lo_, L);
    auto [lo, hi] = refined(L + 2);
    if (lo == hi) return dyadic_approx(lo, L);
    return DyadicInterval(Dyadic::floor_of(lo, -(L + 2)), Dyadic::ceil_of(hi, -(L + 2)));
  }

  /// Exact sign of g(alpha).
  int sign_at(const IntPoly& g) const {
    if (g.is_zero()) return 0;
    if (exact_) return sign_at_rational(g, lo_);
    IntPoly r = reduce_positive(g, A_);
    if (r.is_zero()) return 0;
    if (r.degree() == 0) return sgn(r[0]);
    {
      auto [lo, hi] = enclosure();
      if (lo == hi) return sign_at_rational(r, lo);
    }
    bool zero_excluded = false;
    const long bits = static_cast<long>(coeff_bitsize(r)) + r.degree() * 2;
    for (long L = 16;; L *= 2) {
      DyadicInterval X = approximate(L);
      if (X.is_point()) return sign_at_rational(r, X.lo().to_rational());
      DyadicInterval v = eval_interval(r, X, L + bits);
      if (!v.contains_zero()) return v.sign();
      if (v.lo().is_zero() && v.hi().is_zero()) return 0;
      if (!zero_excluded && L >= 32) {
        if (vanishes_exactly(r)) return 0;
        zero_excluded = true;
      }
    }
  }

  /// Exact order of two real algebraic numbers: -1, 0 or +1.
  friend int compare(const RealAlgebraic& a, const RealAlgebraic& b) {
    if (a.exact_ && b.exact_) return a.lo_ < b.lo_ ? -1 : (a.lo_ == b.lo_ ? 0 : 1);
    if (a.exact_) return -compare_rational(b, a.lo_);
    if (b.exact_) return compare_rational(a, b.lo_);
    IntPoly h = gcd(a.A_, b.A_);
    bool common = h.degree() >= 1 && a.sign_at(h) == 0 && b.sign_at(h) == 0;
    for (long L = 8;; L *= 2) {
      auto [alo, ahi] = a.refined(L);
      auto [blo, bhi] = b.refined(L);
      if (ahi < blo) return -1;
      if (bhi < alo) return 1;
      if (common) {
        Rational lo = std::min(alo, blo), hi = std::max(ahi, bhi);
        if (count_real_roots(h, lo, hi) == 1) return 0;
      }
    }
  }

  friend bool operator==(const RealAlgebraic& a, const RealAlgebraic& b) { return compare(a, b) == 0; }
  friend bool operator<(const RealAlgebraic& a, const RealAlgebraic& b) { return compare(a, b) < 0; }

 private:
  struct Cache {
    std::mutex mu;
    Rational lo, hi;
  };

  RealAlgebraic(IntPoly A, Rational lo, Rational hi, bool exact)
      : A_(std::move(A)), lo_(std::move(lo)), hi_(std::move(hi)), exact_(exact),
        cache_(std::make_shared<Cache>()) {
    cache_->lo = lo_;
    cache_->hi = hi_;
  }

  /// Refines the shared cache to width <= 2^-L and returns it.
  std::pair<Rational, Rational> refined(long L) const {
    std::lock_guard<std::mutex> g(cache_->mu);
    if (cache_->lo == cache_->hi || cache_->hi - cache_->lo <= pow2_rational(-L))
      return {cache_->lo, cache_->hi};
    RootInterval r = refine(A_, RootInterval::open(cache_->lo, cache_->hi), L);
    cache_->lo = r.lo;
    cache_->hi = r.hi;
    return {r.lo, r.hi};
  }

  /// g(alpha) = 0, decided by whether gcd(A, g) changes sign on the isolating
  /// interval (its roots are simple roots of A).
  bool vanishes_exactly(const IntPoly& g) const {
    IntPoly h = gcd(A_, g);
    if (h.degree() < 1) return false;
    auto [lo, hi] = enclosure();
    if (lo == hi) return sign_at_rational(h, lo) == 0;
    return sign_at_rational(h, lo) * sign_at_rational(h, hi) < 0;
  }

  static int compare_rational(const RealAlgebraic& a, const Rational& q) {
    int s = a.sign_at(IntPoly{Integer(-q.get_num()), Integer(q.get_den())});
    return s;
  }

  IntPoly A_;
  Rational lo_, hi_;
  bool exact_ = false;
  std::shared_ptr<Cache> cache_;
};

inline RealAlgebraic make_algebraic(const IntPoly& A, const Rational& lo, const Rational& hi) {
  return RealAlgebraic::make(A, lo, hi);
}

inline int sign_at(const RealAlgebraic& alpha, const IntPoly& g) { return alpha.sign_at(g); }

}  // namespace algroot
