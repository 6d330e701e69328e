#pragma once

// Real root isolation and refinement for integer polynomials (Descartes
// bisection on a power-of-two box).

#include <algorithm>
#include <string>
#include <vector>

#include "algroot/error.hpp"
#include "algroot/subresultant.hpp"

namespace algroot {

struct RootInterval {
  enum class Kind { Exact, Open };
  Kind kind = Kind::Open;
  Rational lo, hi;  // equal for exact roots
  int multiplicity = 1;

  static RootInterval exact(Rational q, int mult = 1) {
    RootInterval r;
    r.kind = Kind::Exact;
    r.lo = q;
    r.hi = std::move(q);
    r.multiplicity = mult;
    return r;
  }
  static RootInterval open(Rational lo, Rational hi, int mult = 1) {
    RootInterval r;
    r.kind = Kind::Open;
    r.lo = std::move(lo);
    r.hi = std::move(hi);
    r.multiplicity = mult;
    return r;
  }
  bool is_exact() const { return kind == Kind::Exact; }
  Rational width() const { return hi - lo; }
  /// Closed hull contains q.
  bool hull_contains(const Rational& q) const { return lo <= q && q <= hi; }
};

struct IsolationStats {
  std::string engine;
  long nodes = 0;
  long max_depth = 0;
  std::size_t max_endpoint_bits = 0;
  long max_precision = 0;
  long restarts = 0;
  long nudges = 0;
  long sequence_length = 0;
};

struct IsolationResult {
  std::vector<RootInterval> roots;
  IsolationStats stats;
};

enum class BoundForm { InfNorm, Sharp };

/// Bound on the magnitude of every complex root of f. The infinity-norm form is
/// 2 max|a_i|; the sharp form is 1 + max_{i<p}|a_i|/|a_p|, capped by it.
inline Rational cauchy_root_bound(const IntPoly& f, BoundForm form = BoundForm::Sharp) {
  if (f.degree() < 1) throw Error(ErrorKind::InvalidInput, "cauchy_root_bound: degree < 1");
  Rational infnorm(2 * max_abs_coeff(f));
  if (form == BoundForm::InfNorm) return infnorm;
  Integer m = 0;
  for (int i = 0; i < f.degree(); ++i) m = std::max<Integer>(m, abs(f[i]));
  Rational sharp = 1 + Rational(m) / Rational(abs(f.lc()));
  sharp.canonicalize();
  return std::min(sharp, infnorm);
}

namespace detail {

/// Number of sign variations of (1+t)^deg g(1/(1+t)): a Descartes bound for
/// the roots of g in (0, 1).
inline int variations_unit(const IntPoly& g) {
  return sign_variations(taylor_shift(reverse(g), Integer(1)).coeffs());
}

/// 2^deg g(t/2)
inline IntPoly half_scale(const IntPoly& g) {
  const int n = g.degree();
  std::vector<Integer> c(g.coeffs());
  for (int i = 0; i <= n; ++i) mpz_mul_2exp(c[i].get_mpz_t(), c[i].get_mpz_t(), n - i);
  return IntPoly(std::move(c));
}

/// g / (t - 1), exact.
inline IntPoly divide_by_t_minus_one(const IntPoly& g) {
  const int n = g.degree();
  std::vector<Integer> q(n);
  Integer acc = 0;
  for (int i = n; i >= 1; --i) {
    acc += g[i];
    q[i - 1] = acc;
  }
  if (acc + g[0] != 0) throw std::logic_error("divide_by_t_minus_one: not exact");
  return IntPoly(std::move(q));
}

inline IntPoly divide_by_t(const IntPoly& g) {
  return IntPoly(std::vector<Integer>(g.coeffs().begin() + 1, g.coeffs().end()));
}

/// f(a + (b - a) t), scaled to a primitive integer polynomial.
inline IntPoly moebius_to_unit(const IntPoly& f, const Rational& a, const Rational& b) {
  RatPoly g = taylor_shift(to_ratpoly(f), a);
  Rational w = b - a, p = 1;
  std::vector<Rational> c(g.coeffs());
  for (auto& x : c) {
    x *= p;
    p *= w;
  }
  return clear_denominators(RatPoly(std::move(c))).first;
}

inline std::size_t rational_bits(const Rational& q) {
  return std::max(bitsize(q.get_num()), bitsize(q.get_den()));
}

}  // namespace detail

/// Sign variations of the Descartes transform of f on (a, b). Zero means no
/// root in (a, b); one means exactly one.
inline int descartes_count(const IntPoly& f, const Rational& a, const Rational& b) {
  if (!(a < b)) throw Error(ErrorKind::InvalidInput, "descartes_count: need a < b");
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "descartes_count of 0");
  return detail::variations_unit(detail::moebius_to_unit(f, a, b));
}

/// Number of distinct real roots of f in the closed interval [a, b], by a
/// Sturm sequence of its square-free part.
inline int count_real_roots(const IntPoly& f, const Rational& a, const Rational& b) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "count_real_roots of 0");
  if (b < a) return 0;
  if (f.degree() < 1) return 0;
  IntPoly g = square_free_part(f);
  if (g.degree() < 1) return 0;
  auto S = sturm_sequence(g, g.derivative());
  int n = sign_variations(sturm_signs_at(S, a)) - sign_variations(sturm_signs_at(S, b));
  return n + (sign_at_rational(g, a) == 0 ? 1 : 0);
}

/// Isolates the real roots of a square-free f. Roots hit by a bisection point
/// are reported exactly; open intervals have non-root endpoints.
inline IsolationResult isolate_squarefree(const IntPoly& f, const Deadline& deadline = {}) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "isolate of 0");
  IsolationResult res;
  res.stats.engine = "descartes-bisection";
  if (f.degree() < 1) return res;

  // Box (-2^K, 2^K) strictly containing all roots; g(t) = f(2^(K+1) t - 2^K).
  const long K = ceil_lg(ceil(cauchy_root_bound(f))) + 1;
  IntPoly g = taylor_shift(f, -pow2(K));
  {
    std::vector<Integer> c(g.coeffs());
    for (std::size_t i = 0; i < c.size(); ++i)
      mpz_mul_2exp(c[i].get_mpz_t(), c[i].get_mpz_t(), static_cast<mp_bitcnt_t>((K + 1) * i));
    g = primitive_part(IntPoly(std::move(c)));
  }
  const Rational base = -Rational(pow2(K)), span = Rational(pow2(K + 1));
  auto to_y = [&](const Integer& c, long k) -> Rational {
    Rational t(c, pow2(k));
    t.canonicalize();
    return base + span * t;
  };

  struct Node {
    IntPoly q;
    Integer c;
    long k;
    bool exact_marker;  // emits root at the left endpoint of (c, k) instead
    bool lo_root = false, hi_root = false;  // endpoint is a root of f
  };
  std::vector<Node> stack;
  stack.push_back({g, Integer(0), 0, false});
  while (!stack.empty()) {
    deadline.check();
    Node nd = std::move(stack.back());
    stack.pop_back();
    if (nd.exact_marker) {
      res.roots.push_back(RootInterval::exact(to_y(nd.c, nd.k)));
      continue;
    }
    ++res.stats.nodes;
    res.stats.max_depth = std::max(res.stats.max_depth, nd.k);
    if (nd.q.degree() < 1) continue;
    const int v = detail::variations_unit(nd.q);
    if (v == 0) continue;
    // Emit at unit width or below, away from roots.
    if (v == 1 && nd.k >= K + 1 && !nd.lo_root && !nd.hi_root) {
      res.roots.push_back(RootInterval::open(to_y(nd.c, nd.k), to_y(nd.c + 1, nd.k)));
      continue;
    }
    IntPoly ql = detail::half_scale(nd.q);
    IntPoly qr = taylor_shift(ql, Integer(1));
    Integer cl = 2 * nd.c, cr = cl + 1;
    bool mid_root = sgn(qr[0]) == 0;
    if (mid_root) {
      qr = detail::divide_by_t(qr);
      ql = detail::divide_by_t_minus_one(ql);
    }
    stack.push_back({std::move(qr), cr, nd.k + 1, false, mid_root, nd.hi_root});
    if (mid_root) stack.push_back({IntPoly(), cr, nd.k + 1, true});
    stack.push_back({std::move(ql), cl, nd.k + 1, false, nd.lo_root, mid_root});
  }
  for (const auto& r : res.roots)
    res.stats.max_endpoint_bits =
        std::max({res.stats.max_endpoint_bits, detail::rational_bits(r.lo), detail::rational_bits(r.hi)});
  return res;
}

/// Isolates the distinct real roots of f, with multiplicities from the
/// square-free factorization.
inline IsolationResult isolate(const IntPoly& f, const Deadline& deadline = {}) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "isolate of 0");
  if (f.degree() < 1) throw Error(ErrorKind::InvalidInput, "isolate: degree < 1");
  auto sqf = yun_squarefree_factorization(f);
  IntPoly C = IntPoly::constant(Integer(1));
  for (const auto& fac : sqf.factors) C *= fac.factor;
  IsolationResult res = isolate_squarefree(C, deadline);
  if (sqf.factors.size() > 1) {
    for (auto& r : res.roots) {
      for (const auto& fac : sqf.factors) {
        bool here = r.is_exact() ? sign_at_rational(fac.factor, r.lo) == 0
                                 : sign_at_rational(fac.factor, r.lo) * sign_at_rational(fac.factor, r.hi) < 0;
        if (here) {
          r.multiplicity = fac.multiplicity;
          break;
        }
      }
    }
  } else if (!sqf.factors.empty()) {
    for (auto& r : res.roots) r.multiplicity = sqf.factors[0].multiplicity;
  }
  return res;
}

/// Shrinks an isolating interval of a root of square-free f to width <= 2^-L.
/// Alternates Newton-guided brackets with bisection; the result is contained
/// in the input and keeps f(lo) f(hi) < 0, or becomes exact.
inline RootInterval refine(const IntPoly& f, const RootInterval& r, long L, const Deadline& deadline = {}) {
  if (r.is_exact()) return r;
  Rational lo = r.lo, hi = r.hi;
  int slo = sign_at_rational(f, lo), shi = sign_at_rational(f, hi);
  if (slo == 0) return RootInterval::exact(lo, r.multiplicity);
  if (shi == 0) return RootInterval::exact(hi, r.multiplicity);
  if (slo == shi) throw Error(ErrorKind::NotIsolating, "refine: no sign change on interval");
  const Rational target = pow2_rational(-L);
  const IntPoly df = f.derivative();
  long accel = 2;  // bracket is width / 2^accel around the Newton iterate
  while (hi - lo > target) {
    deadline.check();
    Rational w = hi - lo;
    Rational m = (lo + hi) / 2;
    bool advanced = false;
    Rational dfm = eval_at_rational(df, m);
    if (sgn(dfm) != 0) {
      Rational x = m - eval_at_rational(f, m) / dfm;
      if (lo < x && x < hi) {
        // Snap to the dyadic grid of the bracket width.
        long e = floor_lg(floor(Rational(1) / w + 1)) + accel;
        Rational eps = pow2_rational(-e);
        Rational a = Rational(floor(x / eps)) * eps;
        Rational blo = std::max(lo, Rational(a - eps)), bhi = std::min(hi, Rational(a + eps));
        if (blo < bhi) {
          int sa = sign_at_rational(f, blo), sb = sign_at_rational(f, bhi);
          if (sa == 0) return RootInterval::exact(blo, r.multiplicity);
          if (sb == 0) return RootInterval::exact(bhi, r.multiplicity);
          if (sa != sb) {
            lo = blo;
            hi = bhi;
            slo = sa;
            advanced = true;
            accel = std::min<long>(accel * 2, 1L << 20);
          }
        }
      }
    }
    if (!advanced) {
      accel = std::max<long>(2, accel / 2);
      int sm = sign_at_rational(f, m);
      if (sm == 0) return RootInterval::exact(m, r.multiplicity);
      if (sm == slo)
        lo = m;
      else
        hi = m;
    }
  }
  return RootInterval::open(lo, hi, r.multiplicity);
}

}  // namespace algroot
