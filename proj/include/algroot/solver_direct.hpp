#pragma once

// Direct root isolation for B_alpha: Sturm sequences over Z(alpha)[y], and
// Descartes bisection on interval approximations of the coefficients
// (bitstream) with a doubling precision schedule.

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "algroot/bounds.hpp"
#include "algroot/solver_indirect.hpp"

namespace algroot {

// ---------------------------------------------------------------------------
// Sturm

/// Sturm sequence of (B_alpha, dB_alpha/dy), evaluated through sign_at.
class SturmCounter {
 public:
  explicit SturmCounter(const AlgPoly& B) : B_(B) {
    const RealAlgebraic& a = B.alpha();
    const IntPoly& A = a.poly();
    auto sign_of = [&](const IntPoly& p) { return a.sign_at(p); };
    const BiPoly& b = B.bipoly();
    if (b.degree() < 1) {
      elems_.push_back(b);
      signs_.push_back(1);
      return;
    }
    auto S = signed_remainder_seq(b, derivative_y(b));
    std::vector<int> s = sturm_signs(S, sign_of);
    if (!s.empty()) {
      for (std::size_t k = 0; k < S.size(); ++k) {
        elems_.emplace_back(reduce_mod_A(S.elements[k].coeffs(), A));
        signs_.push_back(s[k]);
      }
      return;
    }
    // Some subresultant leading coefficient vanishes at alpha: run the
    // remainder sequence in Q(alpha)[y] directly.
    fallback_ = true;
    auto trim = [&](BiPoly p) {
      std::vector<IntPoly> c(p.coeffs());
      while (!c.empty() && sign_of(c.back()) == 0) c.pop_back();
      Integer g = 0;
      for (const auto& x : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), content(x).get_mpz_t());
      if (g > 1)
        for (auto& x : c) x = exact_div(x, g);
      return BiPoly(std::move(c));
    };
    BiPoly u0 = trim(BiPoly(reduce_mod_A(b.coeffs(), A)));
    BiPoly u1 = trim(BiPoly(reduce_mod_A(derivative_y(b).coeffs(), A)));
    elems_ = {u0, u1};
    signs_ = {1, 1};
    while (true) {
      const BiPoly& f = elems_[elems_.size() - 2];
      const BiPoly& g = elems_.back();
      if (g.degree() < 1) break;
      const int delta = f.degree() - g.degree();
      BiPoly r = prem(f, g);
      int s = sign_of(g.lc());
      if ((delta + 1) % 2 != 0 && s < 0) r = -r;
      r = trim(BiPoly(reduce_mod_A((-r).coeffs(), A)));
      if (r.is_zero()) break;
      elems_.push_back(std::move(r));
      signs_.push_back(1);
    }
  }

  /// Sign variations of the sequence at y = q.
  int variations(const Rational& q) const {
    std::vector<int> v;
    v.reserve(elems_.size());
    for (std::size_t k = 0; k < elems_.size(); ++k)
      v.push_back(signs_[k] * B_.alpha().sign_at(substitute_y(elems_[k], q)));
    return sign_variations(v);
  }
  int variations(Infinity at) const {
    std::vector<int> v;
    for (std::size_t k = 0; k < elems_.size(); ++k) {
      int s = signs_[k] * B_.alpha().sign_at(elems_[k].lc());
      if (at == Infinity::Minus && elems_[k].degree() % 2 != 0) s = -s;
      v.push_back(s);
    }
    return sign_variations(v);
  }
  /// Number of roots of B_alpha in the open interval (a, b).
  int count_open(const Rational& a, const Rational& b) const {
    if (!(a < b)) return 0;
    return variations(a) - variations(b) - (endpoint_sign(B_, b) == 0 ? 1 : 0);
  }
  std::size_t length() const { return elems_.size(); }
  bool used_fallback() const { return fallback_; }

 private:
  AlgPoly B_;
  std::vector<BiPoly> elems_;
  std::vector<int> signs_;
  bool fallback_ = false;
};

/// K with every root of B_alpha strictly inside (-2^K, 2^K), from
/// 1 + max|b_i(alpha)| / |b_n(alpha)| on certified enclosures.
inline long certified_root_bound_log(const AlgPoly& B) {
  if (B.n() < 1) return 0;
  for (long L = 16;; L *= 2) {
    auto enc = coeff_enclosures(B, L);
    if (enc.back().contains_zero()) continue;
    Rational mx = 0;
    for (int i = 0; i < B.n(); ++i) mx = std::max(mx, enc[static_cast<std::size_t>(i)].magnitude().to_rational());
    Rational bound = 1 + mx / enc.back().mignitude().to_rational();
    return ceil_lg(ceil(bound)) + 1;
  }
}

inline Rational dyadic_point(long K, const Integer& c, long k) {
  // -2^K + 2^(K+1) c / 2^k
  return -pow2_rational(K) + Rational(c) * pow2_rational(K + 1 - k);
}

inline IsolationResult sturm_isolate(const AlgPoly& B, const SolveOptions& opt = {}) {
  detail::require_square_free(B, opt);
  IsolationResult res;
  res.stats.engine = "sturm";
  if (B.n() < 1) return res;
  SturmCounter S(B);
  res.stats.sequence_length = static_cast<long>(S.length());
  const long K = certified_root_bound_log(B);

  struct Node {
    Integer c;
    long k;
    int vlo, vhi;  // variations at the endpoints
    int count;     // roots in the open interval
    bool lo_root, hi_root, marker;
  };
  const Rational y0 = dyadic_point(K, 0, 0), y1 = dyadic_point(K, 1, 0);
  int v0 = S.variations(y0), v1 = S.variations(y1);
  std::vector<Node> stack{{Integer(0), 0, v0, v1, v0 - v1, false, false, false}};
  while (!stack.empty()) {
    opt.deadline.check();
    Node nd = std::move(stack.back());
    stack.pop_back();
    if (nd.marker) {
      res.roots.push_back(RootInterval::exact(dyadic_point(K, nd.c, nd.k)));
      continue;
    }
    ++res.stats.nodes;
    res.stats.max_depth = std::max(res.stats.max_depth, nd.k);
    if (nd.count == 0) continue;
    if (nd.count == 1 && !nd.lo_root && !nd.hi_root) {
      res.roots.push_back(
          RootInterval::open(dyadic_point(K, nd.c, nd.k), dyadic_point(K, nd.c + 1, nd.k)));
      continue;
    }
    const Integer cl = 2 * nd.c, cr = cl + 1;
    const long k = nd.k + 1;
    const Rational mid = dyadic_point(K, cr, k);
    const int vm = S.variations(mid);
    const bool root = endpoint_sign(B, mid) == 0;
    const int cleft = nd.vlo - vm - (root ? 1 : 0);
    const int cright = nd.count - cleft - (root ? 1 : 0);
    stack.push_back({cr, k, vm, nd.vhi, cright, root, nd.hi_root, false});
    if (root) stack.push_back({cr, k, 0, 0, 0, false, false, true});
    stack.push_back({cl, k, nd.vlo, vm, cleft, nd.lo_root, root, false});
  }
  for (const auto& r : res.roots)
    res.stats.max_endpoint_bits =
        std::max({res.stats.max_endpoint_bits, detail::rational_bits(r.lo), detail::rational_bits(r.hi)});
  return res;
}

// ---------------------------------------------------------------------------
// Bitstream Descartes

enum class VerdictKind { Zero, One, AtLeast, Unknown };

inline const char* to_string(VerdictKind v) {
  switch (v) {
    case VerdictKind::Zero: return "Zero";
    case VerdictKind::One: return "One";
    case VerdictKind::AtLeast: return "AtLeast";
    case VerdictKind::Unknown: return "Unknown";
  }
  return "?";
}

struct Verdict {
  VerdictKind kind;
  int min_variations;
  int max_variations;
};

namespace detail {

/// Possible signs of each coefficient: bit 0 negative, bit 1 zero, bit 2 positive.
inline int sign_set(int lo_sign, int hi_sign) {
  int s = 0;
  if (lo_sign < 0) s |= 1;
  if (lo_sign <= 0 && hi_sign >= 0) s |= 2;
  if (hi_sign > 0) s |= 4;
  return s;
}

inline Verdict verdict_from_sign_sets(const std::vector<int>& sets) {
  constexpr int INF = 1 << 29;
  // state: 0 no nonzero sign yet, 1 last negative, 2 last positive
  int mn[3] = {0, INF, INF}, mx[3] = {0, -INF, -INF};
  for (int s : sets) {
    int nmn[3] = {INF, INF, INF}, nmx[3] = {-INF, -INF, -INF};
    for (int st = 0; st < 3; ++st) {
      if (mn[st] == INF) continue;
      auto relax = [&](int to, int add) {
        nmn[to] = std::min(nmn[to], mn[st] + add);
        nmx[to] = std::max(nmx[to], mx[st] + add);
      };
      if (s & 2) relax(st, 0);
      if (s & 1) relax(1, st == 2 ? 1 : 0);
      if (s & 4) relax(2, st == 1 ? 1 : 0);
    }
    std::copy(nmn, nmn + 3, mn);
    std::copy(nmx, nmx + 3, mx);
  }
  int lo = std::min({mn[0], mn[1], mn[2]}), hi = std::max({mx[0], mx[1], mx[2]});
  VerdictKind k;
  if (hi == 0)
    k = VerdictKind::Zero;
  else if (lo == 1 && hi == 1)
    k = VerdictKind::One;
  else if (lo >= 2)
    k = VerdictKind::AtLeast;
  else
    k = VerdictKind::Unknown;
  return {k, lo, hi};
}

/// Polynomial with interval coefficients [lo_i, hi_i] * 2^exp.
struct IntervalPoly {
  std::vector<Integer> lo, hi;
  long exp = 0;

  int degree() const { return static_cast<int>(lo.size()) - 1; }

  void shift(const Integer& c) {  // p(t + c)
    const std::size_t n = lo.size();
    const bool neg = sgn(c) < 0;
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = n - 1; j-- > i;) {
        if (neg) {
          lo[j] += c * hi[j + 1];
          hi[j] += c * lo[j + 1];
        } else {
          lo[j] += c * lo[j + 1];
          hi[j] += c * hi[j + 1];
        }
      }
  }
  void shift_one() {
    const std::size_t n = lo.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = n - 1; j-- > i;) {
        lo[j] += lo[j + 1];
        hi[j] += hi[j + 1];
      }
  }
  void scale_powers(long step, long offset_deg) {  // coeff i *= 2^(step * (offset_deg - i)) or 2^(step*i)
    const int n = degree();
    for (int i = 0; i <= n; ++i) {
      long e = offset_deg < 0 ? step * i : step * (offset_deg - i);
      mpz_mul_2exp(lo[i].get_mpz_t(), lo[i].get_mpz_t(), static_cast<mp_bitcnt_t>(e));
      mpz_mul_2exp(hi[i].get_mpz_t(), hi[i].get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    }
  }
  /// Keeps about W significant bits relative to the largest coefficient.
  void truncate(long W) {
    std::size_t M = 1;
    for (std::size_t i = 0; i < lo.size(); ++i) M = std::max({M, bitsize(lo[i]), bitsize(hi[i])});
    long s = static_cast<long>(M) - W;
    if (s <= 0) return;
    for (std::size_t i = 0; i < lo.size(); ++i) {
      mpz_fdiv_q_2exp(lo[i].get_mpz_t(), lo[i].get_mpz_t(), static_cast<mp_bitcnt_t>(s));
      mpz_cdiv_q_2exp(hi[i].get_mpz_t(), hi[i].get_mpz_t(), static_cast<mp_bitcnt_t>(s));
    }
    exp += s;
  }
  void divide_by_t() {
    lo.erase(lo.begin());
    hi.erase(hi.begin());
  }
  void divide_by_t_minus_one() {
    const std::size_t n = lo.size();
    std::vector<Integer> ql(n - 1), qh(n - 1);
    Integer al = 0, ah = 0;
    for (std::size_t i = n - 1; i >= 1; --i) {
      al += lo[i];
      ah += hi[i];
      ql[i - 1] = al;
      qh[i - 1] = ah;
    }
    lo = std::move(ql);
    hi = std::move(qh);
  }
  bool constant_may_vanish() const { return sgn(lo[0]) <= 0 && sgn(hi[0]) >= 0; }

  /// Verdict for the roots in (0, 1): signs of (1+t)^n p(1/(1+t)).
  Verdict verdict() const {
    IntervalPoly r;
    r.lo.assign(lo.rbegin(), lo.rend());
    r.hi.assign(hi.rbegin(), hi.rend());
    r.shift_one();
    std::vector<int> sets;
    sets.reserve(r.lo.size());
    for (std::size_t i = 0; i < r.lo.size(); ++i) sets.push_back(sign_set(sgn(r.lo[i]), sgn(r.hi[i])));
    return verdict_from_sign_sets(sets);
  }
};

}  // namespace detail

/// Certified verdict on the number of sign variations of any polynomial whose
/// coefficients lie in the given intervals.
inline Verdict variation_verdict(const std::vector<DyadicInterval>& coeffs) {
  std::vector<int> sets;
  sets.reserve(coeffs.size());
  for (const auto& c : coeffs) sets.push_back(detail::sign_set(c.lo().sign(), c.hi().sign()));
  return detail::verdict_from_sign_sets(sets);
}

struct AuditRecord {
  Rational lo, hi;
  VerdictKind verdict;
  long precision;
};

struct BitstreamOptions {
  SolveOptions solve;
  long initial_precision = 0;  // 0: chosen from the instance
  long precision_cap = 0;      // 0: derived from Sigma_B and tau_B
  std::function<void(const AuditRecord&)> audit;
};

/// Precision cap: a constant multiple of Sigma_B + n tau_B.
inline long bitstream_precision_cap(const AlgPoly& B) {
  BoundReport d = direct_bounds(params_of(B));
  Integer v = ceil(d.at("Sigma_B") + Rational(B.n()) * d.at("tau_B"));
  return 4 * v.get_si() + 256;
}

namespace detail {

struct BitstreamRun {
  std::optional<std::vector<RootInterval>> roots;  // empty: need more precision
};

inline BitstreamRun bitstream_attempt(const AlgPoly& B, long K, long L, const BitstreamOptions& opt,
                                      IsolationStats& stats) {
  const int n = B.n();
  auto enc = coeff_enclosures(B, L);
  if (enc.back().contains_zero()) return {};
  IntervalPoly g;
  g.exp = -(L + 1);
  for (const auto& e : enc) {
    // Outward onto the 2^exp grid.
    g.lo.push_back(e.lo().scaled_to(g.exp));
    const Dyadic& h = e.hi();
    long d = h.exponent() - g.exp;
    g.hi.push_back(d >= 0 ? shift_left(h.mantissa(), d) : shift_right_ceil(h.mantissa(), -d));
  }
  const long W = L;
  g.shift(-pow2(K));
  g.scale_powers(K + 1, -1);
  g.truncate(W);

  struct Node {
    IntervalPoly q;
    Integer c;
    long k;
    bool lo_root, hi_root, marker;
  };
  std::vector<RootInterval> roots;
  std::vector<Node> stack;
  stack.push_back({std::move(g), Integer(0), 0, false, false, false});
  const long depth_budget = L + K + 4;
  while (!stack.empty()) {
    opt.solve.deadline.check();
    Node nd = std::move(stack.back());
    stack.pop_back();
    if (nd.marker) {
      roots.push_back(RootInterval::exact(dyadic_point(K, nd.c, nd.k)));
      continue;
    }
    ++stats.nodes;
    stats.max_depth = std::max(stats.max_depth, nd.k);
    if (nd.q.degree() < 1) continue;
    Verdict v = nd.q.verdict();
    if (opt.audit && (v.kind == VerdictKind::Zero || v.kind == VerdictKind::One))
      opt.audit({dyadic_point(K, nd.c, nd.k), dyadic_point(K, nd.c + 1, nd.k), v.kind, L});
    if (v.kind == VerdictKind::Unknown) return {};
    if (v.kind == VerdictKind::Zero) continue;
    if (v.kind == VerdictKind::One && !nd.lo_root && !nd.hi_root) {
      roots.push_back(RootInterval::open(dyadic_point(K, nd.c, nd.k), dyadic_point(K, nd.c + 1, nd.k)));
      continue;
    }
    if (nd.k >= depth_budget) return {};
    IntervalPoly ql = nd.q;
    ql.scale_powers(1, ql.degree());
    IntervalPoly qr = ql;
    qr.shift_one();
    const Integer cl = 2 * nd.c, cr = cl + 1;
    const long k = nd.k + 1;
    bool root = false;
    if (qr.constant_may_vanish()) root = endpoint_sign(B, dyadic_point(K, cr, k)) == 0;
    if (root) {
      qr.divide_by_t();
      ql.divide_by_t_minus_one();
    }
    ql.truncate(W);
    qr.truncate(W);
    stack.push_back({std::move(qr), cr, k, root, nd.hi_root, false});
    if (root) stack.push_back({IntervalPoly(), cr, k, false, false, true});
    stack.push_back({std::move(ql), cl, k, nd.lo_root, root, false});
  }
  return {std::move(roots)};
}

}  // namespace detail

inline IsolationResult bitstream_isolate(const AlgPoly& B, const BitstreamOptions& opt = {}) {
  detail::require_square_free(B, opt.solve);
  IsolationResult res;
  res.stats.engine = "bitstream-descartes";
  if (B.n() < 1) return res;
  const long K = certified_root_bound_log(B);
  const long cap = opt.precision_cap > 0 ? opt.precision_cap : bitstream_precision_cap(B);
  long L = opt.initial_precision > 0 ? opt.initial_precision : 64 + B.n() * (K + 2);
  while (true) {
    res.stats.max_precision = L;
    auto run = detail::bitstream_attempt(B, K, L, opt, res.stats);
    if (run.roots) {
      res.roots = std::move(*run.roots);
      break;
    }
    ++res.stats.restarts;
    if (2 * L > cap) {
      if (L >= cap)
        throw Error(ErrorKind::PrecisionCapExceeded,
                    "precision " + std::to_string(L) + " reached the cap " + std::to_string(cap));
      L = cap;
    } else {
      L *= 2;
    }
  }
  for (const auto& r : res.roots)
    res.stats.max_endpoint_bits =
        std::max({res.stats.max_endpoint_bits, detail::rational_bits(r.lo), detail::rational_bits(r.hi)});
  return res;
}

// ---------------------------------------------------------------------------

enum class Method { Indirect, Sturm, Bitstream };

inline const char* to_string(Method m) {
  switch (m) {
    case Method::Indirect: return "indirect";
    case Method::Sturm: return "sturm";
    case Method::Bitstream: return "bitstream";
  }
  return "?";
}

inline Method parse_method(const std::string& s) {
  if (s == "indirect") return Method::Indirect;
  if (s == "sturm") return Method::Sturm;
  if (s == "bitstream") return Method::Bitstream;
  throw Error(ErrorKind::InvalidInput, "unknown method: " + s);
}

inline IsolationResult isolate_roots(const AlgPoly& B, Method m, const SolveOptions& opt = {}) {
  switch (m) {
    case Method::Indirect: return indirect_isolate(B, opt).first;
    case Method::Sturm: return sturm_isolate(B, opt);
    case Method::Bitstream: {
      BitstreamOptions bo;
      bo.solve = opt;
      return bitstream_isolate(B, bo);
    }
  }
  throw Error(ErrorKind::InvalidInput, "unknown method");
}

}  // namespace algroot
